#!/usr/bin/env python3
"""Convert role-annotated WordNet glosses into the definitions JSONL that
`edam build` reads.

Input is tab-separated, one gloss segment per row:

    apple.n.01<TAB>supertype<TAB>edible fruit
    apple.n.01<TAB>differentia_quality<TAB>with red or yellow or green skin

Rows for the same synset must be contiguous; their order is kept. Role labels
are matched case-insensitively and '-' or ' ' are read as '_'. The term is the
synset's lemma part ("ice_cream.n.01" -> "ice cream") unless a fourth column
gives it explicitly. Lines starting with '#' are ignored.

Output, one record per synset:

    {"term": "apple", "sense": "apple.n.01",
     "segments": [{"role": "supertype", "text": "edible fruit"}, ...]}
"""

import argparse
import json
import sys

ROLES = {
    "supertype",
    "differentia_quality",
    "differentia_event",
    "event_location",
    "purpose",
    "accessory_determiner",
    "origin_location",
}


class ConvertError(Exception):
    pass


def normalize_role(label):
    role = label.strip().lower().replace("-", "_").replace(" ", "_")
    if role not in ROLES:
        raise ConvertError(f"unknown role label '{label}'")
    return role


def term_from_synset(synset):
    # WordNet synset names are lemma.pos.nn; lemmas may contain dots.
    parts = synset.rsplit(".", 2)
    if len(parts) != 3 or not parts[0]:
        raise ConvertError(f"cannot take a lemma from synset '{synset}'")
    return parts[0].replace("_", " ")


def convert(lines, source="<stdin>"):
    """Yields one record dict per synset."""
    current = None
    seen = set()
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        try:
            if len(fields) not in (3, 4):
                raise ConvertError(f"expected 3 or 4 tab-separated fields, got {len(fields)}")
            synset, label, text = (f.strip() for f in fields[:3])
            if not synset:
                raise ConvertError("empty synset")
            if not text:
                raise ConvertError("empty segment text")
            role = normalize_role(label)
            term = fields[3].strip() if len(fields) == 4 else term_from_synset(synset)
        except ConvertError as e:
            raise ConvertError(f"{source}:{lineno}: {e}") from None

        if current is None or current["sense"] != synset:
            if synset in seen:
                raise ConvertError(f"{source}:{lineno}: rows for '{synset}' are not contiguous")
            if current is not None:
                yield current
            seen.add(synset)
            current = {"term": term, "sense": synset, "segments": []}
        current["segments"].append({"role": role, "text": text})
    if current is not None:
        yield current


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("input", nargs="?", default="-", help="annotation TSV, '-' for stdin")
    parser.add_argument("-o", "--output", default="-", help="JSONL output, '-' for stdout")
    args = parser.parse_args(argv)

    src = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
    dst = sys.stdout if args.output == "-" else open(args.output, "w", encoding="utf-8")
    try:
        for record in convert(src, "<stdin>" if args.input == "-" else args.input):
            dst.write(json.dumps(record, ensure_ascii=False) + "\n")
    except ConvertError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    finally:
        if src is not sys.stdin:
            src.close()
        if dst is not sys.stdout:
            dst.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
