#!/usr/bin/env python3
"""Convert Roget-style head files to the thesaurus entry format.

Treats every paragraph (blank-line separated block) as one thesaurus entry
and keeps the single-token words in it; punctuation and digits are stripped.
This matches the plain-text head exports where each head groups its words
in one block.

Usage: import_roget.py heads.txt > roget_entries.txt
"""

import re
import sys

WORD = re.compile(r"[A-Za-z][A-Za-z'-]*")


def flush(words):
    unique = list(dict.fromkeys(words))
    if len(unique) >= 2:
        print(" ".join(unique))


def main() -> int:
    if len(sys.argv) != 2:
        print(__doc__, file=sys.stderr)
        return 2
    block: list[str] = []
    with open(sys.argv[1], encoding="utf-8", errors="replace") as handle:
        for line in handle:
            if not line.strip():
                flush(block)
                block = []
                continue
            block.extend(w.lower() for w in WORD.findall(line))
    flush(block)
    return 0


if __name__ == "__main__":
    sys.exit(main())
