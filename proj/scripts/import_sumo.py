#!/usr/bin/env python3
"""Convert WordNet-to-SUMO mapping files to the attribute map format.

The mapping distribution (e.g. WordNetMappings30-adj.txt) repeats the WordNet
data line layout and appends the SUMO concept as `&%Concept=` / `&%Concept+`.
Every lemma of the synset is labeled with that concept:

    word<TAB>Concept1,Concept2,...

Usage: import_sumo.py WordNetMappings30-adj.txt > sumo_attributes.tsv
"""

import re
import sys
from collections import defaultdict

SUMO = re.compile(r"&%(\w+)[=+@\[\]:]")


def main() -> int:
    if len(sys.argv) != 2:
        print(__doc__, file=sys.stderr)
        return 2
    attrs = defaultdict(set)
    with open(sys.argv[1], encoding="utf-8", errors="replace") as handle:
        for line in handle:
            if not line[:1].isdigit():
                continue
            concepts = SUMO.findall(line)
            if not concepts:
                continue
            fields = line.split(" ")
            try:
                w_cnt = int(fields[3], 16)
            except (ValueError, IndexError):
                continue
            for i in range(w_cnt):
                lemma = fields[4 + 2 * i].split("(")[0].lower()
                attrs[lemma].update(concepts)
    for lemma in sorted(attrs):
        print(f"{lemma}\t{','.join(sorted(attrs[lemma]))}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
