#!/usr/bin/env python3
"""Extract antonym pairs and synset attributes from WordNet database files.

Reads the standard `data.adj` (and `data.noun` for attribute names) from a
WordNet `dict/` directory and writes one of:

  antonyms    TSV `a<TAB>b`, one antonym pair per line, from the `!` pointer
              (lemma-level in WordNet; emitted for the specific word pair).
  attributes  TSV `word<TAB>attr1,attr2,...` from the `=` pointer; the
              attribute label is the first lemma of the target noun synset.
  similar     thesaurus entries from the `&` (similar-to) pointer clusters:
              each adjective synset plus its similar synsets on one line.

Usage:
  import_wordnet.py DICTDIR antonyms   > antonym_pairs.tsv
  import_wordnet.py DICTDIR attributes > wn_attributes.tsv
  import_wordnet.py DICTDIR similar    > wn_similar_entries.txt
"""

import sys
from collections import defaultdict
from pathlib import Path


def clean(lemma: str) -> str:
    # strip adjective syntax markers like (p) / (a) / (ip)
    return lemma.split("(")[0].lower()


def parse_data(path: Path):
    """synset offset -> (lemmas, pointers); pointers are (symbol, offset, pos, st)."""
    synsets = {}
    with open(path, encoding="utf-8", errors="replace") as handle:
        for line in handle:
            if line.startswith("  ") or not line.strip():
                continue
            fields = line.split(" ")
            offset = fields[0]
            w_cnt = int(fields[3], 16)
            lemmas = [clean(fields[4 + 2 * i]) for i in range(w_cnt)]
            cursor = 4 + 2 * w_cnt
            p_cnt = int(fields[cursor])
            pointers = []
            for i in range(p_cnt):
                base = cursor + 1 + 4 * i
                pointers.append((fields[base], fields[base + 1], fields[base + 2], fields[base + 3]))
            synsets[offset] = (lemmas, pointers)
    return synsets


def main() -> int:
    if len(sys.argv) != 3 or sys.argv[2] not in ("antonyms", "attributes", "similar"):
        print(__doc__, file=sys.stderr)
        return 2
    dictdir = Path(sys.argv[1])
    mode = sys.argv[2]
    adj = parse_data(dictdir / "data.adj")

    if mode == "antonyms":
        seen = set()
        for offset, (lemmas, pointers) in adj.items():
            for symbol, target, pos, st in pointers:
                if symbol != "!" or pos != "a":
                    continue
                if st == "0000":
                    source_words, target_words = lemmas, adj[target][0]
                else:
                    source_words = [lemmas[int(st[:2], 16) - 1]]
                    target_words = [adj[target][0][int(st[2:], 16) - 1]]
                for a in source_words:
                    for b in target_words:
                        pair = tuple(sorted((a, b)))
                        if a != b and pair not in seen:
                            seen.add(pair)
                            print(f"{pair[0]}\t{pair[1]}")
    elif mode == "attributes":
        noun = parse_data(dictdir / "data.noun")
        attrs = defaultdict(set)
        for offset, (lemmas, pointers) in adj.items():
            for symbol, target, pos, _st in pointers:
                if symbol != "=" or pos != "n":
                    continue
                label = noun[target][0][0]
                for lemma in lemmas:
                    attrs[lemma].add(label)
        for lemma in sorted(attrs):
            print(f"{lemma}\t{','.join(sorted(attrs[lemma]))}")
    else:  # similar
        for offset, (lemmas, pointers) in adj.items():
            words = list(dict.fromkeys(lemmas))
            for symbol, target, pos, _st in pointers:
                if symbol == "&" and pos == "a":
                    words.extend(w for w in adj[target][0] if w not in words)
            if len(words) >= 2:
                print(" ".join(words))
    return 0


if __name__ == "__main__":
    sys.exit(main())
