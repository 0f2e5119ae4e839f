#!/usr/bin/env python3
"""Convert Lin's dependency-based thesaurus to the thesaurus entry format.

The common mirror of the adjective proximity file (simA.lsp) groups each head
word with scored neighbours:

    (head
      (neighbour1 0.19
       neighbour2 0.17
       ...))

Each head becomes one entry line containing the head and every neighbour with
a score at or above --min-score (default 0, i.e. all of them).

Usage: import_lin.py simA.lsp [--min-score 0.1] > lin_entries.txt
"""

import re
import sys

TOKEN = re.compile(r"[()]|[^\s()]+")


def main() -> int:
    args = [a for a in sys.argv[1:] if not a.startswith("--")]
    min_score = 0.0
    for arg in sys.argv[1:]:
        if arg.startswith("--min-score"):
            min_score = float(arg.split("=", 1)[1]) if "=" in arg else float(
                sys.argv[sys.argv.index(arg) + 1])
    if len(args) not in (1, 2):
        print(__doc__, file=sys.stderr)
        return 2

    with open(args[0], encoding="utf-8", errors="replace") as handle:
        text = handle.read()

    entry: list[str] = []
    pending_word = None
    depth = 0
    for token in TOKEN.findall(text):
        if token == "(":
            depth += 1
            continue
        if token == ")":
            depth -= 1
            if depth <= 0 and len(set(entry)) >= 2:
                print(" ".join(dict.fromkeys(entry)))
                entry = []
                pending_word = None
            continue
        try:
            score = float(token)
        except ValueError:
            if pending_word is not None:
                entry.append(pending_word)  # head words carry no score
            pending_word = token.lower()
            continue
        if pending_word is not None and score >= min_score:
            entry.append(pending_word)
        pending_word = None
    return 0


if __name__ == "__main__":
    sys.exit(main())
