#!/usr/bin/env python3
"""Convert the Moby thesaurus (mthesaur.txt) to the thesaurus entry format.

Moby ships one comma-separated row per root word:

    root,synonym1,synonym2,...

The output has one entry per line, words space-separated, which is what
`scalemate filter --measure thesaurus` loads. Multi-word synonyms are skipped
because the matcher works on single tokens.

Usage: import_moby.py mthesaur.txt > moby_entries.txt
"""

import sys


def main() -> int:
    if len(sys.argv) != 2:
        print(__doc__, file=sys.stderr)
        return 2
    with open(sys.argv[1], encoding="utf-8", errors="replace") as handle:
        for line in handle:
            words = [w.strip().lower() for w in line.rstrip("\n").split(",")]
            words = [w for w in words if w and " " not in w]
            if len(set(words)) >= 2:
                print(" ".join(dict.fromkeys(words)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
