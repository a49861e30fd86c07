#!/usr/bin/env python3
"""Regenerate core/src/case_fold_table.inc.

Emits the sorted (codepoint, folded) pairs used by fold_case(): every
codepoint below LIMIT whose single-codepoint lowercase differs from the
codepoint itself. ASCII is excluded (handled by a fast path in code).
"""
import sys

LIMIT = 0x30000

def main(out_path: str) -> None:
    pairs = []
    for cp in range(0x80, LIMIT):
        ch = chr(cp)
        low = ch.lower()
        if len(low) == 1 and low != ch:
            pairs.append((cp, ord(low)))
    with open(out_path, "w", encoding="utf-8") as f:
        f.write("// Generated by scripts/gen_case_fold.py -- do not edit.\n")
        f.write(f"// {len(pairs)} single-codepoint lowercase mappings, U+0080..U+{LIMIT - 1:X}.\n")
        for i in range(0, len(pairs), 6):
            row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in pairs[i : i + 6])
            f.write(row + ",\n")
    print(f"wrote {len(pairs)} pairs to {out_path}")

if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "core/src/case_fold_table.inc")
