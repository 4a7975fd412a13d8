#!/usr/bin/env python3
"""Tabulate the largest independence root of every tree of one order, sorted.

Shows how close the roots of incomparable trees can sit (third decimal at
order 8) and which trees share a polynomial.
"""

import argparse

from indroots.canon import canonical_key
from indroots.engine import indpoly
from indroots.enumeration import trees
from indroots.poly import format_poly
from indroots.roots import xi


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("--digits", type=int, default=12)
    args = ap.parse_args()
    rows = []
    for T in trees(args.n):
        iv = xi(T)
        lo, _ = iv.decimal_enclosure(args.digits)
        rows.append((lo, iv.render(args.digits), canonical_key(T).decode(), format_poly(indpoly(T))))
    for _, text, key, poly in sorted(rows):
        print(f"{text:32s} {key:12s} {poly}")


if __name__ == "__main__":
    main()
