#!/usr/bin/env python3
"""Rebuild the b-file fixtures in tests/fixtures/oeis from the sequences'
defining formulas (exact integers via math.comb and fractions).

The fixtures stand in for downloaded b-files when oeis.org is unreachable;
they are independent of the C++ code and are what it gets reconciled against.

    python3 tools/make_oeis_fixtures.py [outdir]
"""

import sys
from fractions import Fraction
from math import comb
from pathlib import Path


def bracket(t, s):
    """(s+t)/t * C(t,s); t = 0 has no value."""
    value = Fraction(s + t, t) * comb(t, s)
    assert value.denominator == 1
    return int(value)


def catalan_triangle(rows):
    for n in range(rows):
        for k in range(n + 1):
            value = Fraction(n - k + 1, n + 1) * comb(n + k, n)
            assert value.denominator == 1
            yield int(value)


def increasing_pascal(rows):
    for n in range(rows):
        for k in range(n + 1):
            yield 1 if n == 0 else comb(n + k - 1, k)


def d_triangle(rows):
    for n in range(2, rows):
        for k in range(n + 1):
            if k == 0:
                yield 1
            elif k < n:
                yield bracket(n + k - 2, k)
            else:
                yield bracket(2 * n - 2, n - 2)


def ballot(rows):
    for n in range(rows):
        for k in range(n // 2 + 1):
            yield comb(n, k) - (comb(n, k - 1) if k else 0)


def pascal(rows):
    for n in range(rows):
        for k in range(n + 1):
            yield comb(n, k)


def lucas(rows):
    yield 2
    for n in range(1, rows):
        for k in range(n + 1):
            yield comb(n, k) + (comb(n - 1, k - 1) if k else 0)


def d_diagonal(last):
    for n in range(2, last + 1):
        yield bracket(2 * n - 2, n - 2)


SEQUENCES = [
    ("A009766", 0, "T(n,k) = (n-k+1)/(n+1) * C(n+k,n), 0 <= k <= n", catalan_triangle(45)),
    ("A059481", 0, "T(n,k) = C(n+k-1,k), 0 <= k <= n, T(0,0) = 1", increasing_pascal(45)),
    ("A241188", 2, "T(n,0) = 1; T(n,k) = (2k+n-2)/(n+k-2) * C(n+k-2,k) for 0 < k < n; "
                   "T(n,n) = (3n-4)/(2n-2) * C(2n-2,n-2); n >= 2", d_triangle(12)),
    ("A008315", 0, "T(n,k) = C(n,k) - C(n,k-1), 0 <= k <= floor(n/2)", ballot(60)),
    ("A007318", 0, "T(n,k) = C(n,k)", pascal(45)),
    ("A029635", 0, "T(0,0) = 2; T(n,k) = C(n,k) + C(n-1,k-1)", lucas(45)),
    ("A129869", 2, "a(n) = (3n-4)/(2n-2) * C(2n-2,n-2), n >= 2", d_diagonal(40)),
]


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests/fixtures/oeis"
    out.mkdir(parents=True, exist_ok=True)
    for seq_id, offset, formula, terms in SEQUENCES:
        lines = [
            f"# {seq_id}",
            f"# {formula}",
            "# Reconstructed offline from the defining formula by tools/make_oeis_fixtures.py.",
        ]
        lines += [f"{offset + i} {v}" for i, v in enumerate(terms)]
        (out / f"b{seq_id[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
