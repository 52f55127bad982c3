#!/usr/bin/env python3
"""Decide the weak Lefschetz property through bi-adjacency matrix ranks.

The multiplication map by x+y+z between consecutive homogeneous components
of the quotient is, up to transpose, the 0/1 down/up adjacency matrix of
the triangular region in that degree.  The quotient has the weak Lefschetz
property exactly when every one of those matrices has maximal rank; for a
balanced square degree that rank question is a determinant, and the
determinant counts tilings with signs.
"""

from triregion import (
    biadjacency,
    build_region,
    determinant,
    enumerate_tilings,
    has_wlp,
    parse_ideal,
    permanent,
)

CASES = [
    # two corner punctures touch, yet all tilings align and the property holds
    "x^7, x^5yz, xy^3z^3, y^7, z^8",
    # balanced but non-tileable region: the determinant vanishes, no property
    "x^6, y^7, z^8, xy^5z, xy^2z^3, x^3y^2z",
    # four generators, the classic failure
    "x^3, y^3, z^3, xyz",
]

for text in CASES:
    ideal = parse_ideal(text)
    report = has_wlp(ideal)
    print(f"== ({ideal})")
    verdict = "holds" if report.verdict else f"fails at degree {report.failing_degree}"
    print(f"   weak Lefschetz property {verdict}; scanned through degree {report.scanned_through}")
    for record in report.records:
        if record.rows == record.cols and record.rows > 0:
            Z = biadjacency(build_region(ideal, record.d))
            det = determinant(Z)
            per = permanent(Z)
            count = enumerate_tilings(build_region(ideal, record.d)).count
            print(
                f"   square degree {record.d}: det={det} per={per} tilings={count}"
                f" rank={record.rank}/{record.rows}"
            )
