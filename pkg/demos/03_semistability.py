#!/usr/bin/env python3
"""Syzygy-bundle semistability via puncture arithmetic and tileability.

For an Artinian ideal whose generators have degrees at most d, three
conditions on the side-d region are coupled so that any two imply the
third: perfectly punctured (puncture sides sum to d), tileable, and
semistable syzygy bundle.  Perfectly punctured regions therefore decide
semistability by a single matching computation, and a tileable region that
is not perfectly punctured refutes it.
"""

from triregion import (
    build_region,
    criterion_check,
    decide_semistability,
    overpuncturing_ideal,
    parse_ideal,
    two_of_three,
)

CASES = [
    ("x^7, x^4y^2z^2, xy^3z^3, y^7, z^7", 9),
    ("x^6, y^7, z^8, xy^5z, xy^2z^3, x^3y^2z", 8),
    ("xy^3z^2, x^10, y^10, z^10", 10),
]

for text, d in CASES:
    ideal = parse_ideal(text)
    print(f"== ({ideal}) at side {d}")
    print(f"   over-puncturing coefficient: {overpuncturing_ideal(ideal, d)}")
    coupling = two_of_three(build_region(ideal, d))
    print(
        f"   perfectly punctured: {coupling.perfectly_punctured}, "
        f"no over-punctured subregion: {coupling.no_overpunctured_subregion}, "
        f"tileable: {coupling.tileable}"
    )
    if coupling.overpunctured_witness is not None:
        print(f"   over-punctured subregion at {coupling.overpunctured_witness}")
    print(f"   semistability verdict: {decide_semistability(ideal, d).value}")

# The degree-based criteria, on the first ideal: all numeric conditions
# except the parity of the floating puncture side lengths.
report = criterion_check(parse_ideal(CASES[0][0]))
print("== criterion breakdown for the first ideal")
print(
    f"   d={report.d} integer={report.cond_integer} degrees-below={report.cond_degrees_below}"
    f" lcm-weak={report.cond_lcm_weak} lcm-strong={report.cond_lcm_strong}"
    f" parity={report.cond_parity}"
)
print(f"   parity offenders: {[str(m) for m in report.parity_offenders]}")
print(f"   weak-criterion verdicts: wlp={report.wlp_verdict} semistable={report.semistable_verdict}")
