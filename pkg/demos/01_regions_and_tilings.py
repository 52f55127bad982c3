#!/usr/bin/env python3
"""Build triangular regions, inspect punctures, and count lozenge tilings.

A monomial ideal in K[x, y, z] cuts a side-d triangular region out of the
full triangle: upward unit triangles are labeled by the degree d-1
monomials outside the ideal, downward ones by the degree d-2 monomials.
Each minimal generator of degree below d removes an upward triangle of
side d - degree, its puncture.
"""

import json
import os

from triregion import (
    RenderOptions,
    build_region,
    enumerate_tilings,
    find_tiling,
    parse_ideal,
    puncture_list,
    region_json,
    region_svg,
    tiling_svg,
    triangle_counts,
)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)


def show(title, ideal_text, d):
    ideal = parse_ideal(ideal_text)
    region = build_region(ideal, d)
    down, up, balance = triangle_counts(region)
    print(f"== {title}: side {d} region of ({ideal})")
    print(f"   {down} down / {up} up triangles -> {balance.value}")
    for p in puncture_list(region):
        kind = "floating" if p.floating else "boundary/anchored"
        print(f"   puncture at {p.generator}: side {p.side_length} ({kind})")
    count = enumerate_tilings(region)
    print(f"   lozenge tilings: {count.count}{'' if count.exact else '+'}")
    return region


# A small hexagonal core: two tilings, both found by the matcher.
hexagon = show("hexagon", "x^2, y^2, z^2", 3)
tiling = find_tiling(hexagon)
print("   one tiling:", [(str(l.down_label), str(l.up_label)) for l in tiling.sorted_lozenges()])

# A region whose tiling is forced lozenge by lozenge.
chain = show("forced chain", "xy, y^2, z^3", 4)

# Corner punctures of sides 2+2+2 leave a hexagon with 20 tilings.
show("punctured hexagon", "x^4, y^4, z^4", 6)

# SVG artifacts for the two small regions.
with open(os.path.join(OUT, "hexagon_region.svg"), "w") as fh:
    fh.write(region_svg(hexagon, RenderOptions(show_labels=True)))
with open(os.path.join(OUT, "hexagon_tiling.svg"), "w") as fh:
    fh.write(tiling_svg(hexagon, tiling))
with open(os.path.join(OUT, "chain_region.json"), "w") as fh:
    json.dump(region_json(chain), fh, indent=2)
print(f"wrote SVG/JSON artifacts to {OUT}/")
