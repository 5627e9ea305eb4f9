"""Walk through the three ordering heuristics on a small system.

The system {x^4 + y, y^2*z + 1} separates the heuristics nicely: Brown ranks
variables from the input syntax alone, while sotd and ndrr pay for a full
projection per candidate ordering.
"""

from cadorder import (
    PolySystem,
    brown_triple,
    choose,
    format_ordering,
    parse_system,
)

system = parse_system("""
vars: x, y, z
x^4 + y
y^2*z + 1
""")

print("input system:")
for p in system.polynomials:
    print("   ", p)
print()

# Brown's criteria per variable: (degree in input, max total degree of terms
# containing it, number of such terms).  Smaller triple = eliminate earlier.
print("Brown triples:")
for v in system.variables:
    t = brown_triple(system, v)
    print(f"    {v}: ({t.crit1}, {t.crit2}, {t.crit3})")
print()

for heuristic in ("brown", "sotd", "ndrr"):
    report = choose(system, heuristic)
    print(f"{heuristic}:")
    if report.per_ordering is not None:
        for ordering in sorted(report.per_ordering, key=format_ordering):
            print(f"    {format_ordering(ordering)}: {report.per_ordering[ordering]}")
    print("    candidates:", ", ".join(format_ordering(c) for c in report.candidates))
    print("    chosen:    ", format_ordering(report.chosen))
    print()

# A full tie: in {x*y + 1} the variables are interchangeable, so Brown
# returns both orderings and the lexicographic tie-break picks x>y.
tie = PolySystem.make(parse_system("x*y + 1").polynomials)
report = choose(tie, "brown")
print("tie demo {x*y + 1}:", [format_ordering(c) for c in report.candidates],
      "->", format_ordering(report.chosen))
