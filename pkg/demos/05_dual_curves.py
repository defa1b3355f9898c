"""Dual curves and the three autodual classes.

The dual of a parametrized curve is parametrized by the Wronskian minors,
with their common factor removed; its degree is 30 - 19 - k where k is the
number of singular points.  The three classes with k = 5 have duals of
degree six again, and those duals carry the same singularity multiset: the
claims for the dual are discovered from the original's (one-branch types
keep their parameters, the dual's cusps sit at the original's inflections)
and then certified with the same exact machinery.
"""

from sextic19.autodual import certify_autodual, dual_degree_law
from sextic19.curve import dual
from sextic19.database import load_corpus

records = load_corpus()

print("dual degrees (30 - 19 - #Sing):")
for rec in records:
    deg, predicted = dual_degree_law(rec)
    marker = "  <- degree five" if deg == 5 else ""
    assert deg == predicted
    print("  %2d: #Sing = %d, deg dual = %2d%s"
          % (rec.id, rec.singular_point_count(), deg, marker))

print("\nautodual classes:")
for rid in (26, 36, 38):
    rec = records[rid - 1]
    rep = certify_autodual(rec)
    print("  %2d: dual degree %d, certified multiset %s, equal to the "
          "original: %s"
          % (rid, rep["dual_degree"],
             "+".join("A_%d" % n for n in rep["dual_multiset"]),
             rep["multiset_equal"]))

# the dual parametrization itself, for the smallest example
rec = records[32]
d = dual(rec.curve)
print("\ncurve 33 dual components (degree %d):" % d.degree)
for name, comp in zip("xyz", d.components()):
    print("  %s = %s" % (name, comp.to_str()))
