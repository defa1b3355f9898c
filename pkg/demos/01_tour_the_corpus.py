"""A first walk through the corpus.

Thirty-nine equisingularity classes of irreducible plane sextics carry only
A_n singularities and reach the maximal total Milnor number 19.  The corpus
stores an explicit rational parametrization for each class, over the
smallest field that admits one, together with the claimed singularity types
and the parameter values carrying them.
"""

from sextic19.database import load_corpus

records = load_corpus()

print("%d curves\n" % len(records))
for rec in records:
    flags = ", ".join(k for k, v in rec.flags.items() if v)
    print(rec.describe() + ("   [%s]" % flags if flags else ""))

# Every multiset sums to 19 with exactly one odd index: the odd one is the
# unique singular point with two local branches.
print("\nMilnor numbers per class:")
for rec in records[:6]:
    delta = sum((n + 1) // 2 for n in rec.multiset)
    print("  %2d: %-22s  sum = %d, delta sum = %d"
          % (rec.id, "+".join("A_%d" % n for n in rec.multiset),
             sum(rec.multiset), delta))

# A closer look at one record: the A_17 + A_2 curve lives over Q.
rec = records[2]
print("\ncurve 3:")
print("  x(t) =", rec.x.to_str())
print("  y(t) =", rec.y.to_str())
print("  z(t) =", rec.z.to_str())
print("  two-branch A_17 at the roots of", rec.p.to_str())
print("  one-branch A_2 at t = infinity")
print("  image of the A_17 pair:",
      rec.curve.evaluate(rec.odd_claim.location)[0][1])
