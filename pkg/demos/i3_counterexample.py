"""A regular element e of a subsemigroup U of I3 with e <R f in I3 but
not e <=R f in U.

Maps act on the right and compose left to right.

Run:  python3 demos/i3_counterexample.py
"""
from semigreen import closure, green_classes
from semigreen.core import regular_mask
from semigreen.corpus import I3_E, I3_F, I3_G, i3_full

S, elems = i3_full()
G = green_classes(S)
print("I3 has", S.n, "elements and", G.count("J"), "J-classes (one per rank)")

f, e, g = (elems.index(x) for x in (I3_F, I3_E, I3_G))
print("f =", I3_F.label(), " e =", I3_E.label(), " g =", I3_G.label())
print("fg = e:", S.product(f, g) == e)

U = closure(S, [f, e])
GU = green_classes(U.local)
print("\n<f,e> =", [elems[m].label() for m in U.members], f"(order {len(U)})")
le, lf = U.from_ambient[e], U.from_ambient[f]
print("e regular in U:", bool(regular_mask(U.local)[le]))
print("f regular in U:", bool(regular_mask(U.local)[lf]))
print("e <=R f in I3:", bool(G.leq_r[e, f]), "  f <=R e in I3:", bool(G.leq_r[f, e]))
print("e <J f in I3 (rank drops):", bool(G.leq_j[e, f] and not G.leq_j[f, e]))
print("e <=R f in U:", bool(GU.leq_r[le, lf]), " (g is not in U)")
