"""Two small subsemigroups of the Brandt semigroup B2 where Green's
relations of the subsemigroup differ from the restriction of those of B2.

Run:  python3 demos/brandt_counterexamples.py
"""
from semigreen import closure, green_classes
from semigreen.corpus import brandt_b2
from semigreen.inheritance import inheritance_report, leqr_inheritance_check

S = brandt_b2()
G = green_classes(S)
lab = S.label
e, f, a = S.index("e"), S.index("f"), S.index("a")

print("B2 has", G.count("D"), "D-classes:",
      [[lab(x) for x in c] for c in G.classes("D")])

# <e, f> = {0, e, f} is a regular subsemigroup, so R, L and H are
# inherited, but e and f are D-related only through a and b, which are gone.
U = closure(S, [e, f])
GU = green_classes(U.local)
rep = inheritance_report(S, U, G, GU)
print("\n<e,f> =", [lab(m) for m in U.members])
print("  e D f in B2:", G.related("D", e, f))
print("  e D f in U: ", GU.related("D", U.from_ambient[e], U.from_ambient[f]))
print("  J-classes of U:", GU.count("J"), "(all singletons)")
print("  inherited:", {k: v for k, v in rep.equals.items()})

# <e, a> = {0, e, a} is not regular.  In B2, e = ab, so e <=R a; inside U
# the only right multiples of a are a and 0.
U = closure(S, [e, a])
GU = green_classes(U.local)
le, la = U.from_ambient[e], U.from_ambient[a]
print("\n<e,a> =", [lab(m) for m in U.members])
print("  e <=R a in B2:", bool(G.leq_r[e, a]))
print("  e <=R a in U: ", bool(GU.leq_r[le, la]))
print("  a <=R e in U: ", bool(GU.leq_r[la, le]))
chk = leqr_inheritance_check(S, U, G, GU)
print("  a is not regular in U, so this is a near miss, not a violation:")
for kind, x, y in chk.findings:
    print(f"    {lab(x)} <={kind} {lab(y)} in B2 but not in U")
print("  violations:", chk.violations)
