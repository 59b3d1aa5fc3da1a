"""The bicyclic monoid <a, b | ab = 1> is bisimple but not stable.

Elements are kept in normal form b^i a^j.

Run:  python3 demos/bicyclic_monoid.py
"""
from semigreen.bicyclic import (
    A,
    B,
    ONE,
    bicyclic_stability_witnesses,
    closed_form_relations,
    definitional_relations,
    idempotent_chain,
    mrstar_failure_demo,
)

print("ab =", A * B, "  ba =", B * A)

right, left = bicyclic_stability_witnesses()
print(f"\n1 J 1b = {right.product}: {right.j_related}, 1 R 1b: {right.related}")
print(f"1 J a1 = {left.product}: {left.j_related}, 1 L a1: {left.related}")
print("so 1 is neither right- nor left-stable")

print("\nidempotents descend forever:", " > ".join(map(repr, idempotent_chain(5))), "> ...")
print("R-classes descend forever:  ", " > ".join(map(repr, mrstar_failure_demo(5))), "> ...")

elems, rels = definitional_relations(6)
closed = closed_form_relations(elems)
same = all((rels[k] == closed[k]).all() for k in closed)
print(f"\nclosed forms agree with definitions on {len(elems)} elements:", same)
