"""Eggbox diagrams for a few standard semigroups.

Run:  python3 demos/eggbox_gallery.py
Pipe the --dot variant of the CLI into graphviz for pictures.
"""
from semigreen import green_classes
from semigreen.corpus import brandt_b2, full_transformation_monoid, rees_z2
from semigreen.formats import emit_eggbox

for name, S in [("B2", brandt_b2()),
                ("T3", full_transformation_monoid(3)[0]),
                ("Rees matrix over Z2", rees_z2())]:
    G = green_classes(S)
    print(f"## {name}: order {S.n}, {G.count('D')} D-classes\n")
    print(emit_eggbox(S, G))
