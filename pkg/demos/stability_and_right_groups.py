"""Every finite semigroup is stable; simple ones are completely simple,
and right-simple ones are right groups.

Run:  python3 demos/stability_and_right_groups.py
"""
from semigreen.corpus import corpus, right_group, right_zero
from semigreen.stability import classify_simple, right_group_decomposition, stability_report

print(f"{'member':16} " + " ".join(f"{k:>11}" for k in stability_report(right_zero(1)).flags()))
for entry in corpus():
    flags = stability_report(entry.build()).flags()
    print(f"{entry.name:16} " + " ".join(f"{str(v):>11}" for v in flags.values()))

print("\nsimple members:")
for entry in corpus():
    c = classify_simple(entry.build())
    if c.simple:
        print(f"  {entry.name:12} stable={c.stable} completely_simple={c.completely_simple} "
              f"x R xy L y={c.r_xy_l}")

for name, S in [("Z2 x right-zero(2)", right_group()), ("right-zero(3)", right_zero(3))]:
    d = right_group_decomposition(S)
    print(f"\n{name}: group of order {d.group_order} x right-zero of order "
          f"{d.right_zero_order}")
