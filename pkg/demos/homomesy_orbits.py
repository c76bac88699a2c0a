"""Orbit averages under the even/odd toggles, and where they break.

The dihedral group generated by the odd and even toggle products splits
each carrier into orbits; the braid statistic averages to one on every
orbit of a pointed shape.  Neither the gyration subgroup nor the order-two
subgroups explain this: both eventually fail on staircases.
"""

from braidhooks import (
    Shape,
    big_phi,
    big_phi_inverse,
    find_gyration_anomaly,
    homomesy_report,
    rw_class,
    standard_tableaux,
    window_table,
    word_condition_check,
)
from braidhooks.homomesy import tableau_statistic, word_statistic
from braidhooks.words import word_from_string, word_to_string

print("== dihedral orbits of the 12 staircase fillings ==")
shape = Shape.right((4, 3, 2, 1))
report = homomesy_report(standard_tableaux(shape), tableau_statistic("braid-hooks"))
for i, orbit in enumerate(report["orbits"]):
    print(f"orbit {i}: {orbit['size']} fillings, braid-hook average {orbit['average']}")

print("\n== the same on words, with braid moves ==")
report = homomesy_report(rw_class(shape), word_statistic("braid-moves"))
for i, orbit in enumerate(report["orbits"]):
    print(f"orbit {i}: {orbit['size']} words, braid-move average {orbit['average']}")
print("every word satisfies the boundary inequalities:",
      word_condition_check(rw_class(shape)))

print("\n== shapes that fail the row conditions fail the average ==")
for outer in [(2, 2), (3, 2)]:
    report = homomesy_report(
        standard_tableaux(Shape.right(outer)), tableau_statistic("braid-hooks")
    )
    print(f"{outer}: averages {[str(o['average']) for o in report['orbits']]}")

print("\n== the moving window of a word ==")
w = word_from_string("1231423121", 5)
print(window_table(w).to_text())
k, pre = big_phi_inverse(w)
print(f"unique equality at i = {k}; preimage word {word_to_string(pre)}")
print("the braid there maps forward again:", big_phi(k, pre) == w)

print("\n== gyration alone is not enough ==")
small = homomesy_report(
    standard_tableaux(Shape.right((6, 5, 4, 3, 2, 1))),
    tableau_statistic("braid-hooks"),
    "gyration",
)
print("21-cell staircase, gyration orbits all average one:",
      all(o["average"] == 1 for o in small["orbits"]),
      f"({len(small['orbits'])} orbits)")
hit = find_gyration_anomaly(Shape.right((7, 6, 5, 4, 3, 2, 1)), max_seeds=100)
print(f"28-cell staircase: seed {hit['seed']} finds a gyration orbit of "
      f"{hit['orbit_size']} with average {hit['average']}")

print("\n== order-two subgroups fail even earlier ==")
report = homomesy_report(
    standard_tableaux(Shape.right((5, 4, 3, 2, 1))),
    tableau_statistic("braid-hooks"),
    "order-two-odd",
)
bad = [o for o in report["orbits"] if o["average"] != 1]
print(f"15-cell staircase under the odd toggle: {len(bad)} of "
      f"{len(report['orbits'])} orbits miss the average")
