"""Sliding paths, crossings, and the braid-hook bijection.

Reproduces the 21-cell running example: superimposing the promotion and
inverse promotion paths exposes exactly one crossing, which names the
braid hook whose partial operators rebuild the tableau.
"""

from braidhooks import (
    Shape,
    braid_hooks,
    crossings,
    evacuation,
    expected_braid_hooks,
    inverse_promotion_path,
    partial_inverse_promotion,
    partial_promotion,
    phi,
    phi_inverse,
    promotion,
    promotion_path,
    staircase_pair,
    standard_tableaux,
    updown_crossing_balance,
)
from braidhooks.tableaux import Tableau, tableau_to_text


def from_rows(shape, rows):
    entry = {}
    for values, (r, cols) in zip(rows, sorted(shape.row_columns().items())):
        entry.update({(r, c): v for v, c in zip(values, cols)})
    return Tableau(shape, tuple(c for c, _ in sorted(entry.items(), key=lambda kv: kv[1])))


stair = Shape.right((6, 5, 4, 3, 2, 1))
t = from_rows(stair, [[1, 2, 4, 6, 10, 12], [3, 5, 7, 11, 13],
                      [8, 9, 14, 17], [15, 16, 18], [19, 20], [21]])

print("== the 21-cell tableau and its two sliding paths ==")
print(tableau_to_text(t))
left = promotion_path(t)
right = inverse_promotion_path(t)
print("promotion path entries:        ", sorted(t.entry(c) for c in left.cells))
print("inverse promotion path entries:", sorted(t.entry(c) for c in right.cells))

print("\n== the unique crossing names the braid hook ==")
for cr in crossings(t):
    print(f"crossing at {cr.position}, entry {cr.k}, direction {cr.direction}")
k, t_prime = phi_inverse(t)
print(f"undoing the partial operators with k = {k}:")
print(tableau_to_text(t_prime))
print("braid hooks of the preimage:", braid_hooks(t_prime))
print("phi sends it back:", phi(k, t_prime) == t)

print("\n== the commutative square at k = 5 ==")
t_left = partial_inverse_promotion(t_prime, k)
t_right = partial_promotion(t_prime, k)
print("left then right equals right then left:",
      partial_promotion(t_left, k) == partial_inverse_promotion(t_right, k) == t)
print("the two halves differ by one full promotion:", promotion(t_left) == t_right)

print("\n== expected hooks: one for pointed right shapes, half for trapezoids ==")
for shape, label in [
    (Shape.right((5, 2, 1)), "right (5,2,1)"),
    (Shape.right((4, 3, 2, 1)), "right (4,3,2,1)"),
    (Shape.half_right((5, 3, 1)), "half-right (5,3,1)"),
    (Shape.half_right((7, 5, 3, 1)), "half-right (7,5,3,1)"),
]:
    print(f"{label}: {expected_braid_hooks(shape)}")

print("\n== the pairing behind the one-half ==")
half = Shape.half_right((5, 3, 1))
crossing_count = sum(1 for s in standard_tableaux(half) if crossings(s))
print(f"{crossing_count} of {len(standard_tableaux(half))} trapezoid fillings cross;")
s = standard_tableaux(half)[7]
print("a filling and its evacuation always disagree about crossing:",
      bool(crossings(s)) != bool(crossings(evacuation(s))))
print("joining a filling to its conjugated evacuation gives a pointed shape:")
print(tableau_to_text(staircase_pair(s)))

print("\n== skew shapes cross both ways, with difference one ==")
skew = Shape.skew_right((4, 3, 2, 1), (1,))
report = updown_crossing_balance(skew)
print("per-tableau (up - down) crossing counts:", report["diffs"])
