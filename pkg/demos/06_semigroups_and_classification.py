"""Semigroup bookkeeping and the adjunction classification table.

Multiples with sections are closed under addition, so non-vanishing
statements reduce to numerical-semigroup membership.  Separately, the
declared Kodaira dimensions of adjoint twists drive a three-way
classification with a 4-fold refinement.
"""

from secgenus import (
    classify_variety,
    closure,
    coin_solve,
    cubic_params,
    empirical_min_r,
    guaranteed_threshold,
    standard_catalog,
)

# If m = 4 and m = 5 both carry sections, everything from 12 on does:
print("closure of {4, 5} up to 20:", closure({4, 5}, 20).members)
print("guaranteed threshold of {4, 5}:", guaranteed_threshold({4, 5}))
print("a representation 4i + 5j = 13:", coin_solve(4, 5, 13))
print()

catalog = standard_catalog()
entries = [
    (catalog["P4"], catalog["P4"].divisor("6H")),
    (catalog["X6"], catalog["X6"].divisor("1H")),
    (catalog["A4"], catalog["A4"].divisor("1L")),
]
print("least r with h^0(r(K+L)) > 0 across the sample entries:",
      empirical_min_r(entries, 6))
print()

print("classification labels over declared invariants:")
for name in ("P4", "Q4", "P1xP3", "P2xP2", "X3", "X4", "X5", "X6", "X7", "A4"):
    v = catalog[name]
    label = classify_variety(v, v.polarization)
    print(f"  {name:6s} -> {label.to_string():7s} (group {label.group},"
          f" certainty {label.certainty})")
print()

# The cubic parametrisation for 3-dimensional adjoint images:
params = cubic_params((-2, 4, -8, 6), 0)
print("cubic fit of (-2, 4, -8, 6):",
      f"d={params.d} a={params.a} b={params.b} g1={params.g1} g2={params.g2}",
      f"sign gate {params.gate_value} >= 0: {params.gate_holds}")
