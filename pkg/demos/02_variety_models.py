"""Numerical variety models: catalog entries, pairings, section counts.

A variety is a bundle of numbers: generators, intersection form,
canonical class, c_2 pairings, Hodge numbers, a nef-cone descriptor and
declared Kodaira dimensions.  Catalog entries additionally carry an
exact section-count oracle, which is what the verification suites test
the Riemann-Roch machinery against.
"""

import json

from secgenus import (
    c2_pair,
    chi_divisor,
    h0_exact,
    intersection_number,
    standard_catalog,
    validate,
    variety_to_json,
)

catalog = standard_catalog()
print("catalog entries:", ", ".join(sorted(catalog)))
print()

x6 = catalog["X6"]
h = x6.divisor("1H")
print("X6 (degree-six hypersurface in P^5):")
print("  H^4        =", intersection_number(x6, [h, h, h, h]))
print("  c2 . H^2   =", c2_pair(x6, [h, h]))
print("  chi(O)     =", x6.chi_o)
print("  chi(mH)    =", [chi_divisor(x6, m * h) for m in range(5)])
print("  h^0(mH)    =", [h0_exact(x6, m * h) for m in range(5)])
print()

p1xp3 = catalog["P1xP3"]
d = p1xp3.divisor("1a+1b")
print("P1xP3 with the split polarization a+b:")
print("  (a+b)^4    =", intersection_number(p1xp3, [d] * 4))
print("  chi(a+b)   =", chi_divisor(p1xp3, d), " = 2 * C(4,3) =", h0_exact(p1xp3, d))
print("  nef(a)?    ", p1xp3.is_nef(p1xp3.divisor("1a")),
      " ample(a)?", p1xp3.is_ample(p1xp3.divisor("1a")))
print()

# Model validation cross-checks the declared data against the oracle.
report = validate(x6)
print(report.to_table())

# Entries serialize to a JSON description file; monomial keys use caret
# exponents with space separation.
blob = variety_to_json(p1xp3)
print("intersection keys of P1xP3:", json.dumps(blob["intersections"], sort_keys=True))
