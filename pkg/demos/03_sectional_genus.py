"""Sectional geometric genera and their closed forms.

g_i of a tuple of line bundles is read off the multivariate Euler
characteristic expansion.  The familiar cases fall out: g_0 is the
degree, g_1 the genus of a curve section, g_n the top Hodge number.
"""

from secgenus import (
    additivity_residual,
    chi_H_i,
    g1_closed,
    g2_adjoint_closed,
    g_i,
    intersection_number,
    standard_catalog,
)

catalog = standard_catalog()
x6 = catalog["X6"]
h = x6.divisor("1H")

print("on the degree-six hypersurface X6:")
for i in range(5):
    bundles = [h] * (4 - i)
    print(f"  g_{i}(H,...)   =", g_i(x6, i, bundles),
          "   chi_H =", chi_H_i(x6, i, bundles))
print("  (g_1 = 10 is the classical genus of a plane sextic curve)")
print()

# g_0 is multilinear: it is just the intersection number.
p1xp3 = catalog["P1xP3"]
a, b = p1xp3.divisor("1a"), p1xp3.divisor("1b")
print("g_0(a+b, a+b, a+b, a+b) =", g_i(p1xp3, 0, [a + b] * 4),
      "= (a+b)^4 =", intersection_number(p1xp3, [a + b] * 4))
print()

# Closed forms for dimension four.
print("g1 closed form on X6:", g1_closed(x6, h, h, h))
print("g2 adjoint closed form on X6:", g2_adjoint_closed(x6, h),
      "= g_2(K+H, K+H) =", g_i(x6, 2, [x6.canonical + h, x6.canonical + h]))
a4 = catalog["A4"]
ell = a4.divisor("1L")
print("g2 adjoint closed form on an abelian 4-fold:", g2_adjoint_closed(a4, ell))
print()

# The additivity rule: g_i(A+B, rest) decomposes into three genera and a
# Hodge correction; the residual is identically zero.
print("additivity residual on X6 (A = B = H, rest = [H]):",
      additivity_residual(x6, 2, h, h, [h]))
print("  the decomposition: g_2(2H, H) =", g_i(x6, 2, [2 * h, h]),
      "= 10 + 10 + 10 - 0")
