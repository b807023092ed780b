import random

import pytest

from secgenus.errors import InputError
from secgenus.genus import (
    additivity_residual,
    chi_H_i,
    g1_closed,
    g2_adjoint_closed,
    g_i,
)
from secgenus.variety import DivisorClass, intersection_number


def test_chi_h_values(p4, x6):
    h = x6.divisor("1H")
    assert chi_H_i(x6, 2, [h, h]) == 11
    assert chi_H_i(x6, 4, []) == 2  # i = n falls back to chi(O)
    hp = p4.divisor("1H")
    assert chi_H_i(p4, 0, [hp] * 4) == 1  # top mixed coefficient is H^4


def test_chi_h_arity_contract(x6):
    with pytest.raises(InputError):
        chi_H_i(x6, 2, [x6.divisor("1H")])
    with pytest.raises(InputError):
        chi_H_i(x6, 5, [])


def test_genus_ground_truths(p4, x6):
    h = x6.divisor("1H")
    hp = p4.divisor("1H")
    assert g_i(p4, 0, [hp] * 4) == 1
    assert g_i(x6, 1, [h] * 3) == 10  # plane sextic curve section
    assert g_i(x6, 3, [h]) == 5  # h^0 of the canonical bundle of a hyperplane section
    assert g_i(x6, 4, []) == 1
    assert g_i(x6, 2, [h, h]) == 10


def test_g0_is_degree(catalog):
    rng = random.Random(21)
    for _ in range(50):
        v = list(catalog.values())[rng.randrange(len(catalog))]
        g = len(v.generators)
        bundles = [
            DivisorClass(tuple(rng.randint(-2, 2) for _ in range(g))) for _ in range(v.dim)
        ]
        assert g_i(v, 0, bundles) == intersection_number(v, bundles)


def test_gn_is_top_hodge(catalog):
    for v in catalog.values():
        assert g_i(v, v.dim, []) == v.hodge[v.dim]


def test_equal_bundle_consistency(catalog):
    # the multivariate all-ones coefficient with equal bundles reproduces the
    # single-polynomial computation through re-expansion of chi(tL)
    from secgenus.binpoly import coefficients_from_oracle
    from secgenus.hrr import chi_divisor

    for name in ("P4", "X6", "A4", "P1xP3", "P2xP2"):
        v = catalog[name]
        ell = v.polarization
        single = coefficients_from_oracle(lambda t: chi_divisor(v, t * ell), 1, v.dim)
        for i in range(v.dim):
            assert chi_H_i(v, i, [ell] * (v.dim - i)) == int(
                single.coefficient((v.dim - i,))
            ), (name, i)


def test_g1_closed_form(p4, x6):
    h = x6.divisor("1H")
    assert g1_closed(x6, h, h, h) == 10
    hp = p4.divisor("1H")
    assert g1_closed(p4, hp, hp, hp) == 0  # line section of projective space


def test_g1_closed_adjoint_instance(x6):
    # with A = B = K + L and C = L the form reads 1 + (3/2)(K+L)^3 L
    h = x6.divisor("1H")
    kl = x6.canonical + h
    assert g1_closed(x6, kl, kl, h) == 1 + 9


def test_g2_adjoint_closed(x6, a4):
    assert g2_adjoint_closed(x6, x6.divisor("1H")) == 10
    assert g2_adjoint_closed(a4, a4.divisor("1L")) == 17


def test_closed_forms_match_definition(catalog):
    rng = random.Random(33)
    for name in ("P4", "Q4", "X6", "A4", "P1xP3", "P2xP2"):
        v = catalog[name]
        g = len(v.generators)
        for _ in range(8):
            a = DivisorClass(tuple(rng.randint(-2, 2) for _ in range(g)))
            b = DivisorClass(tuple(rng.randint(-2, 2) for _ in range(g)))
            c = DivisorClass(tuple(rng.randint(-2, 2) for _ in range(g)))
            assert g1_closed(v, a, b, c) == g_i(v, 1, [a, b, c])
            ell = DivisorClass(tuple(rng.randint(-2, 2) for _ in range(g)))
            kl = v.canonical + ell
            assert g2_adjoint_closed(v, ell) == g_i(v, 2, [kl, kl])


def test_additivity_examples(p4, x6):
    h = x6.divisor("1H")
    assert g_i(x6, 2, [2 * h, h]) == 30  # decomposes as 10 + 10 + 10 - 0
    assert additivity_residual(x6, 2, h, h, [h]) == 0
    hp = p4.divisor("1H")
    assert additivity_residual(p4, 1, hp, hp, [hp, hp]) == 0
    assert additivity_residual(x6, 2, x6.zero(), x6.zero(), [h]) == 0


def test_additivity_random_draws(catalog):
    rng = random.Random(55)
    entries = [catalog[n] for n in ("P4", "Q4", "X6", "A4", "P1xP3", "P2xP2", "P3", "P2")]
    for k in range(100):
        v = entries[k % len(entries)]
        g = len(v.generators)
        i = rng.randint(1, v.dim - 1) if v.dim > 1 else None
        if i is None:
            continue
        a = DivisorClass(tuple(rng.randint(-2, 2) for _ in range(g)))
        b = DivisorClass(tuple(rng.randint(-2, 2) for _ in range(g)))
        rest = [
            DivisorClass(tuple(rng.randint(-2, 2) for _ in range(g)))
            for _ in range(v.dim - i - 1)
        ]
        assert additivity_residual(v, i, a, b, rest) == 0


def test_additivity_index_contract(x6):
    h = x6.divisor("1H")
    with pytest.raises(InputError):
        additivity_residual(x6, 0, h, h, [h, h])
    with pytest.raises(InputError):
        additivity_residual(x6, 4, h, h, [])


def test_all_genus_values_integral(catalog):
    # TypeError would surface if anything came back fractional; g_i returns int
    rng = random.Random(77)
    for v in catalog.values():
        g = len(v.generators)
        for _ in range(5):
            i = rng.randint(0, v.dim)
            bundles = [
                DivisorClass(tuple(rng.randint(-2, 2) for _ in range(g)))
                for _ in range(v.dim - i)
            ]
            assert isinstance(g_i(v, i, bundles), int)
