import json
import random

import pytest

from secgenus.errors import AbstainError, InputError, ModelError
from secgenus.variety import (
    NEG_INF,
    DivisorClass,
    c2_pair,
    catalog_build,
    h0_exact,
    intersection_number,
    load_variety,
    save_variety,
    validate,
    variety_from_json,
    variety_to_json,
)


def test_intersection_p4(p4):
    h = p4.divisor("1H")
    assert intersection_number(p4, [h, h, h, h]) == 1


def test_intersection_x6(x6):
    h = x6.divisor("1H")
    assert intersection_number(x6, [h] * 4) == 6


def test_intersection_p1xp3(p1xp3):
    d = p1xp3.divisor("1a+1b")
    # (a+b)^4 = 4 a b^3 with a^2 = 0 and b^4 = 0
    assert intersection_number(p1xp3, [d] * 4) == 4


def test_intersection_wrong_count(p4):
    with pytest.raises(InputError):
        intersection_number(p4, [p4.divisor("1H")] * 3)


def test_intersection_symmetric_and_multilinear(catalog):
    rng = random.Random(3)
    for name in ("X6", "P1xP3", "P2xP2"):
        v = catalog[name]
        g = len(v.generators)
        for _ in range(10):
            classes = [
                DivisorClass(tuple(rng.randint(-2, 2) for _ in range(g))) for _ in range(4)
            ]
            base = intersection_number(v, classes)
            shuffled = classes[:]
            rng.shuffle(shuffled)
            assert intersection_number(v, shuffled) == base
            a, b = classes[0], classes[1]
            rest = classes[2:]
            assert intersection_number(v, [a + b, a + b] + rest) == (
                intersection_number(v, [a, a] + rest)
                + 2 * intersection_number(v, [a, b] + rest)
                + intersection_number(v, [b, b] + rest)
            )


def test_c2_pairings(catalog, p4, x6, a4):
    h = x6.divisor("1H")
    assert c2_pair(x6, [h, h]) == 90
    assert c2_pair(a4, [a4.divisor("1L")] * 2) == 0
    assert c2_pair(p4, [p4.divisor("1H")] * 2) == 10
    p1xp3 = catalog["P1xP3"]
    assert c2_pair(p1xp3, [p1xp3.divisor("1a"), p1xp3.divisor("1b")]) == 6
    assert c2_pair(p1xp3, [p1xp3.divisor("1b"), p1xp3.divisor("1b")]) == 8


def test_nef_ample(p4, p1xp3, x6):
    assert p4.is_nef(p4.zero()) and not p4.is_ample(p4.zero())
    fiber = p1xp3.divisor("1a")
    assert p1xp3.is_nef(fiber) and not p1xp3.is_ample(fiber)
    assert not x6.is_nef(x6.divisor("-1H"))
    assert x6.is_nef_and_big(x6.divisor("1H"))
    assert not p1xp3.is_nef_and_big(fiber)  # a^4 = 0


def test_catalog_hypersurface_data(x6, catalog):
    assert x6.canonical.coeffs == (0,)
    assert x6.chi_o == 2
    assert c2_pair(x6, [x6.divisor("1H")] * 2) == 90
    q4 = catalog["Q4"]
    assert q4.canonical.coeffs == (-4,)
    assert q4.hodge == (1, 0, 0, 0, 0)


def test_catalog_p4_data(p4):
    assert p4.canonical.coeffs == (-5,)
    assert p4.hodge == (1, 0, 0, 0, 0)
    assert c2_pair(p4, [p4.divisor("1H")] * 2) == 10


def test_catalog_rejects_bad_params():
    with pytest.raises(InputError):
        catalog_build("projective_space", 5)
    with pytest.raises(InputError):
        catalog_build("hypersurface_in_P5", 1)
    with pytest.raises(InputError):
        catalog_build("abelian_fourfold", 23)
    with pytest.raises(InputError):
        catalog_build("weighted_projective", 3)


def test_h0_exact(p4, x6, a4, p1xp3, catalog):
    assert h0_exact(p4, p4.divisor("2H")) == 15
    assert h0_exact(p4, p4.divisor("-1H")) == 0
    assert h0_exact(x6, x6.divisor("2H")) == 21
    assert h0_exact(x6, x6.divisor("6H")) == 461
    assert h0_exact(a4, a4.divisor("2L")) == 16
    assert h0_exact(a4, a4.zero()) == 1
    assert h0_exact(p1xp3, p1xp3.divisor("1a+1b")) == 8
    assert h0_exact(catalog["P2xP2"], catalog["P2xP2"].divisor("1a+2b")) == 18


def test_h0_exact_without_oracle(x6):
    import dataclasses

    bare = dataclasses.replace(x6, h0_oracle=None)
    with pytest.raises(AbstainError):
        h0_exact(bare, bare.divisor("1H"))


def test_validate_catalog_passes(catalog):
    for v in catalog.values():
        report = validate(v)
        assert report.passed, report.to_table()


def test_validate_catches_corrupted_form(x6):
    import dataclasses

    corrupted = dataclasses.replace(x6, intersection_form={(4,): 5})
    report = validate(corrupted)
    assert not report.passed


def test_kappa_declarations(catalog):
    x6, a4 = catalog["X6"], catalog["X6"].polarization and catalog["A4"]
    decl = x6.declaration_for(x6.polarization)
    assert decl.kappa == {1: 4, 2: 4, 3: 4}
    decl = catalog["P4"].declaration_for(catalog["P4"].polarization)
    assert decl.kappa == {1: NEG_INF, 2: NEG_INF, 3: NEG_INF}
    decl = catalog["X5"].declaration_for(catalog["X5"].polarization)
    assert decl.kappa == {1: 0, 2: 4, 3: 4}
    assert a4.kappa_x == 0


def test_divisor_parsing(p1xp3, x6):
    assert p1xp3.divisor("2a+1b").coeffs == (2, 1)
    assert p1xp3.divisor("1a-2b").coeffs == (1, -2)
    assert p1xp3.divisor("a+b").coeffs == (1, 1)
    assert x6.divisor("-1H").coeffs == (-1,)
    assert x6.divisor("0H").coeffs == (0,)
    with pytest.raises(InputError):
        x6.divisor("1Z")
    with pytest.raises(InputError):
        x6.divisor("")


def test_divisor_formatting(p1xp3):
    assert p1xp3.divisor_string(p1xp3.divisor("2a+1b")) == "2a+1b"
    assert p1xp3.divisor_string(p1xp3.divisor("1a-2b")) == "1a-2b"


def test_json_round_trip(tmp_path, catalog):
    for name in ("P4", "X6", "P1xP3", "A4"):
        v = catalog[name]
        path = tmp_path / f"{name}.json"
        save_variety(v, path)
        loaded = load_variety(path)
        assert variety_to_json(loaded) == variety_to_json(v)
        assert loaded.chi_o == v.chi_o
        assert loaded.kappa_adjoint == v.kappa_adjoint


def test_json_monomial_keys(x6, p1xp3):
    blob = variety_to_json(x6)
    assert blob["intersections"] == {"H^4": 6}
    blob = variety_to_json(p1xp3)
    assert blob["intersections"]["a b^3"] == 1
    assert blob["c2_pairings"]["a b"] == 6


def test_json_malformed():
    with pytest.raises(InputError):
        variety_from_json({"name": "broken"})


def test_json_kappa_encoding(p4):
    blob = variety_to_json(p4)
    assert blob["kappa_X"] == "-inf"
    restored = variety_from_json(json.loads(json.dumps(blob)))
    assert restored.kappa_x == NEG_INF


def test_hodge_invariants_enforced():
    with pytest.raises(ModelError):
        variety_from_json(
            {
                "name": "bad",
                "dim": 1,
                "generators": ["H"],
                "intersections": {"H": 1},
                "canonical": [-2],
                "c2_pairings": {},
                "hodge": [2, 0],
                "nef_cone": "ray",
            }
        )
