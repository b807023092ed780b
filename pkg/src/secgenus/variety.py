"""Numerical models of polarized varieties of dimension at most 4.

A variety is described purely by numbers: generator classes for the
relevant part of the Neron-Severi group, the full degree-n intersection
form on those generators, the canonical class, the pairings of the
second Chern class against degree-(n-2) monomials, the Hodge numbers
h^i(O), a nef-cone descriptor, and declared Kodaira dimensions.  Nothing
is ever computed that the model cannot certify: Kodaira dimensions are
declarations, and section counts come either from a Riemann-Roch
computation under a certified vanishing hypothesis (see ``hrr``) or from
an exact per-family oracle attached to catalog entries.

Intersection monomials are keyed by exponent tuples over the generator
list, so symmetry of the form is structural.  A missing monomial is a
hard model error, never a silent zero.

Kodaira dimensions take values in {-inf, 0, ..., n}; ``-inf`` is
``float("-inf")`` and "undeclared" is ``None``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb
from pathlib import Path

from .errors import AbstainError, InputError, ModelError
from .report import VerificationReport

# Kodaira dimensions take integer values 0..n, NEG_INF, or None (undeclared).
NEG_INF = float("-inf")


@dataclass(frozen=True)
class DivisorClass:
    """Integer coefficient vector over a variety's generator classes."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(other.coeffs) != len(self.coeffs):
            raise InputError("divisor classes live on different generator lists")
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar: int) -> "DivisorClass":
        return DivisorClass(tuple(scalar * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)


@dataclass(frozen=True)
class ConeDescriptor:
    """Nef-cone membership test: the generator orthant or a single ray."""

    kind: str  # "orthant" or "ray"

    def __post_init__(self) -> None:
        if self.kind not in ("orthant", "ray"):
            raise InputError(f"unknown cone kind {self.kind!r}")

    def is_nef(self, coeffs: tuple[int, ...]) -> bool:
        return all(c >= 0 for c in coeffs)

    def is_ample(self, coeffs: tuple[int, ...]) -> bool:
        return all(c > 0 for c in coeffs)


@dataclass(frozen=True)
class AdjointDeclaration:
    """Declared data for one polarization L: kappa(K + a L) by twist a."""

    kappa: dict[int, "int | float"]
    fine_type: str | None = None


@dataclass(frozen=True, eq=False)
class VarietyData:
    """Immutable numerical model of a polarized variety."""

    name: str
    dim: int
    generators: tuple[str, ...]
    intersection_form: dict[tuple[int, ...], int]
    canonical: DivisorClass
    c2_pairings: dict[tuple[int, ...], int]
    hodge: tuple[int, ...]
    nef_cone: ConeDescriptor
    kappa_x: "int | float | None" = None
    kappa_adjoint: dict[str, AdjointDeclaration] = field(default_factory=dict)
    h0_oracle: str | None = None
    polarization: DivisorClass | None = None
    smooth: bool = True
    sre_declared: bool = True  # unchecked declaration, see module docstring

    def __post_init__(self) -> None:
        if not 1 <= self.dim <= 4:
            raise InputError(f"dimension must be 1..4, got {self.dim}")
        if len(self.hodge) != self.dim + 1:
            raise InputError("hodge vector must have length dim + 1")
        if self.hodge[0] != 1:
            raise ModelError("h^0(O) must be 1 (connectedness)")
        if any(h < 0 for h in self.hodge):
            raise InputError("Hodge numbers must be non-negative")
        if len(self.canonical.coeffs) != len(self.generators):
            raise InputError("canonical class has wrong length")
        if self.nef_cone.kind == "ray" and len(self.generators) != 1:
            raise InputError("single-ray cone requires exactly one generator")

    # -- basic queries ---------------------------------------------------

    @property
    def chi_o(self) -> int:
        """chi(O) = alternating sum of the Hodge numbers."""
        return sum((-1) ** i * h for i, h in enumerate(self.hodge))

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * len(self.generators))

    def generator(self, name: str) -> DivisorClass:
        if name not in self.generators:
            raise InputError(f"unknown generator {name!r} on {self.name}")
        i = self.generators.index(name)
        coeffs = [0] * len(self.generators)
        coeffs[i] = 1
        return DivisorClass(tuple(coeffs))

    def divisor(self, text: str) -> DivisorClass:
        return parse_divisor(text, self.generators)

    def divisor_string(self, d: DivisorClass) -> str:
        return format_divisor(d, self.generators)

    def declaration_for(self, polarization: DivisorClass) -> AdjointDeclaration | None:
        return self.kappa_adjoint.get(self.divisor_string(polarization))

    # -- positivity ------------------------------------------------------

    def is_nef(self, d: DivisorClass) -> bool:
        return self.nef_cone.is_nef(d.coeffs)

    def is_ample(self, d: DivisorClass) -> bool:
        return self.nef_cone.is_ample(d.coeffs)

    def is_nef_and_big(self, d: DivisorClass) -> bool:
        """Nef with positive top self-intersection."""
        return self.is_nef(d) and intersection_number(self, [d] * self.dim) > 0


# -- divisor string syntax -----------------------------------------------

_TERM = re.compile(r"([+-]?)(\d*)([A-Za-z][A-Za-z0-9_]*)")


def parse_divisor(text: str, generators: tuple[str, ...]) -> DivisorClass:
    """Parse comma-free signed terms like ``2a+1b``, ``-1H`` or ``H``."""
    s = text.replace(" ", "")
    if not s:
        raise InputError("empty divisor expression")
    coeffs = [0] * len(generators)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m:
            raise InputError(f"cannot parse divisor expression {text!r} at {s[pos:]!r}")
        sign, digits, name = m.groups()
        if name not in generators:
            raise InputError(f"unknown generator {name!r} in {text!r}")
        value = int(digits) if digits else 1
        if sign == "-":
            value = -value
        coeffs[generators.index(name)] += value
        pos = m.end()
    return DivisorClass(tuple(coeffs))


def format_divisor(d: DivisorClass, generators: tuple[str, ...]) -> str:
    """Canonical form with every generator and explicit coefficients."""
    parts = []
    for c, name in zip(d.coeffs, generators):
        term = f"{c}{name}"
        if parts and c >= 0:
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts)


# -- intersection products -------------------------------------------------


def _monomials(n_gens: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree."""
    out = []
    for combo in combinations_with_replacement(range(n_gens), degree):
        exps = [0] * n_gens
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


def _expand(
    table: dict[tuple[int, ...], int],
    classes: list[DivisorClass],
    n_gens: int,
    what: str,
) -> int:
    """Multilinear expansion of a pairing table against divisor classes."""
    supports = [
        [(g, c) for g, c in enumerate(cls.coeffs) if c] for cls in classes
    ]
    total = 0
    for picks in product(*supports):
        coeff = 1
        exps = [0] * n_gens
        for g, c in picks:
            coeff *= c
            exps[g] += 1
        key = tuple(exps)
        if key not in table:
            raise ModelError(f"{what} table is missing monomial {key}")
        total += coeff * table[key]
    return total


def intersection_number(v: VarietyData, classes: list[DivisorClass]) -> int:
    """Product of exactly dim(V) divisor classes against the intersection form."""
    if len(classes) != v.dim:
        raise InputError(f"need exactly {v.dim} classes, got {len(classes)}")
    return _expand(v.intersection_form, classes, len(v.generators), f"{v.name} intersection")


def c2_pair(v: VarietyData, classes: list[DivisorClass]) -> int:
    """Pair c_2(X) with exactly dim(V) - 2 divisor classes."""
    if v.dim < 2:
        raise InputError("c_2 pairings require dimension >= 2")
    if len(classes) != v.dim - 2:
        raise InputError(f"need exactly {v.dim - 2} classes, got {len(classes)}")
    return _expand(v.c2_pairings, classes, len(v.generators), f"{v.name} c2")


def is_nef(v: VarietyData, d: DivisorClass) -> bool:
    return v.is_nef(d)


def is_ample(v: VarietyData, d: DivisorClass) -> bool:
    return v.is_ample(d)


# -- catalog ----------------------------------------------------------------


def _ray_kappa(c: int, dim: int) -> "int | float":
    """kappa of c * A for A ample on a single-ray cone."""
    if c > 0:
        return dim
    if c == 0:
        return 0
    return NEG_INF


def _ray_entry(
    name: str,
    dim: int,
    gen: str,
    top: int,
    k_coeff: int,
    c2_h: int | None,
    hodge: tuple[int, ...],
    oracle: str,
    fine_type: str | None,
) -> VarietyData:
    """Single-generator variety with K parallel to the ample ray."""
    c2 = {}
    if dim >= 2:
        c2 = {(dim - 2,): c2_h if c2_h is not None else 0}
    pol = DivisorClass((1,))
    decl = AdjointDeclaration(
        kappa={a: _ray_kappa(k_coeff + a, dim) for a in (1, 2, 3)},
        fine_type=fine_type,
    )
    return VarietyData(
        name=name,
        dim=dim,
        generators=(gen,),
        intersection_form={(dim,): top},
        canonical=DivisorClass((k_coeff,)),
        c2_pairings=c2,
        hodge=hodge,
        nef_cone=ConeDescriptor("ray"),
        kappa_x=_ray_kappa(k_coeff, dim),
        kappa_adjoint={f"1{gen}": decl},
        h0_oracle=oracle,
        polarization=pol,
    )


def _product_entry(name: str, a: int, b: int, oracle: str, fine_type: str | None) -> VarietyData:
    """P^a x P^b with generators x (from P^a) and y (from P^b), a + b = 4."""
    if a + b != 4:
        raise InputError("only 4-dimensional products are modeled")
    form = {}
    for exps in _monomials(2, 4):
        form[exps] = 1 if exps == (a, b) else 0
    # c(X) = (1+x)^(a+1) (1+y)^(b+1); a monomial x^i y^j pairs to its
    # coefficient on x^a y^b, i.e. survives only at (i, j) = (a, b).
    c2_x2 = comb(a + 1, 2)
    c2_xy = (a + 1) * (b + 1)
    c2_y2 = comb(b + 1, 2)

    def pair_c2(i: int, j: int) -> int:
        total = 0
        for (di, dj), coeff in (((2, 0), c2_x2), ((1, 1), c2_xy), ((0, 2), c2_y2)):
            if (i + di, j + dj) == (a, b):
                total += coeff
        return total

    c2 = {exps: pair_c2(*exps) for exps in _monomials(2, 2)}
    pol = DivisorClass((1, 1))
    kappa = {}
    for t in (1, 2, 3):
        k_plus = DivisorClass((t - (a + 1), t - (b + 1)))
        if any(c < 0 for c in k_plus.coeffs):
            kappa[t] = NEG_INF
        else:
            kappa[t] = (a if k_plus.coeffs[0] > 0 else 0) + (b if k_plus.coeffs[1] > 0 else 0)
    decl = AdjointDeclaration(kappa=kappa, fine_type=fine_type)
    return VarietyData(
        name=name,
        dim=4,
        generators=("a", "b"),
        intersection_form=form,
        canonical=DivisorClass((-(a + 1), -(b + 1))),
        c2_pairings=c2,
        hodge=(1, 0, 0, 0, 0),
        nef_cone=ConeDescriptor("orthant"),
        kappa_x=NEG_INF,
        kappa_adjoint={"1a+1b": decl},
        h0_oracle=oracle,
        polarization=pol,
    )


def catalog_build(family: str, param: int | None = None) -> VarietyData:
    """Build one fully populated catalog entry with its section-count oracle.

    Families: ``projective_space`` (n <= 4), ``product_P1xP3``,
    ``product_P2xP2``, ``hypersurface_in_P5`` (degree d >= 2) and
    ``abelian_fourfold`` (top self-intersection a positive multiple of 24).
    """
    if family == "projective_space":
        n = param
        if n is None or not 1 <= n <= 4:
            raise InputError(f"projective_space needs n in 1..4, got {n}")
        # Euler sequence: c(TP^n) = (1+H)^(n+1).
        fine = "1" if n >= 3 else None
        return _ray_entry(
            name=f"P{n}",
            dim=n,
            gen="H",
            top=1,
            k_coeff=-(n + 1),
            c2_h=comb(n + 1, 2) if n >= 2 else None,
            hodge=(1,) + (0,) * n,
            oracle=f"p{n}",
            fine_type=fine,
        )
    if family == "hypersurface_in_P5":
        d = param
        if d is None or d < 2:
            raise InputError(f"hypersurface_in_P5 needs degree d >= 2, got {d}")
        # c(X) = (1+H)^6 / (1+dH) restricted: c_2 = (d^2 - 6d + 15) H^2.
        # Fine types are declared only below the big-adjoint range; for
        # d >= 5 the terminal second-reduction label is the classification.
        if d == 2:
            fine = "2"
        elif d == 3:
            fine = "4"  # K = -(n-1)H: Del Pezzo manifold
        elif d == 4:
            fine = "7.5"  # K = -(n-2)H: Mukai
        else:
            fine = None
        return _ray_entry(
            name="Q4" if d == 2 else f"X{d}",
            dim=4,
            gen="H",
            top=d,
            k_coeff=d - 6,
            c2_h=(d * d - 6 * d + 15) * d,
            hodge=(1, 0, 0, 0, comb(d - 1, 5)),
            oracle=f"hypersurface:{d}",
            fine_type=fine,
        )
    if family == "abelian_fourfold":
        l4 = param
        if l4 is None or l4 <= 0 or l4 % 24 != 0:
            raise InputError(f"abelian_fourfold needs L^4 a positive multiple of 24, got {l4}")
        return _ray_entry(
            name="A4",
            dim=4,
            gen="L",
            top=l4,
            k_coeff=0,
            c2_h=0,
            hodge=(1, 4, 6, 4, 1),
            oracle="abelian",
            fine_type=None,
        )
    if family == "product_P1xP3":
        return _product_entry("P1xP3", 1, 3, "p1xp3", fine_type="3")
    if family == "product_P2xP2":
        return _product_entry("P2xP2", 2, 2, "p2xp2", fine_type="4")
    raise InputError(f"unknown catalog family {family!r}")


def standard_catalog() -> dict[str, VarietyData]:
    """The named entries used throughout the verification suites."""
    entries = [
        catalog_build("projective_space", 1),
        catalog_build("projective_space", 2),
        catalog_build("projective_space", 3),
        catalog_build("projective_space", 4),
        catalog_build("product_P1xP3"),
        catalog_build("product_P2xP2"),
    ]
    entries += [catalog_build("hypersurface_in_P5", d) for d in range(2, 8)]
    entries.append(catalog_build("abelian_fourfold", 24))
    return {v.name: v for v in entries}


FOURFOLD_NAMES = ("P4", "P1xP3", "P2xP2", "Q4", "X3", "X4", "X5", "X6", "X7", "A4")


# -- exact section counts ----------------------------------------------------


def h0_exact(v: VarietyData, d: DivisorClass) -> int:
    """Exact h^0 from the per-family oracle (independent of Riemann-Roch)."""
    tag = v.h0_oracle
    if tag is None:
        raise AbstainError(f"{v.name} has no exact section-count oracle")
    if tag.startswith("p") and tag[1:].isdigit():
        n = int(tag[1:])
        m = d.coeffs[0]
        return comb(m + n, n) if m >= 0 else 0
    if tag == "p1xp3":
        c, e = d.coeffs
        if c < 0 or e < 0:
            return 0
        return (c + 1) * comb(e + 3, 3)
    if tag == "p2xp2":
        c, e = d.coeffs
        if c < 0 or e < 0:
            return 0
        return comb(c + 2, 2) * comb(e + 2, 2)
    if tag.startswith("hypersurface:"):
        deg = int(tag.split(":", 1)[1])
        m = d.coeffs[0]
        if m < 0:
            return 0
        # restriction from P^5: 0 -> O(m-d) -> O(m) -> O_X(m) -> 0
        count = comb(m + 5, 5)
        if m >= deg:
            count -= comb(m - deg + 5, 5)
        return count
    if tag == "abelian":
        m = d.coeffs[0]
        l4 = v.intersection_form[(4,)]
        if m < 0:
            return 0
        if m == 0:
            return 1
        return m**4 * l4 // 24
    raise InputError(f"unknown oracle tag {tag!r} on {v.name}")


# -- model validation --------------------------------------------------------


def validate(v: VarietyData) -> VerificationReport:
    """Consistency checks; a failing report invalidates downstream results."""
    from . import hrr  # local import: hrr builds on this module

    report = VerificationReport(title=f"validate:{v.name}")
    report.add(
        "h0(O) = 1",
        v.hodge[0] == 1,
        expected=1,
        actual=v.hodge[0],
    )
    missing = [m for m in _monomials(len(v.generators), v.dim) if m not in v.intersection_form]
    report.add(
        "intersection form complete",
        not missing,
        expected="all degree-n monomials",
        actual=f"missing {missing}" if missing else "complete",
    )
    if v.dim >= 3:
        missing2 = [m for m in _monomials(len(v.generators), v.dim - 2) if m not in v.c2_pairings]
        report.add(
            "c2 pairings complete",
            not missing2,
            expected="all degree-(n-2) monomials",
            actual=f"missing {missing2}" if missing2 else "complete",
        )

    samples = _ample_samples(v)
    if v.dim == 4:
        for ample in samples:
            val = intersection_number(v, [v.canonical + 3 * ample, ample, ample, ample])
            report.add(
                f"(K+3L)L^3 even at L={v.divisor_string(ample)}",
                val % 2 == 0,
                expected="even",
                actual=val,
            )

    if v.h0_oracle is not None:
        for ample in samples[:1]:
            for m in (1, 2, 3):
                d = m * ample
                if not v.is_ample(d - v.canonical):
                    continue
                count = h0_exact(v, d)
                try:
                    chi = hrr.chi_divisor(v, d)
                except ModelError as exc:
                    report.add(
                        f"chi({m}{v.divisor_string(ample)}) matches section count",
                        False,
                        expected=count,
                        actual=str(exc),
                    )
                    continue
                report.add(
                    f"chi({m}{v.divisor_string(ample)}) matches section count",
                    chi == count,
                    expected=count,
                    actual=chi,
                )

    if v.polarization is not None:
        try:
            poly = hrr.chi_multi(v, [v.polarization])
        except ModelError as exc:
            report.add("chi expansion integral", False, actual=str(exc))
        else:
            report.add(
                "chi expansion integral",
                poly.is_integral(),
                expected="integer coefficients",
                actual="ok" if poly.is_integral() else str(poly.coeffs),
            )
    return report


def _ample_samples(v: VarietyData) -> list[DivisorClass]:
    g = len(v.generators)
    samples = [DivisorClass((1,) * g), DivisorClass((2,) * g)]
    if g == 2:
        samples.append(DivisorClass((1, 2)))
        samples.append(DivisorClass((3, 1)))
    else:
        samples.append(DivisorClass((3,) * g))
    return samples


# -- JSON interchange --------------------------------------------------------


def _monomial_to_string(exps: tuple[int, ...], generators: tuple[str, ...]) -> str:
    parts = []
    for e, name in zip(exps, generators):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts) if parts else "1"


def _monomial_from_string(text: str, generators: tuple[str, ...]) -> tuple[int, ...]:
    exps = [0] * len(generators)
    text = text.strip()
    if text in ("", "1"):
        return tuple(exps)
    for token in text.split():
        if "^" in token:
            name, _, power = token.partition("^")
            e = int(power)
        else:
            name, e = token, 1
        if name not in generators:
            raise InputError(f"unknown generator {name!r} in monomial {text!r}")
        exps[generators.index(name)] += e
    return tuple(exps)


def _kappa_to_json(value):
    if value is None:
        return None
    if value == NEG_INF:
        return "-inf"
    return int(value)


def _kappa_from_json(value):
    if value is None:
        return None
    if value == "-inf" or value == NEG_INF:
        return NEG_INF
    return int(value)


def variety_to_json(v: VarietyData) -> dict:
    decls = {}
    for key, decl in v.kappa_adjoint.items():
        decls[key] = {
            "kappa": {str(a): _kappa_to_json(k) for a, k in sorted(decl.kappa.items())},
            "fine_type": decl.fine_type,
        }
    return {
        "name": v.name,
        "dim": v.dim,
        "generators": list(v.generators),
        "intersections": {
            _monomial_to_string(m, v.generators): val
            for m, val in sorted(v.intersection_form.items())
        },
        "canonical": list(v.canonical.coeffs),
        "c2_pairings": {
            _monomial_to_string(m, v.generators): val for m, val in sorted(v.c2_pairings.items())
        },
        "hodge": list(v.hodge),
        "nef_cone": v.nef_cone.kind,
        "kappa_X": _kappa_to_json(v.kappa_x),
        "kappa_adjoint": decls,
        "oracle": v.h0_oracle,
        "polarization": list(v.polarization.coeffs) if v.polarization else None,
    }


def variety_from_json(data: dict) -> VarietyData:
    try:
        generators = tuple(data["generators"])
        decls = {}
        for key, raw in (data.get("kappa_adjoint") or {}).items():
            decls[key] = AdjointDeclaration(
                kappa={int(a): _kappa_from_json(k) for a, k in (raw.get("kappa") or {}).items()},
                fine_type=raw.get("fine_type"),
            )
        pol = data.get("polarization")
        return VarietyData(
            name=data["name"],
            dim=int(data["dim"]),
            generators=generators,
            intersection_form={
                _monomial_from_string(k, generators): int(val)
                for k, val in data["intersections"].items()
            },
            canonical=DivisorClass(tuple(data["canonical"])),
            c2_pairings={
                _monomial_from_string(k, generators): int(val)
                for k, val in (data.get("c2_pairings") or {}).items()
            },
            hodge=tuple(data["hodge"]),
            nef_cone=ConeDescriptor(data["nef_cone"]),
            kappa_x=_kappa_from_json(data.get("kappa_X")),
            kappa_adjoint=decls,
            h0_oracle=data.get("oracle"),
            polarization=DivisorClass(tuple(pol)) if pol else None,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed variety description: {exc}") from exc


def load_variety(path: str | Path) -> VarietyData:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read variety file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return variety_from_json(data)


def save_variety(v: VarietyData, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(variety_to_json(v), handle, indent=2, sort_keys=True)
        handle.write("\n")
