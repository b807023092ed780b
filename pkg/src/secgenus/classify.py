"""Adjunction-theoretic classification over declared Kodaira dimensions.

The classifier is a decision table: the declared value of
kappa(K + (n-2)L) splits polarized manifolds of dimension n >= 3 into
three groups (the low types through the second projective-bundle
reductions, the Mukai case, and the higher fibration/big-adjoint types),
and for 4-folds the declared kappa(K + L) refines the picture into the
two terminal branches (a second-reduction chain with nef value at most
one, or the explicit low-Kodaira list).  Nothing geometric is ever
computed: declarations in, labels out, with hard consistency checks
between the declarations and any declared fine type.

Fine types use the standard numbering as opaque strings: "1" through
"7.9" for the main list, and dotted "4.x" strings for the terminal
low-Kodaira sublist, which this toolkit does not interpret further.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AbstainError, InputError
from .report import VerificationReport
from .variety import NEG_INF, DivisorClass, VarietyData

GROUP_LOW = ("1", "2", "3", "4", "5", "6", "7.1", "7.2", "7.3", "7.4")
GROUP_MUKAI = ("7.5",)
GROUP_HIGH = ("7.6", "7.7", "7.8", "7.9")
TH2_LOW_LIST = ("1", "2", "3", "4", "5", "6", "7.1", "7.5", "7.6", "7.7", "7.8")

GROUP_LOW_LABEL = "1-7.4"
GROUP_HIGH_LABEL = "7.6-7.9"


@dataclass(frozen=True)
class DeclaredInvariants:
    """Declared kappa(K + a L) values by twist a, plus optional refinements."""

    n: int
    kappa: dict[int, "int | float | None"] = field(default_factory=dict)
    fine_type: str | None = None
    tau: Fraction | None = None  # declared nef value, echoed only


@dataclass(frozen=True)
class AdjunctionLabel:
    group: str
    exact: str | None
    th2: str | None
    certainty: str  # "exact" or "coarse-group"

    def to_string(self) -> str:
        if self.exact is not None:
            return self.exact
        if self.group == "7.5":
            return "7.5"
        if self.group == GROUP_LOW_LABEL:
            return GROUP_LOW_LABEL
        if self.th2 is not None:
            return self.th2
        return self.group


def validate_invariants(inv: DeclaredInvariants) -> VerificationReport:
    """Range and monotonicity checks on the declarations."""
    report = VerificationReport(title="declared-invariants")
    if inv.n < 3:
        report.add("dimension >= 3", False, expected=">= 3", actual=inv.n)
        return report
    report.add("dimension >= 3", True, expected=">= 3", actual=inv.n)
    for a, value in sorted(inv.kappa.items()):
        if value is None:
            continue
        in_range = value == NEG_INF or (isinstance(value, int) and 0 <= value <= inv.n)
        report.add(
            f"kappa(K+{a}L) in range",
            in_range,
            expected=f"-inf or 0..{inv.n}",
            actual=value,
        )
    declared = sorted((a, k) for a, k in inv.kappa.items() if k is not None)
    for (a1, k1), (a2, k2) in zip(declared, declared[1:]):
        report.add(
            f"monotone kappa(K+{a1}L) <= kappa(K+{a2}L)",
            k1 <= k2,
            expected=f"<= {k2}",
            actual=k1,
        )
    if inv.fine_type is not None:
        known = inv.fine_type in GROUP_LOW + GROUP_MUKAI + GROUP_HIGH or inv.fine_type.startswith(
            "4."
        )
        report.add("fine type known", known, expected="a listed type", actual=inv.fine_type)
    return report


def _group_of(kappa_sub: "int | float") -> str:
    if kappa_sub == NEG_INF:
        return GROUP_LOW_LABEL
    if kappa_sub == 0:
        return "7.5"
    return GROUP_HIGH_LABEL


def classify(inv: DeclaredInvariants) -> AdjunctionLabel:
    """Coarsest label the declarations determine; exact only when declared."""
    validation = validate_invariants(inv)
    if not validation.passed:
        failed = "; ".join(c.name for c in validation.failures)
        raise InputError(f"invalid declared invariants: {failed}")
    n = inv.n
    kappa_sub = inv.kappa.get(n - 2)
    if kappa_sub is None:
        raise AbstainError(f"kappa(K+{n - 2}L) is undeclared; the three-way split needs it")
    group = _group_of(kappa_sub)

    th2 = None
    if n == 4:
        kappa_low = inv.kappa.get(1)
        if kappa_low is not None:
            if kappa_low >= 0:
                th2 = "TH2-1"
            elif inv.fine_type is not None and inv.fine_type.startswith("4."):
                th2 = "TH2-2.2"
            elif inv.fine_type is not None and inv.fine_type in TH2_LOW_LIST:
                th2 = "TH2-2.1"
            else:
                th2 = "TH2-2"

    exact = None
    certainty = "coarse-group"
    if group == "7.5":
        exact = "7.5"
        certainty = "exact"
    if inv.fine_type is not None:
        _check_fine_consistency(inv.fine_type, group, inv)
        exact = inv.fine_type
        certainty = "exact"
    return AdjunctionLabel(group=group, exact=exact, th2=th2, certainty=certainty)


def _check_fine_consistency(fine: str, group: str, inv: DeclaredInvariants) -> None:
    if fine.startswith("4."):
        if group != GROUP_HIGH_LABEL:
            raise InputError(
                f"terminal type {fine!r} needs kappa(K+{inv.n - 2}L) >= 1, "
                f"but declarations give group {group}"
            )
        kappa_low = inv.kappa.get(1)
        if inv.n == 4 and kappa_low is not None and kappa_low != NEG_INF:
            raise InputError(f"terminal type {fine!r} needs kappa(K+L) = -inf")
        return
    expected_group = (
        GROUP_LOW_LABEL if fine in GROUP_LOW else "7.5" if fine in GROUP_MUKAI else GROUP_HIGH_LABEL
    )
    if group != expected_group:
        raise InputError(
            f"declared fine type {fine!r} belongs to group {expected_group}, "
            f"but kappa declarations give {group}"
        )


def invariants_from_variety(v: VarietyData, ell: DivisorClass) -> DeclaredInvariants:
    """Assemble the declared invariants a catalog entry carries for L."""
    decl = v.declaration_for(ell)
    if decl is None:
        return DeclaredInvariants(n=v.dim, kappa={})
    return DeclaredInvariants(n=v.dim, kappa=dict(decl.kappa), fine_type=decl.fine_type)


def classify_variety(v: VarietyData, ell: DivisorClass) -> AdjunctionLabel:
    return classify(invariants_from_variety(v, ell))
