"""Cohomology of numerical classes on the base curve and on the surface.

A numerical class only determines a line bundle up to a twist by ``Pic^0``
of the base, so answers carry a kind:

``EXACT``
    the dimension is forced by the degree alone;
``GENERIC``
    the value taken by a general twist (the minimum over the family);
``INDETERMINATE``
    only bounds are known, from Riemann-Roch and Clifford.

The policy decides whether non-forced curve answers are reported as their
generic value or as bounds.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .lattice import DivisorClass, SurfaceData, canonical_class


class Kind(enum.Enum):
    EXACT = "exact"
    GENERIC = "generic"
    INDETERMINATE = "indeterminate"


class GenericityPolicy(enum.Enum):
    REQUIRE_EXACT = "exact"
    ASSUME_GENERIC = "generic"


@dataclass(frozen=True)
class CohomologyAnswer:
    kind: Kind
    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi:
            raise ValueError(f"bad bounds [{self.lo}, {self.hi}]")
        if self.kind is not Kind.INDETERMINATE and self.lo != self.hi:
            raise ValueError(f"{self.kind.value} answer needs a single value")

    @classmethod
    def exact(cls, value: int) -> "CohomologyAnswer":
        return cls(Kind.EXACT, value, value)

    @classmethod
    def generic(cls, value: int) -> "CohomologyAnswer":
        return cls(Kind.GENERIC, value, value)

    @property
    def value(self) -> int:
        if self.kind is Kind.INDETERMINATE:
            raise ValueError(f"indeterminate answer in [{self.lo}, {self.hi}]")
        return self.lo

    def is_zero(self) -> bool:
        """True when the group provably vanishes (generic answers count)."""
        return self.hi == 0

    def __add__(self, other: "CohomologyAnswer") -> "CohomologyAnswer":
        if Kind.INDETERMINATE in (self.kind, other.kind):
            kind = Kind.INDETERMINATE
        elif Kind.GENERIC in (self.kind, other.kind):
            kind = Kind.GENERIC
        else:
            kind = Kind.EXACT
        return CohomologyAnswer(kind, self.lo + other.lo, self.hi + other.hi)

    def to_dict(self) -> dict:
        if self.kind is Kind.INDETERMINATE:
            return {"kind": self.kind.value, "min": self.lo, "max": self.hi}
        return {"kind": self.kind.value, "value": self.lo}


ZERO = CohomologyAnswer.exact(0)


def total(answers: Iterable[CohomologyAnswer]) -> CohomologyAnswer:
    result = ZERO
    for answer in answers:
        result = result + answer
    return result


def curve_h(
    g: int, d: int, policy: GenericityPolicy = GenericityPolicy.ASSUME_GENERIC
) -> tuple[CohomologyAnswer, CohomologyAnswer]:
    """``(h^0, h^1)`` of a degree ``d`` line bundle on a genus ``g`` curve."""
    if g < 0:
        raise ValueError(f"genus must be non-negative, got {g}")
    chi = d + 1 - g
    if d < 0:
        return ZERO, CohomologyAnswer.exact(-chi)
    if d > 2 * g - 2:
        return CohomologyAnswer.exact(chi), ZERO
    h0 = max(chi, 0)
    if policy is GenericityPolicy.ASSUME_GENERIC:
        return CohomologyAnswer.generic(h0), CohomologyAnswer.generic(h0 - chi)
    h0_max = 1 + d // 2  # Clifford
    return (
        CohomologyAnswer(Kind.INDETERMINATE, h0, h0_max),
        CohomologyAnswer(Kind.INDETERMINATE, h0 - chi, h0_max - chi),
    )


def pushforward_summands(d: DivisorClass, surface: SurfaceData) -> list[int]:
    """Degrees of the line bundles splitting ``pi_* O_S(alpha*C + beta*f)``.

    ``pi_* O_S(mC)`` is ``O + L^-2 + ... + L^-m`` for ``m >= 2`` (there is no
    ``L^-1`` summand), and ``O`` for ``m`` in {0, 1}.
    """
    if d.alpha < 0:
        raise ValueError(f"pushforward needs alpha >= 0, got {d.alpha}; dualize first")
    return [d.beta] + [d.beta - i * surface.n for i in range(2, d.alpha + 1)]


def _higher_direct_image_summands(d: DivisorClass, surface: SurfaceData) -> list[int]:
    # R^1 pi_* O_S(alpha*C) for alpha <= 0 is dual to pi_* O_S(-alpha*C) twisted
    # by L^-1 (relative dualizing sheaf is pi^* L)
    assert d.alpha <= 0
    return [d.beta - surface.n - e for e in pushforward_summands(DivisorClass(-d.alpha, 0), surface)]


def surface_h(
    d: DivisorClass,
    surface: SurfaceData,
    q: int,
    policy: GenericityPolicy = GenericityPolicy.ASSUME_GENERIC,
) -> CohomologyAnswer:
    """``h^q(S, D)`` computed on the base through the Leray spectral sequence."""
    surface.require_fibration()
    if q not in (0, 1, 2):
        raise ValueError(f"cohomology index must be 0, 1 or 2, got {q}")
    g = surface.g
    direct = pushforward_summands(d, surface) if d.alpha >= 0 else []
    higher = _higher_direct_image_summands(d, surface) if d.alpha <= 0 else []
    # H^q(S) = H^q(B, pi_*) + H^{q-1}(B, R^1 pi_*); each term on B has q in {0, 1}
    parts = []
    if q <= 1:
        parts += [curve_h(g, e, policy)[q] for e in direct]
    if q >= 1:
        parts += [curve_h(g, e, policy)[q - 1] for e in higher]
    return total(parts)


def surface_h_all(
    d: DivisorClass, surface: SurfaceData, policy: GenericityPolicy = GenericityPolicy.ASSUME_GENERIC
) -> tuple[CohomologyAnswer, CohomologyAnswer, CohomologyAnswer]:
    return tuple(surface_h(d, surface, q, policy) for q in range(3))


def serre_dual(d: DivisorClass, surface: SurfaceData) -> DivisorClass:
    return canonical_class(surface) - d


# Sufficient criteria. A False return means the criterion is silent, except for
# very_ample_necessary where False proves the class is not very ample.


def h1_vanishes(d: DivisorClass, surface: SurfaceData) -> bool:
    a, b, n, g = d.alpha, d.beta, surface.n, surface.g
    return (a == 1 and b >= 2 * g - 1) or (a >= 2 and b >= a * n + 2 * g - 1)


def base_point_free(d: DivisorClass, surface: SurfaceData) -> bool:
    return d.alpha >= 2 and d.beta >= d.alpha * surface.n + 2 * surface.g


def very_ample_sufficient(d: DivisorClass, surface: SurfaceData) -> bool:
    return d.alpha >= 3 and d.beta >= d.alpha * surface.n + 2 * surface.g + 1


def very_ample_necessary(d: DivisorClass, surface: SurfaceData) -> bool:
    # D.f = alpha >= 3 and D.C = beta - alpha*n >= 1
    return d.alpha >= 3 and d.beta >= d.alpha * surface.n + 1


class GonalityStatus(enum.Enum):
    NON_TRIGONAL = "non-trigonal"
    NON_HYPERELLIPTIC_TRIGONAL = "non-hyperelliptic-trigonal"
    TRIGONAL = "trigonal"
    UNKNOWN = "unknown"


def general_member_gonality(d0: DivisorClass, surface: SurfaceData) -> GonalityStatus:
    """Gonality information on a general curve in ``|D0|``.

    Over an elliptic base, ``2C + beta*f`` with ``beta >= 2n + 2g`` gives
    curves that are neither hyperelliptic nor trigonal. Over ``P^1``,
    ``3C + beta*f`` with ``beta >= 3n`` gives nonhyperelliptic curves on
    which the fibers cut a ``g^1_3``. Nothing is claimed elsewhere.
    """
    g, n = surface.g, surface.n
    if g >= 1 and d0.alpha == 2 and d0.beta >= 2 * n + 2 * g:
        return GonalityStatus.NON_TRIGONAL
    if g == 0 and d0.alpha == 3 and d0.beta >= 3 * n:
        return GonalityStatus.NON_HYPERELLIPTIC_TRIGONAL
    return GonalityStatus.UNKNOWN


def remark_van_holds(a: int, b: int, surface: SurfaceData, d: int) -> bool:
    """Vanishing of ``H^1(K_S + H - f_1 - ... - f_d)`` for ``H = aC + bf``.

    ``d`` is the degree of a very ample bundle on the base; the fibers
    ``f_i`` are cut out by one of its sections.
    """
    if d < 1:
        raise ValueError(f"degree of a very ample bundle must be >= 1, got {d}")
    if d > b - a * surface.n:
        return False
    twisted = DivisorClass(a, b + surface.n + 2 * surface.g - 2 - d)
    return h1_vanishes(twisted, surface)
