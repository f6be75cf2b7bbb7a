"""Numerical classes on a Weierstrass fibration.

A smooth Weierstrass fibration ``S -> B`` with Picard number two has
``N^1(S) = Z[C] + Z[f]`` where ``C`` is the section and ``f`` a fiber. The
intersection form is fixed by ``C^2 = -n``, ``C.f = 1`` and ``f^2 = 0`` where
``n`` is the degree of the fundamental line bundle on the base curve.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class HypothesisError(ValueError):
    """Raised when an input violates a standing hypothesis of a result.

    ``hypothesis`` names the condition that failed, so callers (and the CLI)
    can report which assumption was broken.
    """

    def __init__(self, hypothesis: str, message: str | None = None):
        self.hypothesis = hypothesis
        super().__init__(message or f"hypothesis failed: {hypothesis}")


@dataclass(frozen=True)
class SurfaceData:
    """Base genus ``g`` and fundamental degree ``n`` of the fibration."""

    g: int
    n: int

    def __post_init__(self):
        if self.g < 0 or self.n < 0:
            raise ValueError(f"g and n must be non-negative, got g={self.g}, n={self.n}")

    def require_fibration(self) -> "SurfaceData":
        # n = 0 is the product B x F; nothing here applies to it
        if self.n < 1:
            raise HypothesisError("n >= 1", "requires n ≥ 1 (product surfaces are excluded)")
        return self


@dataclass(frozen=True)
class DivisorClass:
    """The class ``alpha*C + beta*f``."""

    alpha: int
    beta: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.alpha + other.alpha, self.beta + other.beta)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.alpha - other.alpha, self.beta - other.beta)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.alpha, -self.beta)

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.alpha, k * self.beta)


SECTION = DivisorClass(1, 0)
FIBER = DivisorClass(0, 1)


def intersect(d1: DivisorClass, d2: DivisorClass, surface: SurfaceData) -> int:
    return -d1.alpha * d2.alpha * surface.n + d1.alpha * d2.beta + d2.alpha * d1.beta


def canonical_class(surface: SurfaceData) -> DivisorClass:
    surface.require_fibration()
    return DivisorClass(0, surface.n + 2 * surface.g - 2)


def genus_of_class(d: DivisorClass, surface: SurfaceData) -> Fraction:
    """Arithmetic genus ``D.(D + K)/2 + 1``, exact.

    Non-integral values are returned as is; whether that is an error depends
    on the caller.
    """
    k = canonical_class(surface)
    return Fraction(intersect(d, d + k, surface), 2) + 1


def sectional_genus(a: int, b: int, surface: SurfaceData) -> Fraction:
    return genus_of_class(DivisorClass(a, b), surface)


def chi_structure_sheaf(surface: SurfaceData) -> int:
    # 1 - q + p_g with q = g and p_g = n - 1 + g
    surface.require_fibration()
    return 1 - surface.g + (surface.n - 1 + surface.g)


def riemann_roch_chi(d: DivisorClass, surface: SurfaceData) -> int:
    k = canonical_class(surface)
    twice = 2 * chi_structure_sheaf(surface) + intersect(d, d - k, surface)
    assert twice % 2 == 0, f"non-integral Euler characteristic for {d} on {surface}"
    return twice // 2
