"""Closed-form invariants of a smooth Weierstrass fibration."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .cohomology import very_ample_necessary
from .lattice import DivisorClass, SurfaceData, chi_structure_sheaf, sectional_genus


class Kodaira(enum.Enum):
    NEG_INFINITY = "-inf"
    ZERO = "0"
    ONE = "1"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SurfaceInvariants:
    q: int
    p_g: int
    h11: int
    chi_O: int
    kodaira: Kodaira


def kodaira_dimension(surface: SurfaceData) -> Kodaira:
    surface.require_fibration()
    if (surface.g, surface.n) == (0, 1):
        return Kodaira.NEG_INFINITY  # rational
    if (surface.g, surface.n) == (0, 2):
        return Kodaira.ZERO  # K3
    return Kodaira.ONE


def compute_invariants(surface: SurfaceData) -> SurfaceInvariants:
    surface.require_fibration()
    g, n = surface.g, surface.n
    return SurfaceInvariants(
        q=g,
        p_g=n - 1 + g,
        h11=10 * n + 2 * g,
        chi_O=chi_structure_sheaf(surface),
        kodaira=kodaira_dimension(surface),
    )


def picard_rank_bounds(surface: SurfaceData) -> tuple[int, int]:
    return 2, compute_invariants(surface).h11


K3 = SurfaceData(g=0, n=2)


def _k3_genus_floor(a: int) -> int | None:
    """Least genus ``a(b - a) + 1`` over ``b`` with ``aC + bf`` passing the
    very-ampleness necessary test, or None if no ``b`` passes.

    The test is monotone in ``b`` so a huge ``b`` decides existence, and the
    genus is increasing in ``b`` so the least passing ``b`` is the minimizer.
    """
    if not very_ample_necessary(DivisorClass(a, 10**9), K3):
        return None
    b = next(b for b in itertools.count(a * K3.n) if very_ample_necessary(DivisorClass(a, b), K3))
    return int(sectional_genus(a, b, K3))


def min_k3_sectional_genus(max_a: int = 10**4) -> int:
    """Least sectional genus of a very ample class on a Weierstrass K3 with rho = 2.

    Scans ``a = H.f`` upwards. Past the first admissible ``a`` the per-``a``
    floor ``a(a + 1) + 1`` only grows, so the scan stops at the first
    non-improvement.
    """
    best = None
    for a in range(1, max_a):
        floor = _k3_genus_floor(a)
        if floor is None:
            continue
        if best is not None and floor >= best:
            return best
        best = floor
    raise RuntimeError("no admissible class found")
