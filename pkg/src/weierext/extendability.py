"""Extendability verdicts for embedded Weierstrass fibrations.

Nothing here stores a classification list: the admissible ``(a, C.f)``
pairs come from a small model of anticanonical Del Pezzo surfaces, the K3
triples from a bounded brute-force scan, and the parametric thresholds from
evaluating the Gaussian-map conditions and the scroll vanishing at run time.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .cohomology import (
    GonalityStatus,
    general_member_gonality,
    very_ample_necessary,
)
from .invariants import K3, Kodaira, kodaira_dimension, min_k3_sectional_genus
from .lattice import (
    DivisorClass,
    FIBER,
    HypothesisError,
    SECTION,
    SurfaceData,
    canonical_class,
    intersect,
    sectional_genus,
)
from .scroll import zak_nonextendable


class Conclusion(enum.Enum):
    NOT_EXTENDABLE = "NotExtendable"
    NOT_LCI_EXTENDABLE = "NotLciExtendable"
    NOT_LCI_TERMINAL_EXTENDABLE = "NotLciTerminalExtendable"
    NOT_NORMALLY_EXTENDABLE = "NotNormallyExtendable"
    FANO_CONSTRAINT = "FanoConstraint"
    NO_VERDICT = "NoVerdict"


@dataclass(frozen=True)
class Verdict:
    conclusion: Conclusion
    rule: str | None = None
    witness: str = ""

    def __post_init__(self):
        if (self.conclusion is Conclusion.NO_VERDICT) != (self.rule is None):
            raise ValueError("a verdict carries a rule exactly when it concludes something")

    @property
    def fired(self) -> bool:
        return self.conclusion is not Conclusion.NO_VERDICT

    def to_dict(self) -> dict:
        return {"conclusion": self.conclusion.value, "rule": self.rule, "witness": self.witness}


NO_VERDICT = Verdict(Conclusion.NO_VERDICT)

# Rule identifiers carried by verdicts.
RULE_GAUSSIAN = "gaussian"  # Gaussian-map criterion on a curve section D0
RULE_ZAK = "zak"  # H^1(T_S(-1)) = 0 through the Weierstrass scroll
RULE_FIBRATION = "fibration-extension"  # l.c.i. extensions would extend pi
RULE_K3_NORMAL = "k3-normal-genus-bound"
RULE_K3_LCI = "k3-lci-divisibility"
RULE_K3_TERMINAL = "k3-terminal-fano-genus"


# --- Del Pezzo fibers -----------------------------------------------------


@dataclass(frozen=True)
class DelPezzoModel:
    """An anticanonically embeddable Del Pezzo surface given by its Picard lattice.

    ``gram`` is the intersection matrix on a basis of Pic and ``anticanonical``
    the coordinates of ``-K``.
    """

    name: str
    gram: tuple[tuple[int, ...], ...]
    anticanonical: tuple[int, ...]
    blown_up_points: int | None = None

    def pair(self, x, y) -> int:
        return sum(x[i] * self.gram[i][j] * y[j] for i in range(len(x)) for j in range(len(y)))

    @property
    def degree(self) -> int:
        return self.pair(self.anticanonical, self.anticanonical)

    @property
    def index(self) -> int:
        """Largest ``r`` with ``-K`` divisible by ``r`` in Pic."""
        return math.gcd(*self.anticanonical)


def projective_plane_blowup(k: int) -> DelPezzoModel:
    gram = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(k + 1)) for i in range(k + 1))
    return DelPezzoModel(f"Bl_{k} P2" if k else "P2", gram, (3,) + (1,) * k, blown_up_points=k)


QUADRIC = DelPezzoModel("P1xP1", ((0, 1), (1, 0)), (2, 2))

# embedded anticanonical Del Pezzo surfaces need 3 <= K^2 <= 9
MIN_EMBEDDED_DEGREE, MAX_DEGREE = 3, 9


def del_pezzo_models() -> list[DelPezzoModel]:
    models = [projective_plane_blowup(k) for k in range(MAX_DEGREE - MIN_EMBEDDED_DEGREE + 1)]
    models.append(QUADRIC)
    return [m for m in models if MIN_EMBEDDED_DEGREE <= m.degree <= MAX_DEGREE]


def del_pezzo_line_count(d: int) -> int:
    """Number of lines on the blow-up of ``P^2`` in ``9 - d`` general points."""
    if not 3 <= d <= 8:
        raise ValueError(f"line count is defined for 3 <= d <= 8, got {d}")
    k = 9 - d
    return k + math.comb(k, 2) + math.comb(k, 5)


def allowed_factorial_degrees() -> set[int]:
    # on a locally factorial extension the lines sweep a Cartier divisor T and
    # #lines = T.F.L = r*d, so d must divide the line count
    return {d for d in range(3, 9) if del_pezzo_line_count(d) % d == 0}


def _fiber_pairs(model: DelPezzoModel, locally_factorial: bool) -> Iterator[tuple[int, int]]:
    d = model.degree
    for a in range(1, model.index + 1):
        if model.index % a:
            continue
        # L|F = a E|F = -K_F and d = a * C.f
        if locally_factorial:
            if a < model.index:
                # -K_F divisible on the generic fiber would descend to a line
                # bundle on X restricting to -K_F / index: impossible with a < index
                continue
            if model.blown_up_points and d not in allowed_factorial_degrees():
                continue
        yield a, d // a


def fibra_pairs(locally_factorial: bool = False) -> set[tuple[int, int]]:
    """Possible ``(a, C.f)`` for an l.c.i. extension to which ``pi`` extends."""
    return {pair for model in del_pezzo_models() for pair in _fiber_pairs(model, locally_factorial)}


# fibers of the threefolds built as examples of smooth extensions
EXAMPLE_FIXTURES = (
    ("uno", 3, 3),
    ("due", 1, 3),
    ("tre", 2, 4),
    ("quattro", 1, 4),
    ("cinque", 1, 5),
    ("sei", 1, 6),
)


def example_fixtures() -> list[tuple[str, int, int]]:
    return list(EXAMPLE_FIXTURES)


# --- Gaussian-map criterion ------------------------------------------------


def gaussian_bel_surjective(curve_genus: int, clifford: int, deg_L: int) -> bool:
    g = curve_genus
    return (clifford >= 2 and deg_L >= 4 * g + 1 - 2 * clifford) or (
        clifford >= 3 and deg_L >= 4 * g + 1 - 3 * clifford
    )


@dataclass(frozen=True)
class NumericalConditions:
    """Each condition of the Gaussian-map criterion, ``None`` when not applicable."""

    t: int  # D0.(D0 + K_S), twice the genus of D minus 2
    H_dot_D0: int
    genus_bound: bool
    positivity: bool
    vanishing: bool
    restriction: bool
    non_trigonal: bool | None
    trigonal: bool | None
    genus_four: bool | None

    def holds(self) -> bool:
        return all(v is not False for v in (
            self.genus_bound, self.positivity, self.vanishing, self.restriction,
            self.non_trigonal, self.trigonal, self.genus_four,
        ))

    def witness(self) -> str:
        return f"t = D0.(D0+K) = {self.t}, H.D0 = {self.H_dot_D0}"


def numerical_conditions(
    surface: SurfaceData, a: int, b: int, d0: DivisorClass, gonality: GonalityStatus
) -> NumericalConditions:
    g, n = surface.g, surface.n
    alpha, beta = d0.alpha, d0.beta
    H = DivisorClass(a, b)
    K = canonical_class(surface)
    t = intersect(d0, d0 + K, surface)
    h_d0 = intersect(H, d0, surface)
    d0_sq = intersect(d0, d0, surface)
    c = a - 2 * alpha
    trigonal = gonality in (GonalityStatus.TRIGONAL, GonalityStatus.NON_HYPERELLIPTIC_TRIGONAL)
    return NumericalConditions(
        t=t,
        H_dot_D0=h_d0,
        genus_bound=t >= 6 and t != 10,
        positivity=alpha >= 2 and beta >= alpha * n + 2 * g,
        vanishing=(c >= 2 and b - 2 * beta >= c * n + g - 1) or (c == 1 and b - 2 * beta >= g - 1),
        restriction=h_d0 - d0_sq >= t + 3,
        non_trigonal=(h_d0 >= 2 * t + 1) if gonality is GonalityStatus.NON_TRIGONAL else None,
        trigonal=(h_d0 >= Fraction(3, 2) * t + 10) if trigonal and t >= 8 else None,
        genus_four=(h_d0 >= 17) if t == 6 else None,
    )


def prop_numerical_check(
    surface: SurfaceData,
    a: int,
    b: int,
    alpha: int,
    beta: int,
    gonality: GonalityStatus,
    linearly_normal: bool,
) -> Verdict:
    """Gaussian-map nonextendability test with curve section class ``alpha*C + beta*f``.

    ``gonality`` describes a general member of ``|D0|`` and must exclude
    hyperelliptic curves; it is usually :func:`general_member_gonality`.
    """
    surface.require_fibration()
    if gonality is GonalityStatus.UNKNOWN:
        raise HypothesisError("general D in |D0| is not hyperelliptic")
    if surface.g != 0 and not linearly_normal:
        raise HypothesisError("either g = 0 or S is linearly normal")
    conds = numerical_conditions(surface, a, b, DivisorClass(alpha, beta), gonality)
    if conds.holds():
        return Verdict(Conclusion.NOT_EXTENDABLE, RULE_GAUSSIAN, f"D0 = ({alpha}, {beta}); {conds.witness()}")
    return NO_VERDICT


def gaussian_test_class(surface: SurfaceData) -> DivisorClass:
    """The curve section class used for the parametric verdict."""
    n, g = surface.n, surface.g
    return DivisorClass(3, 3 * n) if g == 0 else DivisorClass(2, 2 * n + 2 * g)


def gaussian_verdict(surface: SurfaceData, a: int, b: int, linearly_normal: bool) -> Verdict:
    d0 = gaussian_test_class(surface)
    gonality = general_member_gonality(d0, surface)
    try:
        return prop_numerical_check(surface, a, b, d0.alpha, d0.beta, gonality, linearly_normal)
    except HypothesisError:
        return NO_VERDICT


def zak_verdict(surface: SurfaceData, a: int, b: int) -> Verdict:
    if zak_nonextendable(surface, a, b):
        return Verdict(Conclusion.NOT_EXTENDABLE, RULE_ZAK, f"a = {a} = 3*{a // 3}, H^1(T_S(-H_S)) = 0")
    return NO_VERDICT


def require_very_ample_candidate(surface: SurfaceData, a: int, b: int) -> None:
    if not very_ample_necessary(DivisorClass(a, b), surface):
        raise HypothesisError(
            "a >= 3 and b >= an + 1",
            f"({a}, {b}) is not a very ample class: needs a ≥ 3 and b ≥ an + 1 = {a * surface.n + 1}",
        )


def nonextweier2_verdict(surface: SurfaceData, a: int, b: int, linearly_normal: bool) -> Verdict:
    """Nonextendability of ``H_S = aC + bf`` with no assumption on the Picard rank.

    The Gaussian rule is tried first, then the scroll rule.
    """
    surface.require_fibration()
    require_very_ample_candidate(surface, a, b)
    verdict = gaussian_verdict(surface, a, b, linearly_normal)
    if verdict.fired:
        return verdict
    return zak_verdict(surface, a, b)


def cor_nonextweier_verdict(surface: SurfaceData) -> Verdict:
    """Picard rank two: l.c.i. extensions force the fibration to extend."""
    surface.require_fibration()
    kodaira = kodaira_dimension(surface)
    if kodaira is Kodaira.NEG_INFINITY:
        raise HypothesisError("(g, n) != (0, 1)", "requires (g, n) ≠ (0, 1)")
    if kodaira is Kodaira.ZERO:
        return Verdict(
            Conclusion.FANO_CONSTRAINT,
            RULE_FIBRATION,
            "any l.c.i. extension is an anticanonically embedded Fano threefold with rho = 1, h^1(O) = h^2(O) = 0",
        )
    return Verdict(Conclusion.NOT_LCI_EXTENDABLE, RULE_FIBRATION, f"kodaira dimension 1, (g, n) = ({surface.g}, {surface.n})")


# --- K3 Weierstrass fibrations -------------------------------------------

# Normal extensions of a K3 section have sectional genus at most 37.
K3_NORMAL_GENUS_MAX = 37
# Genera of smooth prime Fano threefolds with genus >= 13 admitting the
# relevant degenerations, from the Fano classification; anticanonical class
# 2-divisible for the first three.
FANO_GENERA = (13, 17, 21, 28, 33)
FANO_GENERA_TWO_DIVISIBLE = (13, 17, 21)


class K3Mode(enum.Enum):
    NORMAL = "normal"
    LCI = "lci"
    LCI_TERMINAL = "lci-terminal"


def _k3_candidates() -> Iterator[tuple[int, int, int]]:
    # genus a(b - a) + 1 grows with b for fixed a, and its least value at an
    # admissible b grows with a, so both loops can stop at the genus ceiling
    for a in itertools.count(1):
        if not very_ample_necessary(DivisorClass(a, 10**9), K3):
            continue
        admissible = (b for b in itertools.count(a * K3.n) if very_ample_necessary(DivisorClass(a, b), K3))
        first = True
        for b in admissible:
            genus = int(sectional_genus(a, b, K3))
            if genus > K3_NORMAL_GENUS_MAX:
                break
            first = False
            yield a, b, genus
        if first:
            return


def _two_divisible_by_intersections(a: int, b: int) -> bool:
    H = DivisorClass(a, b)
    return intersect(H, FIBER, K3) % 2 == 0 and intersect(H, SECTION, K3) % 2 == 0


def k3_enumerate(mode: K3Mode | str = K3Mode.NORMAL) -> list[tuple[int, int, int]]:
    """Triples ``(a, b, g(S))`` on a K3 not excluded for the given extension type."""
    mode = K3Mode(mode)
    triples = [t for t in _k3_candidates() if t[2] >= min_k3_sectional_genus()]
    if mode is K3Mode.NORMAL:
        return sorted(triples)
    # Pic S = Z[C] + Z[f], so H_S is r-divisible iff r | gcd(a, b); an
    # r-divisible H_S with r >= 2 would force a >= 3r >= 6 via Kobayashi-Ochiai
    triples = [t for t in triples if math.gcd(t[0], t[1]) == 1]
    if mode is K3Mode.LCI:
        return sorted(triples)
    triples = [t for t in triples if t[2] in FANO_GENERA]
    triples = [
        t for t in triples
        if t[2] not in FANO_GENERA_TWO_DIVISIBLE or _two_divisible_by_intersections(t[0], t[1])
    ]
    return sorted(triples)


def k3_verdict(a: int, b: int) -> Verdict:
    """Strongest conclusion for ``H_S = aC + bf`` on a rho = 2 Weierstrass K3."""
    require_very_ample_candidate(K3, a, b)
    triple = (a, b, int(sectional_genus(a, b, K3)))
    if triple not in k3_enumerate(K3Mode.NORMAL):
        return Verdict(Conclusion.NOT_NORMALLY_EXTENDABLE, RULE_K3_NORMAL, f"{triple} not in the normal list")
    if triple not in k3_enumerate(K3Mode.LCI):
        return Verdict(Conclusion.NOT_LCI_EXTENDABLE, RULE_K3_LCI, f"H_S = ({a}, {b}) is {math.gcd(a, b)}-divisible")
    return Verdict(
        Conclusion.NOT_LCI_TERMINAL_EXTENDABLE,
        RULE_K3_TERMINAL,
        f"{triple} is on the l.c.i. list; l.c.i. extensions are not excluded, terminal ones are",
    )


def all_verdicts(
    surface: SurfaceData, a: int, b: int, linearly_normal: bool = False, rho_two: bool = True
) -> list[Verdict]:
    """Every rule that fires for ``H_S = aC + bf``.

    Raises :class:`HypothesisError` when ``(a, b)`` fails the very-ampleness
    necessary test.
    """
    surface.require_fibration()
    require_very_ample_candidate(surface, a, b)
    fired = [v for v in (gaussian_verdict(surface, a, b, linearly_normal), zak_verdict(surface, a, b)) if v.fired]
    if rho_two and kodaira_dimension(surface) is not Kodaira.NEG_INFINITY:
        fired.append(cor_nonextweier_verdict(surface))
        if surface == K3:
            fired.append(k3_verdict(a, b))
    return fired
