"""Report documents shared by the CLI and the test suite.

Every builder returns a plain JSON-compatible dict of the form::

    {"schema_version": ..., "command": ..., "inputs": {...},
     "policy": ..., "result": {...}}

and ``render_table`` flattens the same dict, so the two output formats
carry identical data.
"""
from __future__ import annotations

import json
from importlib import resources

from .cohomology import (
    GenericityPolicy,
    GonalityStatus,
    base_point_free,
    general_member_gonality,
    h1_vanishes,
    pushforward_summands,
    surface_h,
    very_ample_necessary,
    very_ample_sufficient,
)
from .extendability import (
    K3Mode,
    all_verdicts,
    allowed_factorial_degrees,
    del_pezzo_line_count,
    example_fixtures,
    fibra_pairs,
    k3_enumerate,
    prop_numerical_check,
)
from .invariants import compute_invariants, min_k3_sectional_genus, picard_rank_bounds
from .lattice import DivisorClass, SurfaceData, genus_of_class, riemann_roch_chi
from .scroll import verify_scroll_claims

SCHEMA_VERSION = "1.0"


def load_schema() -> dict:
    text = resources.files("weierext").joinpath("schema/report.json").read_text(encoding="utf-8")
    return json.loads(text)


def _envelope(command: str, inputs: dict, result: dict, policy: GenericityPolicy | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "policy": policy.value if policy else None,
        "result": result,
    }


def rejection_report(command: str, inputs: dict, hypothesis: str, message: str) -> dict:
    return _envelope(command, inputs, {"rejection": {"hypothesis": hypothesis, "message": message}})


def invariants_report(g: int, n: int) -> dict:
    surface = SurfaceData(g, n)
    inv = compute_invariants(surface)
    lo, hi = picard_rank_bounds(surface)
    return _envelope(
        "invariants",
        {"g": g, "n": n},
        {
            "invariants": {
                "q": inv.q,
                "p_g": inv.p_g,
                "h11": inv.h11,
                "chi_O": inv.chi_O,
                "kodaira": str(inv.kodaira),
                "picard_rank_min": lo,
                "picard_rank_max": hi,
            }
        },
    )


def cohomology_report(g: int, n: int, alpha: int, beta: int, policy: GenericityPolicy) -> dict:
    surface = SurfaceData(g, n).require_fibration()
    d = DivisorClass(alpha, beta)
    genus = genus_of_class(d, surface)
    result = {
        "h": [surface_h(d, surface, q, policy).to_dict() for q in range(3)],
        "chi": riemann_roch_chi(d, surface),
        "arithmetic_genus": str(genus),
        "pushforward_summands": pushforward_summands(d, surface) if alpha >= 0 else None,
        "criteria": {
            "h1_vanishes": h1_vanishes(d, surface),
            "base_point_free": base_point_free(d, surface),
            "very_ample_sufficient": very_ample_sufficient(d, surface),
            "very_ample_necessary": very_ample_necessary(d, surface),
            "general_member_gonality": general_member_gonality(d, surface).value,
        },
    }
    return _envelope("cohomology", {"g": g, "n": n, "alpha": alpha, "beta": beta}, result, policy)


def numerical_report(
    g: int, n: int, a: int, b: int, alpha: int, beta: int, gonality: GonalityStatus | None, linearly_normal: bool
) -> dict:
    surface = SurfaceData(g, n)
    if gonality is None:
        gonality = general_member_gonality(DivisorClass(alpha, beta), surface)
    verdict = prop_numerical_check(surface, a, b, alpha, beta, gonality, linearly_normal)
    inputs = {
        "g": g, "n": n, "a": a, "b": b, "alpha": alpha, "beta": beta,
        "gonality": gonality.value, "linearly_normal": linearly_normal,
    }
    return _envelope("numerical", inputs, {"verdicts": [verdict.to_dict()]})


def verdict_report(g: int, n: int, a: int, b: int, linearly_normal: bool) -> dict:
    surface = SurfaceData(g, n)
    verdicts = all_verdicts(surface, a, b, linearly_normal=linearly_normal)
    result = {"verdicts": [v.to_dict() for v in verdicts]}
    if (g, n) == (0, 2):
        triple = [a, b, a * (b - a) + 1]
        result["k3_lists"] = {m.value: triple in [list(t) for t in k3_enumerate(m)] for m in K3Mode}
    return _envelope("verdict", {"g": g, "n": n, "a": a, "b": b, "linearly_normal": linearly_normal}, result)


def _triples(mode: K3Mode) -> list[list[int]]:
    return [list(t) for t in k3_enumerate(mode)]


def _pairs(locally_factorial: bool) -> list[list[int]]:
    return [list(p) for p in sorted(fibra_pairs(locally_factorial))]


def _line_counts() -> list[dict]:
    allowed = allowed_factorial_degrees()
    return [
        {"d": d, "lines": del_pezzo_line_count(d), "allowed_factorial": d in allowed}
        for d in range(3, 9)
    ]


def enumerate_k3_report(mode: K3Mode) -> dict:
    return _envelope("enumerate-k3", {"mode": mode.value}, {"triples": _triples(mode)})


def fibra_pairs_report(locally_factorial: bool) -> dict:
    return _envelope("fibra-pairs", {"locally_factorial": locally_factorial}, {"pairs": _pairs(locally_factorial)})


def line_counts_report() -> dict:
    return _envelope("line-counts", {}, {"line_counts": _line_counts()})


def scroll_check_report(g: int, n: int, a: int, b: int, policy: GenericityPolicy) -> dict:
    claims = verify_scroll_claims(SurfaceData(g, n), a, b, policy)
    return _envelope("scroll-check", {"g": g, "n": n, "a": a, "b": b}, {"claims": claims.to_dict()}, policy)


def full_report() -> dict:
    return _envelope(
        "report",
        {},
        {
            "pairs": _pairs(False),
            "pairs_locally_factorial": _pairs(True),
            "line_counts": _line_counts(),
            "triples_normal": _triples(K3Mode.NORMAL),
            "triples_lci": _triples(K3Mode.LCI),
            "triples_lci_terminal": _triples(K3Mode.LCI_TERMINAL),
            "min_k3_sectional_genus": min_k3_sectional_genus(),
            "fixtures": [{"name": name, "a": a, "c_dot_f": c} for name, a, c in example_fixtures()],
        },
    )


def render_markdown(report: dict) -> str:
    """Self-contained markdown document for :func:`full_report`."""
    result = report["result"]

    def block(value) -> str:
        return "```json\n" + json.dumps(value, indent=2) + "\n```\n"

    lines = [
        "# Weierstrass fibration extendability tables",
        "",
        f"schema version {report['schema_version']}",
        "",
        "## Admissible (a, C.f) pairs",
        "",
        block(result["pairs"]),
        "## Admissible pairs, locally factorial extensions",
        "",
        block(result["pairs_locally_factorial"]),
        "## Lines on Del Pezzo surfaces of degree d",
        "",
        "| d | lines | d divides lines |",
        "|---|-------|-----------------|",
    ]
    lines += [f"| {r['d']} | {r['lines']} | {'yes' if r['allowed_factorial'] else 'no'} |" for r in result["line_counts"]]
    lines += [
        "",
        block(result["line_counts"]),
        f"## K3 triples (a, b, g(S)) not excluded for normal extensions ({len(result['triples_normal'])})",
        "",
        block(result["triples_normal"]),
        f"## K3 triples not excluded for l.c.i. extensions ({len(result['triples_lci'])})",
        "",
        block(result["triples_lci"]),
        f"## K3 triples not excluded for l.c.i. terminal extensions ({len(result['triples_lci_terminal'])})",
        "",
        block(result["triples_lci_terminal"]),
        "## Minimal sectional genus of a Weierstrass K3 with rho = 2",
        "",
        block(result["min_k3_sectional_genus"]),
        "## Example fixtures",
        "",
        block(result["fixtures"]),
        "## Full report",
        "",
        block(report),
    ]
    return "\n".join(lines)


def flatten(value, prefix: str = "") -> list[tuple[str, str]]:
    """``(path, scalar)`` rows for a JSON value, in document order."""
    if isinstance(value, dict):
        if not value:
            return [(prefix, "{}")]
        rows = []
        for key, item in value.items():
            rows += flatten(item, f"{prefix}.{key}" if prefix else str(key))
        return rows
    if isinstance(value, list):
        if not value:
            return [(prefix, "[]")]
        rows = []
        for i, item in enumerate(value):
            rows += flatten(item, f"{prefix}[{i}]")
        return rows
    return [(prefix, json.dumps(value, ensure_ascii=False))]


def render_table(report: dict) -> str:
    rows = flatten(report)
    width = max(len(path) for path, _ in rows)
    return "\n".join(f"{path.ljust(width)}  {text}" for path, text in rows) + "\n"


def parse_table(text: str) -> list[tuple[str, str]]:
    rows = []
    for line in text.splitlines():
        path, _, value = line.partition("  ")
        rows.append((path.rstrip(), value.strip()))
    return rows
