"""Machine checks of the structural results about underlying geographs.

Each ``verify_*`` function returns one :class:`CheckResult`; :func:`audit`
runs the whole suite on a configuration and collects them into an
:class:`AuditReport`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .chains import chain_decomposition, chain_property_violations
from .engine import (
    ComponentPartition, Geograph, OrientedGeograph, components, halves, halving_edges,
    halving_edges_bruteforce, induced_split, left_degree, orient_geograph, right_degree,
)
from .errors import InvariantViolation, NotAComponentUnion
from .exact import DirectedLine, PointConfig, g_balance

PASS, FAIL, REPORT = "pass", "fail", "report-only"

CHECKS = (
    "halving-definition",
    "minimum-count",
    "odd-degree",
    "leftright",
    "chain-properties",
    "balance-theorem",
    "componentmix",
    "subtraction",
    "components-are-geographs",
    "component-halves",
    "leaf-count",
    "cross-likeness",
)

EXHAUSTIVE_COMPONENTS = 8
SAMPLED_UNIONS = 256
UNION_SEED = 0


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    witness: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail, "witness": self.witness}


@dataclass
class AuditReport:
    n: int
    edge_count: int
    component_sizes: list[int]
    direction: str
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "halving_lines": self.edge_count,
            "component_sizes": self.component_sizes,
            "direction": ["1", self.direction],
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def format_text(self) -> str:
        lines = [
            f"points: {self.n}",
            f"halving lines: {self.edge_count}",
            f"components: {len(self.component_sizes)} (sizes {', '.join(map(str, self.component_sizes))})",
            f"direction: (1, {self.direction})",
        ]
        for c in self.checks:
            tag = {PASS: "PASS", FAIL: "FAIL", REPORT: "INFO"}[c.status]
            lines.append(f"{tag:<5}{c.name:<26}{c.detail}")
            if c.status == FAIL and c.witness:
                lines.append(f"     witness: {c.witness[:5]}")
        lines.append("result: " + ("all checks pass" if self.passed else "FAILED"))
        return "\n".join(lines)


def _result(name, witness, detail_ok, detail_bad=None) -> CheckResult:
    if witness:
        return CheckResult(name, FAIL, detail_bad or f"{len(witness)} violation(s)", witness)
    return CheckResult(name, PASS, detail_ok)


def _as_union(g: Geograph, selection: Iterable[int], part: ComponentPartition | None = None) -> frozenset:
    sel = frozenset(selection)
    part = part or components(g)
    for cls in part:
        inside = sum(v in sel for v in cls)
        if 0 < inside < len(cls):
            raise NotAComponentUnion(f"selection splits component {list(cls)}")
    if any(not 0 <= v < g.n for v in sel):
        raise NotAComponentUnion("selection names vertices outside the geograph")
    return sel


def _line(g: Geograph, i: int, j: int) -> DirectedLine:
    return DirectedLine(g.points[i], g.points[j])


def verify_balance_theorem(g: Geograph, selection, part=None) -> CheckResult:
    sel = _as_union(g, selection, part)
    bad = []
    for i, j in g.edges:
        if i in sel and j in sel:
            rest = (g.points[v] for v in sel if v != i and v != j)
            b = g_balance(rest, _line(g, i, j))
            if b:
                bad.append({"edge": [i, j], "balance": b})
    return _result("balance-theorem", bad, "every inner halving line has zero balance on the selection")


def verify_componentmix(g: Geograph, a, b=None, part=None) -> CheckResult:
    sa = _as_union(g, a, part)
    sb = _as_union(g, set(range(g.n)) - sa if b is None else b, part)
    if sa & sb or len(sa | sb) != g.n:
        raise NotAComponentUnion("a and b must partition the vertices")
    bad = []
    for mine, other in ((sa, sb), (sb, sa)):
        for i, j in g.edges:
            if i in mine and j in mine:
                bal = g_balance((g.points[v] for v in other), _line(g, i, j))
                if bal:
                    bad.append({"edge": [i, j], "balance": bal})
    return _result("componentmix", bad, "halving lines of each side halve the other")


def verify_leftright(og: OrientedGeograph) -> CheckResult:
    left, _ = halves(og)
    bad = []
    for v in range(og.n):
        ld, rd = left_degree(og, v), right_degree(og, v)
        want = (ld + 1 == rd) if v in left else (rd + 1 == ld)
        if not want:
            bad.append({"vertex": v, "left_degree": ld, "right_degree": rd, "half": "left" if v in left else "right"})
    return _result("leftright", bad, "outer degree exceeds inner degree by one at every vertex")


def verify_subtraction(g: Geograph, selection, part=None) -> CheckResult:
    sel = sorted(_as_union(g, selection, part))
    if len(sel) % 2:
        return CheckResult("subtraction", FAIL, "odd component union", [{"selection": sel}])
    if not sel:
        return CheckResult("subtraction", PASS, "empty selection")
    index = {v: k for k, v in enumerate(sel)}
    alone = halving_edges(PointConfig(g.points[v] for v in sel))
    recomputed = {(sel[i], sel[j]) for i, j in alone.edges}
    restricted = {(i, j) for i, j in g.edges if i in index and j in index}
    if recomputed != restricted:
        return CheckResult("subtraction", FAIL, "restricted and recomputed edges differ", [{
            "selection": sel,
            "missing": sorted(map(list, restricted - recomputed)),
            "extra": sorted(map(list, recomputed - restricted)),
        }])
    return CheckResult("subtraction", PASS, "recomputed edges equal restricted edges")


def verify_component_halves(og: OrientedGeograph, part=None) -> CheckResult:
    left, right = halves(og)
    bad = []
    for cls in part or components(og.geograph):
        if len(cls) % 2:
            bad.append({"component": list(cls), "reason": "odd size"})
            continue
        ordered = sorted(cls, key=og.rank.__getitem__)
        h = len(cls) // 2
        if not (set(ordered[:h]) <= left and set(ordered[h:]) <= right):
            bad.append({"component": list(cls), "order": ordered})
    return _result("component-halves", bad, "each component's halves sit in the global halves")


def verify_chain_properties(og: OrientedGeograph) -> CheckResult:
    try:
        dec = chain_decomposition(og)
    except InvariantViolation as exc:
        return CheckResult("chain-properties", FAIL, "chain decomposition failed", [str(exc)])
    bad = chain_property_violations(og, dec.chains)
    return _result("chain-properties", bad, f"{len(dec)} chains satisfy all four properties")


def component_unions(part: ComponentPartition) -> list[frozenset]:
    """All non-empty unions when there are few components, else a seeded sample."""
    k = len(part)
    if k <= EXHAUSTIVE_COMPONENTS:
        masks = range(1, 1 << k)
    else:
        rng = random.Random(UNION_SEED)
        chosen: set[int] = set()
        while len(chosen) < SAMPLED_UNIONS:
            m = rng.getrandbits(k)
            if m:
                chosen.add(m)
        masks = sorted(chosen)
    return [frozenset(v for b, cls in enumerate(part) if m >> b & 1 for v in cls) for m in masks]


def _over_unions(name, fn, unions) -> CheckResult:
    bad = []
    for sel in unions:
        r = fn(sel)
        if r.status == FAIL:
            bad.append({"selection": sorted(sel), "witness": r.witness})
    return _result(name, bad, f"holds for {len(unions)} component union(s)")


def _leaf_report(g: Geograph, part: ComponentPartition) -> CheckResult:
    deg = g.degrees()
    counts = [{"component": list(cls), "leaves": sum(deg[v] == 1 for v in cls)} for cls in part]
    few = [c for c in counts if c["leaves"] < 3]
    detail = "leaves per component: " + ", ".join(str(c["leaves"]) for c in counts)
    if few:
        detail += f" ({len(few)} component(s) with fewer than 3)"
    return CheckResult("leaf-count", REPORT, detail, counts)


def _cross_likeness(g: Geograph, part: ComponentPartition) -> CheckResult:
    if len(part) < 2:
        return CheckResult("cross-likeness", REPORT, "single component", [])
    per = []
    for cls in part:
        inside = set(cls)
        others = [v for v in range(g.n) if v not in inside]
        splits = {
            frozenset(induced_split(_line(g, i, j), g.points, others))
            for i, j in g.edges if i in inside and j in inside
        }
        per.append({"component": list(cls), "distinct_splits": len(splits)})
    crosslike = all(p["distinct_splits"] <= 1 for p in per)
    detail = "every component splits the rest one way" if crosslike else "some component splits the rest in several ways"
    return CheckResult("cross-likeness", REPORT, detail, per)


def audit(c: PointConfig, recursive: bool = True) -> AuditReport:
    g = halving_edges(c)
    part = components(g)
    og = orient_geograph(g)
    checks = []

    oracle = halving_edges_bruteforce(c)
    checks.append(_result(
        "halving-definition",
        [] if oracle.edges == g.edges else [{"kernel": list(map(list, g.edges)), "oracle": list(map(list, oracle.edges))}],
        f"{len(g.edges)} halving lines, matching the rational brute force",
    ))
    checks.append(_result(
        "minimum-count",
        [] if len(g.edges) >= c.n // 2 else [{"edges": len(g.edges), "minimum": c.n // 2}],
        f"{len(g.edges)} >= {c.n // 2}",
    ))
    deg = g.degrees()
    checks.append(_result(
        "odd-degree",
        [{"vertex": v, "degree": d} for v, d in enumerate(deg) if d % 2 == 0],
        "every vertex has odd degree",
    ))
    checks.append(verify_leftright(og))
    checks.append(verify_chain_properties(og))

    unions = component_unions(part)
    checks.append(_over_unions("balance-theorem", lambda s: verify_balance_theorem(g, s, part), unions))
    checks.append(_over_unions("componentmix", lambda s: verify_componentmix(g, s, part=part), unions))
    checks.append(_over_unions("subtraction", lambda s: verify_subtraction(g, s, part), unions))

    if len(part) == 1 or not recursive:
        checks.append(CheckResult("components-are-geographs", PASS,
                                  "single component" if len(part) == 1 else "not run (non-recursive)"))
    else:
        bad = []
        for cls in part:
            if len(cls) % 2:
                bad.append({"component": list(cls), "reason": "odd size"})
                continue
            sub = audit(PointConfig(g.points[v] for v in cls), recursive=False)
            if not sub.passed:
                bad.append({"component": list(cls), "failed": [x.name for x in sub.checks if x.status == FAIL]})
        checks.append(_result("components-are-geographs", bad, f"all {len(part)} components pass the audit alone"))

    checks.append(verify_component_halves(og, part))
    checks.append(_leaf_report(g, part))
    checks.append(_cross_likeness(g, part))
    assert tuple(x.name for x in checks) == CHECKS
    return AuditReport(c.n, len(g.edges), [len(cls) for cls in part], str(og.direction.t), checks)
