"""Corpus-level verification: named checks, machine-readable reports.

Each check pits two independently computed routes against each other on
one instance (closed formula vs. brute-force solver, base graph vs.
derived graph) and records Holds / Violated / Skipped with the numbers on
both sides.  Skips happen only for class mismatches and exhausted search
budgets.  Reports serialize deterministically: records sorted by
(instance, check), stable key order, timings omitted unless requested.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

from .errors import (
    EnumerationOverflowError,
    NotCactusError,
    SearchBudgetExceededError,
)
from .graph import Graph
from .solvers import (
    DEFAULT_BUDGET,
    DEFAULT_PHI_CAP,
    DIM,
    EDIM,
    MDIM,
    forced_vertices_mdim,
    is_mixed_resolving,
    phi_of_graph,
    solve_dimension,
)
from .structural import cactus_decompose, gn_family_facts, is_tree, leaf_count
from .transforms import check_distance_identities, middle, subdivision, total
from . import families

TOOL_VERSION = "0.1.0"

HOLDS = "holds"
VIOLATED = "violated"
SKIPPED = "skipped"

THEOREM_IDS = (
    "C3.2",
    "C3.5-cactus",
    "E1-E6-identities",
    "L2.1-forced",
    "P3.4",
    "P4.5",
    "T2.2-formula",
    "T3.1i",
    "T3.1ii",
    "T4.1",
    "T4.2",
    "T4.3",
)

EXPLORE_TARGETS = ("gap_gt_2", "mdim_eq_mdims")


@dataclass(frozen=True)
class Instance:
    """A corpus member: the graph plus its reproducible origin."""

    id: str
    graph: Graph
    family: str | None = None
    param_n: int | None = None


@dataclass
class TheoremCheck:
    theorem: str
    instance: str
    status: str
    values: dict
    reason: str | None = None
    n: int = 0
    edges: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "instance": self.instance,
            "status": self.status,
            "values": self.values,
            "n": self.n,
            "edges": self.edges,
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if timings:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


@dataclass
class Report:
    source: str
    records: list[TheoremCheck]
    version: str = TOOL_VERSION
    extra: dict | None = None

    @property
    def summary(self) -> dict:
        counts = {HOLDS: 0, VIOLATED: 0, SKIPPED: 0}
        for r in self.records:
            counts[r.status] = counts.get(r.status, 0) + 1
        return counts

    def to_json(self, timings: bool = False) -> str:
        payload = {
            "version": self.version,
            "source": self.source,
            "summary": self.summary,
            "records": [r.to_dict(timings) for r in self.records],
        }
        if self.extra is not None:
            payload["findings"] = self.extra
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["instance", "theorem", "status", "reason", "values", "n", "edges"])
        for r in self.records:
            values = ";".join(f"{k}={r.values[k]}" for k in sorted(r.values))
            edges = " ".join(f"{u}-{v}" for u, v in r.edges)
            writer.writerow([r.instance, r.theorem, r.status, r.reason or "", values, r.n, edges])
        return buf.getvalue()

    def exit_code(self, strict: bool = False) -> int:
        if any(r.status == VIOLATED for r in self.records):
            return 1
        if strict and any(
            r.status == SKIPPED and (r.reason or "").startswith("budget") for r in self.records
        ):
            return 1
        return 0


class _Skip(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class _Lab:
    """Per-instance cache so checks share expensive solver results."""

    def __init__(self, g: Graph, budget: int, phi_cap: int):
        self.g = g
        self.budget = budget
        self.phi_cap = phi_cap
        self._cache: dict[str, object] = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def dim(self) -> int:
        return self._memo("dim", lambda: solve_dimension(self.g, DIM, self.budget).value)

    def edim(self) -> int:
        return self._memo("edim", lambda: solve_dimension(self.g, EDIM, self.budget).value)

    def mdim_cert(self):
        return self._memo("mdim_cert", lambda: solve_dimension(self.g, MDIM, self.budget))

    def mdim(self) -> int:
        return self.mdim_cert().value

    def sgraph(self):
        return self._memo("sgraph", lambda: subdivision(self.g))

    def mdim_s(self) -> int:
        return self._memo(
            "mdim_s", lambda: solve_dimension(self.sgraph().graph, MDIM, self.budget).value
        )

    def dim_middle(self) -> int:
        return self._memo(
            "dim_middle", lambda: solve_dimension(middle(self.g).graph, DIM, self.budget).value
        )

    def tgraph(self):
        return self._memo("tgraph", lambda: total(self.g))

    def mdim_total(self) -> int:
        return self._memo(
            "mdim_total", lambda: solve_dimension(self.tgraph().graph, MDIM, self.budget).value
        )

    def dim_total(self) -> int:
        return self._memo(
            "dim_total", lambda: solve_dimension(self.tgraph().graph, DIM, self.budget).value
        )

    def phi(self):
        return self._memo("phi", lambda: phi_of_graph(self.g, cap=self.phi_cap, budget=self.budget))

    def cactus(self):
        return self._memo("cactus", lambda: cactus_decompose(self.g))


def _require_tree(lab: _Lab, min_n: int = 2) -> None:
    if not is_tree(lab.g):
        raise _Skip("class: not a tree")
    if lab.g.n < min_n:
        raise _Skip(
            "class: single-edge tree; the leaf-count formulas for middle/total "
            "graphs need a tree on >= 3 vertices"
        )


def _require_cactus(lab: _Lab):
    try:
        return lab.cactus()
    except NotCactusError as exc:
        raise _Skip(f"class: not a cactus ({exc})") from exc


def _check_identities(lab: _Lab, inst: Instance):
    report = check_distance_identities(lab.g)
    values = {c.identity: c.pairs_checked for c in report.checks}
    if report.ok:
        return HOLDS, values
    bad = report.failed()[0]
    values["counterexample"] = f"{bad.identity}:{bad.counterexample}"
    return VIOLATED, values


def _check_forced(lab: _Lab, inst: Instance):
    cert = lab.mdim_cert()
    forced = forced_vertices_mdim(lab.g)
    witness = set(cert.vertices)
    values = {"forced": list(forced), "mdim": cert.value, "witness": list(cert.vertices)}
    if not set(forced) <= witness:
        return VIOLATED, values
    for v in forced:
        trimmed = sorted(witness - {v})
        if trimmed and is_mixed_resolving(lab.g, trimmed):
            values["removable_forced_vertex"] = v
            return VIOLATED, values
    return HOLDS, values


def _check_cactus_formula(lab: _Lab, inst: Instance):
    report = _require_cactus(lab)
    brute = lab.mdim()
    values = {"formula": report.mdim_formula, "brute": brute,
              "n1": report.n1, "epsilon": report.epsilon, "cycles": len(report.cycles)}
    return (HOLDS if report.mdim_formula == brute else VIOLATED), values


def _check_subdivision_upper(lab: _Lab, inst: Instance):
    values = {"mdim_s": lab.mdim_s(), "mdim": lab.mdim()}
    return (HOLDS if values["mdim_s"] <= values["mdim"] else VIOLATED), values


def _check_phi_lower(lab: _Lab, inst: Instance):
    phi = lab.phi()
    values = {"phi": phi.phi_value, "dim": lab.dim(), "edim": lab.edim(),
              "bases": phi.bases_enumerated}
    ok = phi.phi_value >= max(values["dim"], values["edim"])
    return (HOLDS if ok else VIOLATED), values


def _check_chain(lab: _Lab, inst: Instance):
    phi = lab.phi()
    values = {"dim": lab.dim(), "edim": lab.edim(), "phi": phi.phi_value,
              "mdim_s": lab.mdim_s(), "mdim": lab.mdim()}
    # halves compared in integer form: a/2 <= b  <=>  a <= 2b
    ok = (
        max(values["dim"], values["edim"]) <= values["phi"]
        and values["phi"] <= 2 * values["mdim_s"]
        and values["mdim_s"] <= values["mdim"]
    )
    return (HOLDS if ok else VIOLATED), values


def _check_gn_gap(lab: _Lab, inst: Instance):
    if inst.family != families.GN or inst.param_n is None:
        raise _Skip("class: not a generated two-hub family instance")
    if inst.param_n < 5:
        raise _Skip("class: two-hub gap statement needs n >= 5")
    facts = gn_family_facts(inst.param_n)
    forced = forced_vertices_mdim(lab.g)
    mdim = lab.mdim()
    mdim_s = lab.mdim_s()
    sn_ok = is_mixed_resolving(lab.sgraph().graph, facts.sn_vertices)
    values = {
        "formula": facts.mdim_value,
        "mdim": mdim,
        "mdim_s": mdim_s,
        "gap": mdim - mdim_s,
        "forced_count": len(forced),
        "sn_verifies": sn_ok,
    }
    ok = (
        mdim == facts.mdim_value
        and len(forced) == lab.g.n
        and sn_ok
        and mdim - mdim_s >= facts.gap_lower_bound
    )
    return (HOLDS if ok else VIOLATED), values


def _check_cactus_equality(lab: _Lab, inst: Instance):
    _require_cactus(lab)
    values = {"mdim": lab.mdim(), "mdim_s": lab.mdim_s()}
    return (HOLDS if values["mdim"] == values["mdim_s"] else VIOLATED), values


def _check_middle_bound(lab: _Lab, inst: Instance):
    values = {"dim_middle": lab.dim_middle(), "mdim": lab.mdim()}
    return (HOLDS if values["dim_middle"] <= values["mdim"] else VIOLATED), values


def _check_tree_middle(lab: _Lab, inst: Instance):
    _require_tree(lab, min_n=3)
    n1 = leaf_count(lab.g)
    values = {"n1": n1, "mdim": lab.mdim(), "dim_middle": lab.dim_middle()}
    ok = values["mdim"] == n1 and values["dim_middle"] == n1
    return (HOLDS if ok else VIOLATED), values


def _check_tree_total(lab: _Lab, inst: Instance):
    _require_tree(lab, min_n=3)
    n1 = leaf_count(lab.g)
    values = {"n1": n1, "mdim_total": lab.mdim_total(), "expected": 2 * n1}
    return (HOLDS if values["mdim_total"] == 2 * n1 else VIOLATED), values


def _check_tree_total_dim_bounds(lab: _Lab, inst: Instance):
    if not is_tree(lab.g):
        raise _Skip("class: not a tree")
    values = {"dim": lab.dim(), "dim_total": lab.dim_total(), "n1": leaf_count(lab.g)}
    ok = values["dim"] <= values["dim_total"] <= values["n1"]
    return (HOLDS if ok else VIOLATED), values


_CHECKS = {
    "C3.2": _check_chain,
    "C3.5-cactus": _check_cactus_equality,
    "E1-E6-identities": _check_identities,
    "L2.1-forced": _check_forced,
    "P3.4": _check_gn_gap,
    "P4.5": _check_tree_total_dim_bounds,
    "T2.2-formula": _check_cactus_formula,
    "T3.1i": _check_subdivision_upper,
    "T3.1ii": _check_phi_lower,
    "T4.1": _check_middle_bound,
    "T4.2": _check_tree_middle,
    "T4.3": _check_tree_total,
}


def run_checks(
    instances: list[Instance],
    theorems: list[str] | None = None,
    budget: int = DEFAULT_BUDGET,
    phi_cap: int = DEFAULT_PHI_CAP,
    source: str = "corpus",
) -> Report:
    """One TheoremCheck per (instance, check id), sorted and deterministic."""
    ids = list(THEOREM_IDS) if theorems is None else list(theorems)
    for t in ids:
        if t not in _CHECKS:
            raise ValueError(f"unknown theorem id {t!r}; known: {', '.join(THEOREM_IDS)}")
    records = []
    for inst in instances:
        lab = _Lab(inst.graph, budget, phi_cap)
        for theorem in ids:
            start = time.perf_counter()
            try:
                status, values = _CHECKS[theorem](lab, inst)
                reason = None
            except _Skip as skip:
                status, values, reason = SKIPPED, {}, skip.reason
            except SearchBudgetExceededError as exc:
                status, values, reason = SKIPPED, {}, f"budget: {exc}"
            except EnumerationOverflowError as exc:
                status, values, reason = SKIPPED, {}, f"budget: {exc}"
            records.append(
                TheoremCheck(
                    theorem=theorem,
                    instance=inst.id,
                    status=status,
                    values=values,
                    reason=reason,
                    n=inst.graph.n,
                    edges=[list(e) for e in inst.graph.edges],
                    elapsed_ms=(time.perf_counter() - start) * 1000.0,
                )
            )
    records.sort(key=lambda r: (r.instance, r.theorem))
    return Report(source=source, records=records)


def explore(
    instances: list[Instance],
    target: str,
    budget: int = DEFAULT_BUDGET,
    source: str = "corpus",
) -> Report:
    """Scan a corpus for subdivision-gap behavior; reports findings on the
    scanned instances only and asserts nothing beyond them."""
    if target not in EXPLORE_TARGETS:
        raise ValueError(f"unknown explore target {target!r}; known: {', '.join(EXPLORE_TARGETS)}")
    records = []
    for inst in instances:
        lab = _Lab(inst.graph, budget, DEFAULT_PHI_CAP)
        start = time.perf_counter()
        try:
            mdim = lab.mdim()
            mdim_s = lab.mdim_s()
            gap = mdim - mdim_s
            values = {"mdim": mdim, "mdim_s": mdim_s, "gap": gap}
            if target == "gap_gt_2":
                values["gap_gt_2"] = gap > 2
            else:
                values["equal"] = gap == 0
            status, reason = HOLDS, None
        except SearchBudgetExceededError as exc:
            status, values, reason = SKIPPED, {}, f"budget: {exc}"
        records.append(
            TheoremCheck(
                theorem=f"explore:{target}",
                instance=inst.id,
                status=status,
                values=values,
                reason=reason,
                n=inst.graph.n,
                edges=[list(e) for e in inst.graph.edges],
                elapsed_ms=(time.perf_counter() - start) * 1000.0,
            )
        )
    records.sort(key=lambda r: (r.instance, r.theorem))
    report = Report(source=source, records=records)
    report.extra = explore_summary(report, target)
    return report


def explore_summary(report: Report, target: str) -> dict:
    """Corpus-scoped summary: maxima and matches found, never a general claim."""
    scanned = [r for r in report.records if r.status == HOLDS]
    gaps = {r.instance: r.values["gap"] for r in scanned}
    out = {
        "target": target,
        "instances_scanned": len(scanned),
        "instances_skipped": len(report.records) - len(scanned),
        "max_gap_found": max(gaps.values()) if gaps else None,
    }
    if target == "gap_gt_2":
        out["gap_gt_2_instances_found"] = sorted(i for i, gap in gaps.items() if gap > 2)
    else:
        out["equality_instances_found"] = sorted(i for i, gap in gaps.items() if gap == 0)
    out["scope"] = "scanned corpus only"
    return out


def default_corpus() -> list[Instance]:
    """Mixed small corpus: every exhaustive tree up to 7 vertices, cycles,
    complete graphs, two-hub instances, and seeded random trees and cacti."""
    instances = []
    for n in range(2, 8):
        for i, t in enumerate(families.enumerate_small_trees(n)):
            instances.append(Instance(id=f"trees:n={n},i={i:03d}", graph=t, family="trees", param_n=n))
    for n in range(3, 9):
        instances.append(Instance(id=f"cycle:n={n}", graph=families.cycle_graph(n), family=families.CYCLE, param_n=n))
    for n in range(3, 6):
        instances.append(Instance(id=f"complete:n={n}", graph=families.complete_graph(n), family=families.COMPLETE, param_n=n))
    for n in (2, 5, 6):
        instances.append(Instance(id=f"gn:n={n}", graph=families.gn_graph(n)[0], family=families.GN, param_n=n))
    for seed in range(1, 6):
        g = families.random_tree(9, seed)
        instances.append(Instance(id=f"random_tree:n=9,seed={seed:03d}", graph=g, family=families.RANDOM_TREE, param_n=9))
    for seed in range(1, 7):
        n = 10 + (seed % 3)
        cycles = 1 + (seed % 3)
        g = families.random_cactus(n, cycles, seed)
        instances.append(
            Instance(id=f"random_cactus:n={n},cycles={cycles},seed={seed:03d}", graph=g,
                     family=families.RANDOM_CACTUS, param_n=n)
        )
    return instances
