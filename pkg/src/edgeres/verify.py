"""Executable checks: exhaustive classification, powers, regularity bounds, field independence."""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

from .betti import (
    _fan_out,
    _resolve_threads,
    hochster_betti,
    index_via_cycles,
    resolution_stats,
)
from .families import FamilySpec, build_family, expected_pd_from_n, recognize_family
from .field import Field, QQ
from .graph import (
    Graph,
    SizeGuardError,
    canonical_form,
    complement,
    detect_pattern,
    enumerate_induced_cycles,
    format_graph,
    graph_to_json,
)
from .monomial import (
    MonomialIdeal,
    betti_of_monomial_ideal,
    colon_ideal,
    edge_ideal,
    ideal_power,
    ideal_sum,
    regularity,
    variable_ideal,
)

MAX_ENUM = 7


@dataclass
class VerificationReport:
    theorem: str
    parameters: dict
    instances: list[dict] = dc_field(default_factory=list)
    wall_time: float = 0.0

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.instances if not r["ok"]]

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, name: str, ok: bool, **data) -> None:
        self.instances.append({"instance": name, "ok": bool(ok), "data": data})

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "parameters": self.parameters,
            "passed": self.passed,
            "instances": self.instances,
            "failures": [r["instance"] for r in self.failures],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)


# -- enumeration -------------------------------------------------------------

def _labeled_classes(n: int) -> dict[bytes, Graph]:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    found: dict[bytes, Graph] = {}
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if bits >> k & 1])
        found.setdefault(canonical_form(g), g)
    return found


def _extended_classes(n: int) -> dict[bytes, Graph]:
    classes = {canonical_form(Graph.empty(0)): Graph.empty(0)}
    for m in range(1, n + 1):
        nxt: dict[bytes, Graph] = {}
        for form in sorted(classes):
            g = classes[form]
            for nbrs in range(1 << (m - 1)):
                h = Graph(m, tuple(a | (nbrs >> i & 1) << (m - 1) for i, a in enumerate(g.adj)) + (nbrs,))
                nxt.setdefault(canonical_form(h), h)
        classes = nxt
    return classes


def enumerate_graphs(n: int, no_isolated: bool = False, method: str = "extend") -> Iterator[Graph]:
    """One graph per isomorphism class on n vertices, ordered by canonical form.

    ``extend`` grows classes one vertex at a time; ``labeled`` sweeps every
    labelled graph and is kept as an independent check.
    """
    if n > MAX_ENUM:
        raise SizeGuardError(f"graph enumeration supports n <= {MAX_ENUM}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if method == "extend":
        classes = _extended_classes(n)
    elif method == "labeled":
        classes = _labeled_classes(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    for form in sorted(classes):
        g = classes[form]
        if no_isolated and g.isolated_vertices():
            continue
        yield g


# -- classification ----------------------------------------------------------

def _classify_one(args) -> dict:
    g, field = args
    stats = resolution_stats(hochster_betti(g, field))
    gbar = complement(g)
    fam = recognize_family(gbar)
    via_cycles = index_via_cycles(g)
    checks = {
        "family_matches": stats.almost_maximal == (fam is not None),
        "eghp": stats.index == via_cycles,
    }
    if stats.almost_maximal:
        t = stats.index
        lengths = sorted({len(c) for c in enumerate_induced_cycles(gbar, 4)})
        checks["cycle_lengths"] = lengths == [t + 3]
        checks["vertex_count"] = g.n in (t + 4, t + 5)
        if fam is not None:
            checks["pd_law"] = stats.pd == expected_pd_from_n(fam)
    return {
        "graph": format_graph(g),
        "stats": stats.to_json(),
        "family": None if fam is None else str(fam),
        "checks": checks,
    }


def verify_classification(n: int, field: Field = QQ, threads: int | None = 1) -> VerificationReport:
    """Almost maximal finite index holds exactly for complements of the family graphs."""
    if n not in (5, 6, 7):
        raise ValueError("classification runs are defined for n in {5, 6, 7}")
    start = time.perf_counter()
    report = VerificationReport("classification", {"n": n, "field": str(field)})
    graphs = list(enumerate_graphs(n, no_isolated=True))
    results = _fan_out(_classify_one, [(g, field) for g in graphs], _resolve_threads(threads))
    for k, res in enumerate(results):
        report.add(f"graph-{k}", all(res["checks"].values()), **res)
    report.parameters["graphs"] = len(graphs)
    report.parameters["almost_maximal"] = sorted(r["family"] or "UNRECOGNIZED" for r in results if r["stats"]["almost_maximal"])
    report.wall_time = time.perf_counter() - start
    return report


# -- powers ------------------------------------------------------------------

def verify_power_linearity(spec: FamilySpec, s_max: int, field: Field = QQ,
                           threads: int | None = 1) -> VerificationReport:
    """Gap case: index(I^s) = 1 for 1 <= s <= s_max.  Gap-free case: reg(I^s) = 2s for 2 <= s <= s_max."""
    if not 1 <= s_max <= 3:
        raise ValueError("s_max must be between 1 and 3")
    start = time.perf_counter()
    g = complement(build_family(spec))
    ideal = edge_ideal(g)
    gap = detect_pattern(g, "gap")
    report = VerificationReport("powers", {"family": str(spec), "s_max": s_max, "field": str(field), "gap": gap})
    for s in range(1, s_max + 1):
        power = ideal if s == 1 else ideal_power(ideal, s)
        if gap:
            stats = resolution_stats(betti_of_monomial_ideal(power, field, threads))
            report.add(f"s={s}", stats.index == 1, index=stats.to_json()["index"], expected_index=1)
        elif s >= 2:
            reg = regularity(power, field, threads)
            report.add(f"s={s}", reg == 2 * s, reg=reg, expected_reg=2 * s)
    report.wall_time = time.perf_counter() - start
    return report


# -- regularity bounds -------------------------------------------------------

def banerjee_check(g: Graph, s: int, field: Field = QQ, threads: int | None = 1) -> dict:
    """reg(I^{s+1}) <= max{reg(I^s), reg(I^{s+1} : m) + 2s over minimal generators m of I^s}."""
    if s < 1:
        raise ValueError("s must be at least 1")
    ideal = edge_ideal(g)
    if ideal.is_zero():
        raise ValueError("graph has no edges")
    power_s = ideal if s == 1 else ideal_power(ideal, s)
    power_next = ideal_power(ideal, s + 1)
    reg_next = regularity(power_next, field, threads)
    reg_s = regularity(power_s, field, threads)
    colons = []
    for m in power_s.gens:
        colons.append((ideal.format_monomial(m), regularity(colon_ideal(power_next, m), field, threads)))
    binding = max(colons, key=lambda c: c[1])
    bound = max(reg_s, binding[1] + 2 * s)
    return {
        "ok": reg_next <= bound,
        "reg_power": reg_next,
        "reg_previous": reg_s,
        "colon_regs": colons,
        "binding": binding[0],
        "binding_reg": binding[1],
        "binding_terms": [m for m, r in colons if r == binding[1]],
        "bound": bound,
    }


def dao_check(ideal: MonomialIdeal, field: Field = QQ, threads: int | None = 1) -> dict:
    """For squarefree I and each variable x in its support:
    reg(I) <= max{reg(I:x) + 1, reg(I + (x))} with equality at one of the two terms."""
    if not ideal.is_squarefree():
        raise ValueError("the equality form needs a squarefree ideal")
    if ideal.is_zero():
        raise ValueError("zero ideal")
    reg_i = regularity(ideal, field, threads)
    rows = []
    ok = True
    support = sorted({k for gen in ideal.gens for k, e in enumerate(gen) if e})
    for k in support:
        x = tuple(1 if p == k else 0 for p in range(ideal.nvars))
        a = regularity(colon_ideal(ideal, x), field, threads) + 1
        b = regularity(ideal_sum(ideal, variable_ideal(ideal.variables, [k])), field, threads)
        good = reg_i <= max(a, b) and reg_i in (a, b)
        ok &= good
        rows.append({"variable": ideal.variables[k], "colon_plus_one": a, "sum": b, "ok": good})
    return {"ok": ok, "reg": reg_i, "variables": rows}


def verify_regularity_bounds(g: Graph, s: int, field: Field = QQ, threads: int | None = 1,
                             dao: bool = True) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport("regularity-bounds", {"graph": graph_to_json(g), "s": s, "field": str(field)})
    ban = banerjee_check(g, s, field, threads)
    report.add("banerjee", ban.pop("ok"), **ban)
    if dao:
        d = dao_check(edge_ideal(g), field, threads)
        report.add("dao", d.pop("ok"), **d)
    report.wall_time = time.perf_counter() - start
    return report


# -- characteristic independence ---------------------------------------------

def verify_char_independence(specs: Sequence[FamilySpec], fields: Sequence[Field],
                             threads: int | None = 1) -> VerificationReport:
    """Full Betti tables of the family edge ideals agree across all given fields."""
    start = time.perf_counter()
    report = VerificationReport("char-independence", {
        "families": [str(s) for s in specs], "fields": [str(f) for f in fields]})
    if len(fields) < 2:
        report.parameters["vacuous"] = True
    else:
        for spec in specs:
            g = complement(build_family(spec))
            tables = [hochster_betti(g, f, threads) for f in fields]
            same = all(t == tables[0] for t in tables[1:])
            report.add(str(spec), same, tables={str(f): t.to_tsv() for f, t in zip(fields, tables)})
    report.wall_time = time.perf_counter() - start
    return report

