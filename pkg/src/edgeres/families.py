"""The seven complement graphs whose edge ideals have almost maximal finite index.

``build_family`` returns the complement graph; the ideal of interest is the edge
ideal of its complement.  ``C_t`` below is the cycle 1-2-...-(t+3)-1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable, IntOrInf
from .graph import MAX_CANON, Graph, SizeGuardError, canonical_form, complement

KINDS = ("A1", "A2", "A3", "B", "C", "D1", "D2")
PARAMETRIC = ("A1", "A2", "A3", "B")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    t: int = 1

    def __post_init__(self):
        kind = self.kind.upper()
        if kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")
        object.__setattr__(self, "kind", kind)
        if kind in PARAMETRIC and self.t < 1:
            raise ValueError(f"family {kind} needs t >= 1, got {self.t}")
        if kind not in PARAMETRIC and self.t != 1:
            raise ValueError(f"family {kind} has no parameter (t = 1)")

    @property
    def n(self) -> int:
        if self.kind in ("A1", "A2", "A3"):
            return self.t + 4
        if self.kind == "B":
            return self.t + 5
        return 5 if self.kind == "C" else 6

    def __str__(self) -> str:
        return self.kind if self.kind not in PARAMETRIC else f"{self.kind}(t={self.t})"


def _cycle_edges(r: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, r)] + [(1, r)]


def build_family(spec: FamilySpec) -> Graph:
    t = spec.t
    if spec.kind in ("A1", "A2", "A3"):
        hub = t + 4
        reach = int(spec.kind[1])
        return Graph.from_edges(hub, _cycle_edges(t + 3) + [(i, hub) for i in range(1, reach + 1)])
    if spec.kind == "B":
        edges = _cycle_edges(t + 3) + [(i, t + 4) for i in range(1, t + 4)] + [(1, t + 5), (2, t + 5)]
        return Graph.from_edges(t + 5, edges)
    if spec.kind == "C":
        return Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (3, 5)])
    square = _cycle_edges(4)
    if spec.kind == "D1":
        return Graph.from_edges(6, square + [(a, i) for a in (5, 6) for i in range(1, 5)])
    return Graph.from_edges(6, square + [(5, 1), (5, 2), (5, 3), (6, 1), (6, 3), (6, 4), (5, 6)])


def specs_with_n(n: int) -> list[FamilySpec]:
    out = []
    for kind in ("A1", "A2", "A3"):
        if n - 4 >= 1:
            out.append(FamilySpec(kind, n - 4))
    if n - 5 >= 1:
        out.append(FamilySpec("B", n - 5))
    if n == 5:
        out.append(FamilySpec("C"))
    if n == 6:
        out += [FamilySpec("D1"), FamilySpec("D2")]
    return out


def recognize_family(gbar: Graph) -> FamilySpec | None:
    """The family member isomorphic to ``gbar``, if any."""
    if gbar.n > MAX_CANON:
        raise SizeGuardError(f"recognize_family supports n <= {MAX_CANON}")
    form = canonical_form(gbar)
    hits = [s for s in specs_with_n(gbar.n) if canonical_form(build_family(s)) == form]
    if len(hits) > 1:
        raise RuntimeError(f"ambiguous family match: {hits}")
    return hits[0] if hits else None


@dataclass(frozen=True)
class ExpectedBetti:
    """Nonlinear Betti numbers and invariants predicted for a family member."""

    table: BettiTable
    index: IntOrInf
    pd: int
    reg: int

    def positions(self, t: int) -> list[tuple[int, int]]:
        return [(t, t + 3), (t, t + 4), (t, t + 5), (t + 1, t + 3), (t + 1, t + 4), (t + 1, t + 5)]


def expected_nonlinear_betti(spec: FamilySpec) -> ExpectedBetti:
    """Predicted values at the six positions around the index; unlisted positions are zero."""
    t, k = spec.t, spec.kind
    top = {"A1": 1, "A2": 1, "B": 1, "A3": 2, "C": 3, "D1": 3, "D2": 3}[k]
    entries = {
        (t, t + 3): top,
        (t, t + 4): 0,
        (t, t + 5): 0,
        (t + 1, t + 3): 1 if k in ("A1", "B") else 0,
        (t + 1, t + 4): {"C": 2, "D2": 2, "D1": 0}.get(k, 1),
        (t + 1, t + 5): 1 if k == "D1" else 0,
    }
    return ExpectedBetti(BettiTable(2, entries), index=t, pd=t + 1, reg=4 if k == "D1" else 3)


def expected_pd_from_n(spec: FamilySpec) -> int:
    """Projective dimension in terms of the vertex count."""
    return spec.n - (4 if spec.kind in ("B", "D1", "D2") else 3)


def all_specs(t_max: int) -> list[FamilySpec]:
    return [FamilySpec(k, t) for k in PARAMETRIC for t in range(1, t_max + 1)] + [
        FamilySpec(k) for k in ("C", "D1", "D2")
    ]


def complement_edge_ideal(spec: FamilySpec):
    """Edge ideal I(G) for G the complement of the family graph."""
    from .monomial import edge_ideal

    return edge_ideal(complement(build_family(spec)))


def step_ideal(t: int, s: int):
    """``I(Cbar)^s (x_3, ..., x_{t+4})`` in the t+5 variables of the B family."""
    from .monomial import (complement_cycle_edges, default_variables, ideal_power, ideal_product,
                           minimalize, variable_ideal)

    variables = default_variables(t + 5)
    tails = variable_ideal(variables, range(2, t + 4))
    if s == 0:
        return tails
    gens = []
    for a, b in complement_cycle_edges(t + 3):
        m = [0] * (t + 5)
        m[a - 1] = m[b - 1] = 1
        gens.append(tuple(m))
    return ideal_product(ideal_power(minimalize(variables, gens), s), tails)


def b_colon_ideal(t: int, s: int):
    """``(I^{s+1} : x_{t+5})`` for I the edge ideal of the complement of the B family graph."""
    from .monomial import colon_ideal, ideal_power

    ideal = complement_edge_ideal(FamilySpec("B", t))
    x = tuple(1 if k == t + 4 else 0 for k in range(t + 5))
    return colon_ideal(ideal_power(ideal, s + 1), x)
