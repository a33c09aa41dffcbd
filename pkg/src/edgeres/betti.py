"""Graded Betti numbers of squarefree monomial ideals via Hochster's formula.

beta_{i,j}(I_Delta) is the sum over vertex sets W with |W| = j of
dim H~_{j-i-2}(Delta_W).  A set W contributes only when it is a union of
non-faces lying inside W: any other vertex of W is a cone point of Delta_W.
The loop therefore runs over the union-closure of the minimal non-faces.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence, Union

from .field import Field, QQ
from .graph import Graph, SizeGuardError, complement, min_minimal_cycle_length
from .homology import (
    SimplicialComplex,
    _faces_within,
    _homology_from_levels,
    _vertex_constraints,
    independence_complex,
    stanley_reisner_complex,
)

MAX_VERTICES = 22


class Infinity:
    """The value of the index for a linear resolution."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinity)

    def __hash__(self) -> int:
        return hash("Infinity")

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()
IntOrInf = Union[int, Infinity]


@dataclass(frozen=True)
class BettiTable:
    d: int
    entries: Mapping[tuple[int, int], int] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), b in sorted(self.entries.items()):
            if b < 0:
                raise ValueError(f"negative Betti number at ({i}, {j})")
            if b == 0:
                continue
            if j < i + self.d:
                raise ValueError(f"beta_{{{i},{j}}} below the generation degree {self.d}")
            clean[(i, j)] = b
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def total(self, i: int) -> int:
        return sum(b for (a, _), b in self.entries.items() if a == i)

    def nonlinear(self) -> dict[tuple[int, int], int]:
        return {(i, j): b for (i, j), b in self.entries.items() if j > i + self.d}

    def to_tsv(self) -> str:
        return "".join(f"{i}\t{j}\t{b}\n" for (i, j), b in self.entries.items())

    def to_json(self) -> dict:
        return {"d": self.d, "entries": [[i, j, b] for (i, j), b in self.entries.items()]}

    @classmethod
    def from_json(cls, data: Mapping | str) -> "BettiTable":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["d"]), {(int(i), int(j)): int(b) for i, j, b in data["entries"]})


@dataclass(frozen=True)
class ResolutionStats:
    index: IntOrInf
    pd: int
    reg: int
    linear: bool
    almost_maximal: bool

    def to_json(self) -> dict:
        return {
            "index": "inf" if self.index == INF else self.index,
            "pd": self.pd,
            "reg": self.reg,
            "linear": self.linear,
            "almost_maximal": self.almost_maximal,
        }


def resolution_stats(t: BettiTable) -> ResolutionStats:
    if not t.entries:
        raise ValueError("resolution_stats of an empty Betti table (zero ideal)")
    nonlin = [i for (i, j) in t.entries if j > i + t.d]
    index: IntOrInf = min(nonlin) if nonlin else INF
    pd = max(i for i, _ in t.entries)
    reg = max(j - i for i, j in t.entries)
    return ResolutionStats(
        index=index,
        pd=pd,
        reg=reg,
        linear=index == INF,
        almost_maximal=index != INF and index == pd - 1,
    )


# -- Hochster sum ------------------------------------------------------------

def contributing_sets(c: SimplicialComplex) -> list[int]:
    """Nonempty unions of minimal non-faces, ordered by (size, vertex list)."""
    unions = {0}
    for nf in c.nonfaces:
        unions |= {u | nf for u in unions}
    unions.discard(0)
    return sorted(unions, key=lambda m: (m.bit_count(), [b for b in range(m.bit_length()) if m >> b & 1]))


def _table_chunk(args) -> dict[tuple[int, int], int]:
    cons, ws, field = args
    out: dict[tuple[int, int], int] = {}
    for w in ws:
        size = w.bit_count()
        for k, h in _homology_from_levels(_faces_within(cons, w), field).items():
            i = size - k - 2
            if h and i >= 0:
                out[(i, size)] = out.get((i, size), 0) + h
    return out


def _reg_chunk(args) -> int:
    cons, ws, field, floor = args
    best = floor
    for w in ws:
        size = w.bit_count()
        # H~_k(Delta_W) sits at j - i = k + 2; only k + 2 > best can raise the bound
        dims = _homology_from_levels(_faces_within(cons, w), field, min_degree=best - 1)
        for k in sorted(dims, reverse=True):
            if k + 2 <= best:
                break
            if dims[k] and size - k - 2 >= 0:
                best = k + 2
                break
    return best


def _chunks(items: Sequence[int], parts: int) -> list[Sequence[int]]:
    size = max(1, -(-len(items) // parts))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _fan_out(fn, payloads: list, threads: int) -> list:
    if threads <= 1 or len(payloads) <= 1:
        return [fn(p) for p in payloads]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, payloads))


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        return os.cpu_count() or 1
    if threads < 1:
        raise ValueError("threads must be positive")
    return threads


def _check_size(c: SimplicialComplex) -> None:
    if c.n > MAX_VERTICES:
        raise SizeGuardError(f"Hochster sum supports at most {MAX_VERTICES} vertices, got {c.n}")


def hochster_table(c: SimplicialComplex, field: Field = QQ, threads: int | None = 1) -> BettiTable:
    """Betti table of the Stanley-Reisner ideal of ``c``."""
    _check_size(c)
    if not c.nonfaces:
        return BettiTable(0)
    d = min(nf.bit_count() for nf in c.nonfaces)
    threads = _resolve_threads(threads)
    ws = contributing_sets(c)
    cons = _vertex_constraints(c)
    parts = _chunks(ws, 4 * threads if threads > 1 else 1)
    total: dict[tuple[int, int], int] = {}
    for part in _fan_out(_table_chunk, [(cons, p, field) for p in parts], threads):
        for key, b in part.items():
            total[key] = total.get(key, 0) + b
    return BettiTable(d, total)


def hochster_regularity(c: SimplicialComplex, field: Field = QQ, threads: int | None = 1) -> int:
    """Regularity of the Stanley-Reisner ideal of ``c``, checking only homology that can raise it."""
    _check_size(c)
    if not c.nonfaces:
        raise ValueError("regularity of the zero ideal is undefined")
    d = min(nf.bit_count() for nf in c.nonfaces)
    threads = _resolve_threads(threads)
    ws = contributing_sets(c)
    cons = _vertex_constraints(c)
    # largest sets first: they carry the highest homology
    ws = ws[::-1]
    parts = _chunks(ws, 4 * threads if threads > 1 else 1)
    return max(_fan_out(_reg_chunk, [(cons, p, field, d) for p in parts], threads))


def hochster_betti(g: Graph, field: Field = QQ, threads: int | None = 1) -> BettiTable:
    """Betti table of the edge ideal of ``g``."""
    t = hochster_table(independence_complex(g), field, threads)
    return t if t.entries else BettiTable(2)


def betti_squarefree(ideal, field: Field = QQ, threads: int | None = 1) -> BettiTable:
    """Betti table of a squarefree monomial ideal; ``d`` is its smallest generator degree."""
    if any(e > 1 for gen in ideal.gens for e in gen):
        raise ValueError("betti_squarefree needs a squarefree ideal")
    if not ideal.gens:
        return BettiTable(0)
    if any(sum(gen) == 0 for gen in ideal.gens):
        return BettiTable(0, {(0, 0): 1})
    return hochster_table(stanley_reisner_complex(ideal), field, threads)


def regularity_squarefree(ideal, field: Field = QQ, threads: int | None = 1) -> int:
    if any(e > 1 for gen in ideal.gens for e in gen):
        raise ValueError("regularity_squarefree needs a squarefree ideal")
    if any(sum(gen) == 0 for gen in ideal.gens):
        return 0
    return hochster_regularity(stanley_reisner_complex(ideal), field, threads)


def index_via_cycles(g: Graph) -> IntOrInf:
    """Index of I(g) from the shortest induced cycle of length > 3 in the complement."""
    length = min_minimal_cycle_length(complement(g))
    return INF if length is None else length - 3


def is_almost_maximal(g: Graph, field: Field = QQ, threads: int | None = 1) -> bool:
    return resolution_stats(hochster_betti(g, field, threads)).almost_maximal
