"""Monomial ideals over a fixed ordered list of variables.

A monomial is a tuple of exponents aligned with ``MonomialIdeal.variables``.
Generators are kept minimal and sorted by degree, then lexicographically with
the first variable largest.
"""
from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .betti import BettiTable, MAX_VERTICES, betti_squarefree, regularity_squarefree
from .field import Field, QQ, rank
from .graph import Graph, SizeGuardError

Monomial = tuple[int, ...]

MAX_POWER_PRODUCTS = 10**7
MAX_TAYLOR_GENS = 14


def _sort_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in m))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; ``b`` must divide ``a``."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ValueError("monomial does not divide")
    return out


def _natural_key(name: str) -> tuple:
    return tuple(int(p) if p.isdigit() else p for p in re.split(r"(\d+)", name))


def default_variables(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class MonomialIdeal:
    variables: tuple[str, ...]
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("repeated variable name")
        k = len(self.variables)
        for g in self.gens:
            if len(g) != k or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g}")
        if list(self.gens) != sorted(set(self.gens), key=_sort_key):
            raise ValueError("generators must be distinct and sorted; use minimalize")
        for a in self.gens:
            for b in self.gens:
                if a != b and divides(a, b):
                    raise ValueError("generators must be pairwise non-dividing; use minimalize")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.gens

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def degrees(self) -> list[int]:
        return [sum(g) for g in self.gens]

    def is_equigenerated(self) -> bool:
        return len(set(self.degrees())) <= 1

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def format_monomial(self, m: Monomial) -> str:
        return format_monomial(m, self.variables)

    def to_text(self) -> str:
        header = "vars: " + " ".join(self.variables) + "\n"
        return header + "".join(self.format_monomial(g) + "\n" for g in self.gens)

    def to_json(self) -> dict:
        return {"variables": list(self.variables), "generators": [self.format_monomial(g) for g in self.gens]}

    def __str__(self) -> str:
        return "(" + ", ".join(self.format_monomial(g) for g in self.gens) + ")"


def minimalize(variables: Sequence[str], gens: Iterable[Monomial]) -> MonomialIdeal:
    """Divisibility-minimal, deduplicated and sorted generating set."""
    uniq = sorted(set(tuple(g) for g in gens), key=_sort_key)
    keep: list[Monomial] = []
    # sorting by degree first means a divisor is always seen before its multiples
    for g in uniq:
        if not any(divides(h, g) for h in keep):
            keep.append(g)
    return MonomialIdeal(tuple(variables), tuple(sorted(keep, key=_sort_key)))


def format_monomial(m: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for name, e in zip(variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*$")


def _parse_factors(text: str) -> list[tuple[str, int]]:
    text = text.strip()
    if text == "1":
        return []
    out = []
    for piece in text.split("*"):
        m = _FACTOR.match(piece)
        if not m:
            raise ValueError(f"bad monomial factor {piece!r} in {text!r}")
        e = int(m.group(2)) if m.group(2) else 1
        if e < 1:
            raise ValueError(f"exponent must be positive in {text!r}")
        out.append((m.group(1), e))
    return out


def parse_monomial(text: str, variables: Sequence[str]) -> Monomial:
    index = {v: i for i, v in enumerate(variables)}
    exps = [0] * len(variables)
    for name, e in _parse_factors(text):
        if name not in index:
            raise ValueError(f"unknown variable {name!r}")
        exps[index[name]] += e
    return tuple(exps)


def ideal_from_strings(gens: Sequence[str], variables: Sequence[str] | None = None) -> MonomialIdeal:
    if variables is None:
        names = {name for g in gens for name, _ in _parse_factors(g)}
        variables = sorted(names, key=_natural_key)
    return minimalize(variables, [parse_monomial(g, variables) for g in gens])


def parse_ideal(text: str) -> MonomialIdeal:
    """Text form: optional ``vars: x1 x2 ...`` line, then one generator per line; or the JSON form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return ideal_from_strings(data["generators"], data.get("variables"))
    variables = None
    gens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            variables = line[5:].split()
        else:
            gens.append(line)
    return ideal_from_strings(gens, variables)


def edge_ideal(g: Graph) -> MonomialIdeal:
    gens = []
    for u, v in g.edges():
        m = [0] * g.n
        m[u - 1] = m[v - 1] = 1
        gens.append(tuple(m))
    return minimalize(default_variables(g.n), gens)


def variable_ideal(variables: Sequence[str], indices: Iterable[int]) -> MonomialIdeal:
    """Ideal generated by the variables at the given 0-based positions."""
    gens = []
    for i in indices:
        m = [0] * len(variables)
        m[i] = 1
        gens.append(tuple(m))
    return minimalize(variables, gens)


def _same_ambient(i: MonomialIdeal, j: MonomialIdeal) -> None:
    if i.variables != j.variables:
        raise ValueError("ideals live in different polynomial rings")


def ideal_sum(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(i, j)
    return minimalize(i.variables, i.gens + j.gens)


def ideal_product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(i, j)
    return minimalize(i.variables, [mono_mul(a, b) for a in i.gens for b in j.gens])


def ideal_power(i: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise ValueError("power must be at least 1")
    r = len(i.gens)
    if r and math.comb(r + s - 1, s) > MAX_POWER_PRODUCTS:
        raise SizeGuardError(f"more than {MAX_POWER_PRODUCTS} products in I^{s}")
    zero = (0,) * i.nvars
    prods = []
    for combo in itertools.combinations_with_replacement(i.gens, s):
        m = zero
        for g in combo:
            m = mono_mul(m, g)
        prods.append(m)
    return minimalize(i.variables, prods)


def colon_ideal(i: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``(I : m)``, generated by ``u / gcd(u, m)`` over the generators ``u``."""
    if len(m) != i.nvars:
        raise ValueError("monomial has the wrong number of variables")
    return minimalize(i.variables, [mono_div(u, mono_gcd(u, m)) for u in i.gens])


def polarize(i: MonomialIdeal) -> tuple[MonomialIdeal, dict[tuple[str, int], str]]:
    """Squarefree polarization.

    Copy 1 of each variable keeps its name; copies ``c >= 2`` are appended as
    ``<name>_<c>`` in order of variable, then copy.  The map sends
    ``(variable, copy)`` to the new variable name.
    """
    top = [max((g[k] for g in i.gens), default=0) for k in range(i.nvars)]
    names = list(i.variables)
    vmap: dict[tuple[str, int], str] = {(v, 1): v for v in i.variables}
    slot: dict[tuple[int, int], int] = {(k, 1): k for k in range(i.nvars)}
    for k, v in enumerate(i.variables):
        for c in range(2, top[k] + 1):
            name = f"{v}_{c}"
            if name in names:
                raise ValueError(f"polarized name {name!r} collides with an existing variable")
            slot[(k, c)] = len(names)
            vmap[(v, c)] = name
            names.append(name)
    gens = []
    for g in i.gens:
        m = [0] * len(names)
        for k, e in enumerate(g):
            for c in range(1, e + 1):
                m[slot[(k, c)]] = 1
        gens.append(tuple(m))
    return minimalize(names, gens), vmap


def _polarized_checked(i: MonomialIdeal) -> MonomialIdeal:
    p, _ = polarize(i)
    if p.nvars > MAX_VERTICES:
        raise SizeGuardError(f"polarization has {p.nvars} variables, limit {MAX_VERTICES}")
    return p


def betti_of_monomial_ideal(i: MonomialIdeal, field: Field = QQ, threads: int | None = 1) -> BettiTable:
    """Graded Betti numbers through polarization and Hochster's formula."""
    return betti_squarefree(_polarized_checked(i), field, threads)


def regularity(i: MonomialIdeal, field: Field = QQ, threads: int | None = 1) -> int:
    """Castelnuovo-Mumford regularity through polarization, computing only homology that can raise it."""
    if i.is_zero():
        raise ValueError("regularity of the zero ideal is undefined")
    return regularity_squarefree(_polarized_checked(i), field, threads)


def betti_via_taylor(i: MonomialIdeal, field: Field = QQ) -> BettiTable:
    """Graded Betti numbers from the Taylor complex tensored with the residue field.

    The differential sends a subset of generators to its codimension-one
    subsets with the same lcm; homology is taken one multidegree at a time.
    """
    r = len(i.gens)
    if r > MAX_TAYLOR_GENS:
        raise SizeGuardError(f"Taylor complex supports at most {MAX_TAYLOR_GENS} generators")
    if r == 0:
        return BettiTable(0)
    zero = (0,) * i.nvars
    lcms = [zero] * (1 << r)
    for sigma in range(1, 1 << r):
        low = (sigma & -sigma).bit_length() - 1
        lcms[sigma] = mono_lcm(lcms[sigma ^ (1 << low)], i.gens[low])
    groups: dict[Monomial, list[int]] = {}
    for sigma in range(1, 1 << r):
        groups.setdefault(lcms[sigma], []).append(sigma)
    table: dict[tuple[int, int], int] = {}
    for m, members in groups.items():
        by_size: dict[int, list[int]] = {}
        for sigma in members:
            by_size.setdefault(sigma.bit_count(), []).append(sigma)
        ranks: dict[int, int] = {}

        def boundary_rank(k: int) -> int:
            # rank of the map from size-k subsets to size-(k-1) subsets inside this multidegree
            if k not in ranks:
                upper, lower = by_size.get(k, []), by_size.get(k - 1, [])
                if not upper or not lower:
                    ranks[k] = 0
                else:
                    index = {s: n for n, s in enumerate(lower)}
                    rows = []
                    for sigma in upper:
                        row = {}
                        pos = 0
                        for b in range(r):
                            if sigma >> b & 1:
                                face = sigma ^ (1 << b)
                                if face in index:
                                    row[index[face]] = -1 if pos % 2 else 1
                                pos += 1
                        rows.append(row)
                    ranks[k] = rank(rows, field)
            return ranks[k]

        j = sum(m)
        for k, subsets in by_size.items():
            h = len(subsets) - boundary_rank(k) - boundary_rank(k + 1)
            if h:
                table[(k - 1, j)] = table.get((k - 1, j), 0) + h
    return BettiTable(min(i.degrees()), table)


# -- linear quotients --------------------------------------------------------

@dataclass(frozen=True)
class OrderedGenerators:
    """An explicit generator order, with optional block/edge/tail bookkeeping."""

    variables: tuple[str, ...]
    gens: tuple[Monomial, ...]
    blocks: tuple[int, ...] | None = None
    edges: tuple[tuple[tuple[int, int], ...], ...] | None = None
    tails: tuple[Monomial, ...] | None = None

    def __post_init__(self):
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("repeated generator")
        for a in self.gens:
            for b in self.gens:
                if a != b and divides(a, b):
                    raise ValueError("generators must form a minimal generating set")

    @classmethod
    def from_ideal(cls, i: MonomialIdeal, order: Sequence[int] | None = None) -> "OrderedGenerators":
        gens = i.gens if order is None else tuple(i.gens[k] for k in order)
        if sorted(gens, key=_sort_key) != list(i.gens):
            raise ValueError("order must be a permutation of the generators")
        return cls(i.variables, tuple(gens))

    def ideal(self) -> MonomialIdeal:
        return minimalize(self.variables, self.gens)

    def describe(self) -> list[str]:
        return [format_monomial(g, self.variables) for g in self.gens]


@dataclass(frozen=True)
class LinearQuotientsReport:
    ok: bool
    witness: tuple[int, int, Monomial] | None = None

    def to_json(self, variables: Sequence[str] | None = None) -> dict:
        if self.witness is None:
            return {"ok": self.ok, "witness": None}
        q, l, m = self.witness
        shown = format_monomial(m, variables) if variables else list(m)
        return {"ok": self.ok, "witness": {"q": q + 1, "l": l + 1, "quotient": shown}}


def check_linear_quotients(o: OrderedGenerators) -> LinearQuotientsReport:
    """Whether every colon ``((m_1..m_{l-1}) : m_l)`` is generated by variables.

    On failure the witness holds 0-based positions ``(q, l)`` and the quotient
    ``m_q / gcd(m_q, m_l)`` that no variable quotient divides.
    """
    if not o.gens:
        raise ValueError("empty generator sequence")
    for l in range(1, len(o.gens)):
        ml = o.gens[l]
        quotients = [mono_div(o.gens[q], mono_gcd(o.gens[q], ml)) for q in range(l)]
        linear = [m for m in quotients if sum(m) == 1]
        for q, m in enumerate(quotients):
            if not any(divides(v, m) for v in linear):
                return LinearQuotientsReport(False, (q, l, m))
    return LinearQuotientsReport(True)


def complement_cycle_edges(cycle_len: int) -> list[tuple[int, int]]:
    """Edges ``{i, j}`` of the complement of the cycle 1-2-...-r-1, as ascending pairs."""
    r = cycle_len
    return [(i, j) for i in range(1, r + 1) for j in range(i + 2, r + 1) if not (i == 1 and j == r)]


def _smallest_presentation(m: Monomial, edges: list[tuple[int, int]], count: int,
                           tail_ok) -> tuple[tuple[tuple[int, int], ...], Monomial] | None:
    best = None

    def search(rest: Monomial, start: int, chosen: list[tuple[int, int]]):
        nonlocal best
        if best is not None and tuple(chosen) > best[0][:len(chosen)]:
            return
        if len(chosen) == count:
            if tail_ok(rest):
                cand = (tuple(chosen), rest)
                if best is None or cand[0] < best[0]:
                    best = cand
            return
        for k in range(start, len(edges)):
            a, b = edges[k]
            if rest[a - 1] and rest[b - 1]:
                nxt = list(rest)
                nxt[a - 1] -= 1
                nxt[b - 1] -= 1
                chosen.append(edges[k])
                search(tuple(nxt), k, chosen)
                chosen.pop()

    search(m, 0, [])
    return best


def _lex_key(m: Monomial) -> tuple:
    # lex with x_1 < ... < x_n: the largest variable decides first
    return tuple(reversed(m))


def banerjee_order(j: MonomialIdeal, cycle_len: int, s: int) -> OrderedGenerators:
    """Order the generators of ``sum_k I(Cbar)^(s-k) x_{t+5}^k (x_3..x_{t+4})^(k+1)``.

    Here C is the cycle 1-2-...-(t+3)-1 and ``cycle_len = t + 3``.  Blocks are
    indexed by the exponent k of x_{t+5}; block 0 alone is the ideal
    ``I(Cbar)^s (x_3..x_{t+4})``.  Inside a block k < s generators are ordered
    by their smallest edge multiset, then by the remaining tail in lex order;
    in block s the pure powers ``x_{t+5}^s x_i^(s+1)`` come last, ordered by i,
    after all others in lex order.
    """
    t = cycle_len - 3
    if t < 1 or s < 0:
        raise ValueError("need cycle_len >= 4 and s >= 0")
    if j.nvars < t + 4:
        raise ValueError(f"ideal needs at least {t + 4} variables")
    apex = t + 4  # 0-based position of x_{t+5}
    has_apex = j.nvars > apex
    edges = complement_cycle_edges(cycle_len)
    tail_support = set(range(2, t + 4))  # 0-based positions of x_3..x_{t+4}
    records = []
    for m in j.gens:
        if sum(m) != 2 * s + 1:
            raise ValueError(f"generator {j.format_monomial(m)} does not have degree {2 * s + 1}")
        k = m[apex] if has_apex else 0
        if k > s or any(e for p, e in enumerate(m) if p > apex):
            raise ValueError(f"generator {j.format_monomial(m)} does not have the expected shape")
        rest = list(m)
        if has_apex:
            rest[apex] = 0
        rest = tuple(rest)

        def tail_ok(r: Monomial, k=k) -> bool:
            return sum(r) == k + 1 and all(p in tail_support for p, e in enumerate(r) if e)

        pres = _smallest_presentation(rest, edges, s - k, tail_ok)
        if pres is None:
            raise ValueError(f"generator {j.format_monomial(m)} has no presentation of the expected shape")
        e_l, tail = pres
        records.append((k, e_l, tail, m))

    def key(rec):
        k, e_l, tail, m = rec
        if k < s:
            return (k, 0, e_l, _lex_key(tail))
        pure = [p for p in tail_support if tail[p] == s + 1]
        if pure:
            return (k, 1, (), (pure[0],))
        return (k, 0, (), _lex_key(m))

    records.sort(key=key)
    return OrderedGenerators(
        variables=j.variables,
        gens=tuple(r[3] for r in records),
        blocks=tuple(r[0] for r in records),
        edges=tuple(r[1] for r in records),
        tails=tuple(r[2] for r in records),
    )


def greedy_linear_quotients_order(i: MonomialIdeal) -> OrderedGenerators | None:
    """Some order with linear quotients, found greedily from each possible first generator.

    A None result does not prove that no such order exists.
    """
    def linear_after(prev: list[Monomial], m: Monomial) -> bool:
        quotients = [mono_div(p, mono_gcd(p, m)) for p in prev]
        lin = [q for q in quotients if sum(q) == 1]
        return all(any(divides(v, q) for v in lin) for q in quotients)

    for first in i.gens:
        chosen = [first]
        rest = [g for g in i.gens if g != first]
        while rest:
            pick = next((m for m in rest if linear_after(chosen, m)), None)
            if pick is None:
                break
            chosen.append(pick)
            rest.remove(pick)
        if not rest:
            return OrderedGenerators(i.variables, tuple(chosen))
    return None
