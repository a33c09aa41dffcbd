"""Coefficient fields and exact matrix rank.

Matrices are handed over as lists of sparse rows, ``{column: int}``.  Over a
prime field the entries are reduced mod p; over the rationals the elimination
is fraction-free on integer rows, dividing each new row by its content so the
entries stay small.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p == 0``) or GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not (_is_prime(self.p) and self.p < MAX_PRIME):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __str__(self) -> str:
        return "q" if self.p == 0 else str(self.p)


QQ = Field(0)
GF2 = Field(2)
GF3 = Field(3)


def parse_field(text: str) -> Field:
    """Accept ``q``, ``Q``, ``0``, a prime such as ``3``, or ``p:<prime>``."""
    t = str(text).strip().lower()
    if t in ("q", "qq", "0", "rationals"):
        return QQ
    if t.startswith("p:"):
        t = t[2:]
    try:
        return Field(int(t))
    except ValueError as exc:
        raise ValueError(f"bad field {text!r}: {exc}") from None


def rank(rows: Iterable[Mapping[int, int]], field: Field) -> int:
    if field.p == 2:
        return _rank_gf2(rows)
    if field.p == 0:
        return _rank_rational(rows)
    return _rank_mod_p(rows, field.p)


def _rank_gf2(rows) -> int:
    basis: dict[int, int] = {}
    for row in rows:
        v = 0
        for c, a in row.items():
            if a & 1:
                v ^= 1 << c
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = v
                break
            v ^= b
    return len(basis)


def _rank_mod_p(rows, p: int) -> int:
    basis: dict[int, dict[int, int]] = {}  # pivot column -> row normalised to pivot 1
    for row in rows:
        r = {c: a % p for c, a in row.items() if a % p}
        while r:
            c = min(r)
            b = basis.get(c)
            if b is None:
                inv = pow(r[c], p - 2, p)
                basis[c] = {k: a * inv % p for k, a in r.items()}
                break
            f = r[c]
            for k, a in b.items():
                nv = (r.get(k, 0) - f * a) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(basis)


def _rank_rational(rows) -> int:
    basis: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: a for c, a in row.items() if a}
        while r:
            c = min(r)
            b = basis.get(c)
            if b is None:
                basis[c] = r
                break
            pb, pr = b[c], r[c]
            g = gcd(pb, pr)
            sb, sr = pr // g, pb // g
            out = {}
            for k in r.keys() | b.keys():
                nv = sr * r.get(k, 0) - sb * b.get(k, 0)
                if nv:
                    out[k] = nv
            content = 0
            for a in out.values():
                content = gcd(content, a)
                if content == 1:
                    break
            if content > 1:
                out = {k: a // content for k, a in out.items()}
            r = out
    return len(basis)


def solve_in_span(columns: list[Mapping[int, int]], target: Mapping[int, int], field: Field) -> bool:
    """Whether ``target`` lies in the span of ``columns`` (all given as sparse vectors)."""
    cols = list(columns)
    base = rank(cols, field)
    return rank(cols + [target], field) == base
