"""Simplicial complexes given by minimal non-faces and their reduced homology.

Faces are bitmasks (vertex ``v`` at bit ``v - 1``).  Chains are dictionaries
from face masks to integer coefficients; an oriented face is always taken with
its vertices in increasing order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .field import Field, QQ, rank
from .graph import Graph, SizeGuardError, iter_bits, mask_of, vertices_of

MAX_FACES = 2**22


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    nonfaces: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.n) - 1
        for a in self.nonfaces:
            if a == 0 or a & ~full:
                raise ValueError("non-faces must be nonempty subsets of the ground set")
        for a in self.nonfaces:
            for b in self.nonfaces:
                if a != b and a & b == a:
                    raise ValueError("non-faces must be pairwise incomparable")
        if len(set(self.nonfaces)) != len(self.nonfaces):
            raise ValueError("duplicate non-face")

    @classmethod
    def from_nonfaces(cls, n: int, nonfaces: Iterable[Iterable[int] | int]) -> "SimplicialComplex":
        """Build from arbitrary non-faces (1-based vertex lists or masks), keeping the minimal ones."""
        masks = {nf if isinstance(nf, int) else mask_of(nf) for nf in nonfaces}
        minimal = [a for a in masks if not any(b != a and b & a == b for b in masks)]
        return cls(n, tuple(sorted(minimal, key=lambda m: (m.bit_count(), vertices_of(m)))))

    def is_face(self, f: int | Iterable[int]) -> bool:
        m = f if isinstance(f, int) else mask_of(f)
        return not any(nf & m == nf for nf in self.nonfaces)

    def faces(self, w: int | None = None) -> list[list[int]]:
        """Faces of the induced subcomplex on ``w`` grouped by size (index 0 holds the empty face)."""
        full = (1 << self.n) - 1
        return _faces_within(_vertex_constraints(self), full if w is None else w)

    def dim(self) -> int:
        return len(self.faces()) - 2

    def to_json(self) -> dict:
        return {"n": self.n, "nonfaces": [vertices_of(m) for m in self.nonfaces]}

    @classmethod
    def from_json(cls, data: Mapping | str) -> "SimplicialComplex":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_nonfaces(int(data["n"]), data["nonfaces"])


def independence_complex(g: Graph) -> SimplicialComplex:
    """Complex of independent sets of ``g``; its Stanley-Reisner ideal is the edge ideal of ``g``."""
    return SimplicialComplex.from_nonfaces(g.n, [mask_of(e) for e in g.edges()])


def flag_complex(g: Graph) -> SimplicialComplex:
    """Clique complex of ``g``."""
    from .graph import complement

    return independence_complex(complement(g))


def stanley_reisner_complex(ideal) -> SimplicialComplex:
    """Complex whose non-faces are the supports of the generators of a squarefree monomial ideal."""
    nonfaces = []
    for gen in ideal.gens:
        if any(e > 1 for e in gen):
            raise ValueError("stanley_reisner_complex needs a squarefree ideal")
        m = 0
        for i, e in enumerate(gen):
            if e:
                m |= 1 << i
        if m == 0:
            raise ValueError("the unit ideal has no Stanley-Reisner complex")
        nonfaces.append(m)
    return SimplicialComplex.from_nonfaces(len(ideal.variables), nonfaces)


# -- face enumeration --------------------------------------------------------

def _vertex_constraints(c: SimplicialComplex) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Per vertex: mask of partners forming 2-element non-faces, and the remaining larger non-faces
    (with the vertex removed) that contain it."""
    out = []
    for v in range(c.n):
        bit = 1 << v
        pair_mask = 0
        larger = []
        for nf in c.nonfaces:
            if nf & bit:
                rest = nf ^ bit
                if rest == 0:
                    pair_mask = -1  # the vertex itself is a non-face
                elif rest.bit_count() == 1:
                    pair_mask |= rest
                else:
                    larger.append(rest)
        out.append((pair_mask, tuple(larger)))
    return tuple(out)


def _faces_within(cons, w: int, max_faces: int = MAX_FACES) -> list[list[int]]:
    usable = [v for v in iter_bits(w) if cons[v][0] != -1]
    levels = [[0]]
    total = 1
    while True:
        nxt = []
        for f in levels[-1]:
            top = f.bit_length()
            for v in usable:
                if v < top:
                    continue
                pm, larger = cons[v]
                if pm & f:
                    continue
                if larger and any(r & f == r for r in larger):
                    continue
                nxt.append(f | 1 << v)
        if not nxt:
            return levels
        total += len(nxt)
        if total > max_faces:
            raise SizeGuardError(f"complex has more than {max_faces} faces")
        levels.append(nxt)


def _boundary_rows(upper: list[int], lower_index: Mapping[int, int]) -> list[dict[int, int]]:
    rows = []
    for f in upper:
        row = {}
        sign = 1
        for b in iter_bits(f):
            row[lower_index[f ^ (1 << b)]] = sign
            sign = -sign
        rows.append(row)
    return rows


def _homology_from_levels(levels: list[list[int]], field: Field, min_degree: int = -1) -> dict[int, int]:
    """Reduced homology dimensions for degrees ``min_degree..top`` from faces grouped by size."""
    top = len(levels) - 2
    ranks: dict[int, int] = {}

    def rank_of(d: int) -> int:
        # rank of the boundary map from d-faces (size d + 1)
        if d not in ranks:
            if d <= -1 or d > top:
                ranks[d] = 0
            elif d == 0:
                ranks[d] = 1 if levels[1] else 0
            else:
                index = {f: i for i, f in enumerate(levels[d])}
                ranks[d] = rank(_boundary_rows(levels[d + 1], index), field)
        return ranks[d]

    out = {}
    for d in range(max(min_degree, -1), top + 1):
        out[d] = len(levels[d + 1]) - rank_of(d) - rank_of(d + 1)
    return out


def reduced_homology_dims(c: SimplicialComplex, field: Field = QQ) -> dict[int, int]:
    """``{d: dim H~_d}`` for ``-1 <= d <= dim``."""
    return _homology_from_levels(c.faces(), field)


def homology_on(c: SimplicialComplex, w: int, field: Field = QQ, min_degree: int = -1) -> dict[int, int]:
    """Reduced homology of the induced subcomplex on the vertex mask ``w``."""
    return _homology_from_levels(_faces_within(_vertex_constraints(c), w), field, min_degree)


def boundary_matrix(c: SimplicialComplex, d: int, field: Field = QQ) -> list[list[int]]:
    """Dense matrix of the boundary map from d-faces to (d-1)-faces.

    Rows are (d-1)-faces and columns d-faces, both in lexicographic order of
    their sorted vertex lists.  ``d = 0`` gives the augmentation onto the empty
    face; entries are reduced into ``0..p-1`` over GF(p).
    """
    levels = c.faces()
    top = len(levels) - 2
    if not -1 <= d <= top:
        raise ValueError(f"degree {d} outside -1..{top}")
    if d == -1:
        return []
    lower = levels[d]
    index = {f: i for i, f in enumerate(lower)}
    mat = [[0] * len(levels[d + 1]) for _ in lower]
    for j, row in enumerate(_boundary_rows(levels[d + 1], index)):
        for i, a in row.items():
            mat[i][j] = a % field.p if field.p else a
    return mat


def faces_of_dim(c: SimplicialComplex, d: int) -> list[tuple[int, ...]]:
    levels = c.faces()
    if d + 1 >= len(levels) or d < -1:
        return []
    return [tuple(vertices_of(f)) for f in levels[d + 1]]


# -- chains ------------------------------------------------------------------

def oriented(vertices: Sequence[int]) -> tuple[int, int]:
    """``(mask, sign)`` of the bracket ``[v_0, ..., v_k]`` relative to its sorted order."""
    if len(set(vertices)) != len(vertices):
        raise ValueError(f"repeated vertex in {list(vertices)}")
    inversions = sum(1 for i in range(len(vertices)) for j in range(i + 1, len(vertices)) if vertices[i] > vertices[j])
    return mask_of(vertices), -1 if inversions % 2 else 1


def chain(terms: Iterable[tuple[int, Sequence[int]]]) -> dict[int, int]:
    """Build a chain from ``(coefficient, bracket)`` pairs, normalising orientations."""
    out: dict[int, int] = {}
    for coeff, verts in terms:
        m, sign = oriented(verts)
        out[m] = out.get(m, 0) + sign * coeff
        if out[m] == 0:
            del out[m]
    return out


def chain_degree(z: Mapping[int, int]) -> int:
    sizes = {f.bit_count() for f in z}
    if len(sizes) > 1:
        raise ValueError("chain mixes faces of different dimensions")
    return sizes.pop() - 1 if sizes else -2


def boundary(z: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for f, a in z.items():
        sign = 1
        for b in iter_bits(f):
            g = f ^ (1 << b)
            out[g] = out.get(g, 0) + sign * a
            sign = -sign
    return {f: a for f, a in out.items() if a}


def _reduce(z: Mapping[int, int], field: Field) -> dict[int, int]:
    if field.p == 0:
        return {f: a for f, a in z.items() if a}
    return {f: a % field.p for f, a in z.items() if a % field.p}


def special_chain(kind: str, cycle: Sequence[int], apexes: tuple[int, int] | None = None,
                  ambient: SimplicialComplex | None = None) -> dict[int, int]:
    """The cycle chain of a closed walk ``u_1 - ... - u_r - u_1`` or the dipyramid chain
    over such a waist with apexes ``a`` and ``b``.

    When ``ambient`` is given every bracket is checked to be a face of it.
    """
    r = len(cycle)
    if r < 3 or len(set(cycle)) != r:
        raise ValueError("a cycle needs at least three distinct vertices")
    if kind == "cycle":
        terms = [(1, (cycle[i], cycle[i + 1])) for i in range(r - 1)] + [(-1, (cycle[0], cycle[-1]))]
    elif kind == "dipyramid":
        if apexes is None:
            raise ValueError("a dipyramid chain needs two apexes")
        a, b = apexes
        if a == b or a in cycle or b in cycle:
            raise ValueError("apexes must be distinct and off the waist")
        terms = []
        for i in range(r - 1):
            terms.append((1, (a, cycle[i], cycle[i + 1])))
            terms.append((-1, (b, cycle[i], cycle[i + 1])))
        terms += [(-1, (a, cycle[0], cycle[-1])), (1, (b, cycle[0], cycle[-1]))]
    else:
        raise ValueError(f"unknown chain kind {kind!r}")
    z = chain(terms)
    if ambient is not None:
        for f in z:
            if not ambient.is_face(f):
                raise ValueError(f"{vertices_of(f)} is not a face of the ambient complex")
    return z


def chain_is_boundary(c: SimplicialComplex, z: Mapping[int, int], field: Field = QQ) -> bool:
    """Whether the cycle ``z`` of degree d lies in the image of the boundary from (d+1)-faces."""
    z = _reduce(z, field)
    if not z:
        return True
    d = chain_degree(z)
    if _reduce(boundary(z), field):
        raise ValueError("chain is not a cycle")
    for f in z:
        if not c.is_face(f):
            raise ValueError(f"{vertices_of(f)} is not a face of the complex")
    levels = c.faces()
    if d + 2 >= len(levels):
        return False
    index = {f: i for i, f in enumerate(levels[d + 1])}
    cols = _boundary_rows(levels[d + 2], index)
    target = {index[f]: a for f, a in z.items()}
    base = rank(cols, field)
    return rank(cols + [target], field) == base
