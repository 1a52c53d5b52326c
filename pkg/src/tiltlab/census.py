"""Indecomposable representations of a Dynkin quiver, one per positive root.

Each indecomposable is produced from a simple representation by a chain of
reflection functors.  The resulting :class:`Census` also carries the Hom/Ext
dimension tables and the Hom bases between indecomposables, which every
downstream computation reuses.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter

import numpy as np

from . import exactfield as ef
from .quiverroots import Quiver, euler_form, positive_roots, validate
from .repcore import (
    Morphism,
    Representation,
    ext_dim_coker,
    hom_basis,
    hom_dim,
    simple,
)


class ReflectionError(ValueError):
    pass


class DecompositionError(RuntimeError):
    pass


class CensusError(RuntimeError):
    pass


def reflect_plus(q: Quiver, v: int, m: Representation) -> Representation:
    """Reflection at the sink ``v``: replace ``m_v`` by the kernel of the sum map."""
    if not q.is_sink(v):
        raise ReflectionError(f"vertex {v + 1} is not a sink")
    p = m.p
    inc = q.arrows_into(v)
    blocks = [m.dims[q.arrows[a][0]] for a in inc]
    h = np.hstack([m.mats[a] for a in inc]) if inc else ef.zeros(m.dims[v], 0)
    if ef.rank(h, p) != m.dims[v]:
        raise ReflectionError(f"simple at vertex {v + 1} is a direct summand")
    k = ef.kernel_basis(h, p)
    dims = list(m.dims)
    dims[v] = k.shape[1]
    mats = list(m.mats)
    off = 0
    for a, size in zip(inc, blocks):
        mats[a] = k[off : off + size, :]
        off += size
    return Representation(q.reflected(v), dims, mats, p)


def reflect_minus(q: Quiver, v: int, m: Representation) -> Representation:
    """Reflection at the source ``v``: replace ``m_v`` by the cokernel of the diagonal map."""
    if not q.is_source(v):
        raise ReflectionError(f"vertex {v + 1} is not a source")
    p = m.p
    out = q.arrows_out_of(v)
    blocks = [m.dims[q.arrows[a][1]] for a in out]
    g = np.vstack([m.mats[a] for a in out]) if out else ef.zeros(0, m.dims[v])
    if ef.rank(g, p) != m.dims[v]:
        raise ReflectionError(f"simple at vertex {v + 1} is a direct summand")
    pr = ef.left_kernel_basis(g, p)
    dims = list(m.dims)
    dims[v] = pr.shape[0]
    mats = list(m.mats)
    off = 0
    for a, size in zip(out, blocks):
        mats[a] = pr[:, off : off + size]
        off += size
    return Representation(q.reflected(v), dims, mats, p)


def reflect(q: Quiver, v: int, m: Representation) -> Representation:
    """Apply the reflection functor appropriate to ``v`` (sink first, then source)."""
    if q.is_sink(v):
        return reflect_plus(q, v, m)
    if q.is_source(v):
        return reflect_minus(q, v, m)
    raise ReflectionError(f"vertex {v + 1} is neither a sink nor a source")


def simple_reflection(q: Quiver, v: int, d) -> tuple[int, ...]:
    nb = sum(d[s] if t == v else d[t] for s, t in q.arrows if v in (s, t))
    return tuple(nb - x if i == v else x for i, x in enumerate(d))


def build_indec(q: Quiver, root, p: int, max_steps: int = 10_000) -> Representation:
    """The indecomposable with dimension vector ``root``.

    Sink reflections (lowest index within the root's component) carry the
    root to a simple root; the inverse functors then rebuild the module from
    the simple representation.
    """
    root = tuple(int(x) for x in root)
    if len(root) != q.n or any(x < 0 for x in root) or euler_form(q, root, root) != 1:
        raise CensusError(f"{root} is not a positive root")
    comp = next(c for c in q.components() if any(root[v] for v in c))
    path: list[tuple[Quiver, int]] = []
    cur_q, cur = q, root
    for _ in range(max_steps):
        if sum(cur) == 1:
            break
        v = next(v for v in comp if cur_q.is_sink(v))
        path.append((cur_q, v))
        cur = simple_reflection(cur_q, v, cur)
        cur_q = cur_q.reflected(v)
        if any(x < 0 for x in cur):
            raise CensusError(f"reflection path for {root} left the positive roots")
    else:
        raise CensusError(f"no reflection path found for {root}")
    m = simple(cur_q, cur.index(1), p)
    for prev_q, v in reversed(path):
        m = reflect_minus(prev_q.reflected(v), v, m)
    if m.dims != root or m.quiver != q:
        raise CensusError(f"reflection rebuild produced {m.dims} for {root}")
    return m


def is_brick(m: Representation) -> bool:
    return hom_dim(m, m) == 1


@dataclass(eq=False)
class Census:
    quiver: Quiver
    p: int
    indecs: list[Representation]
    hom_table: list[list[int]]
    ext_table: list[list[int]]
    hom_bases: list[list[list[Morphism]]] = field(repr=False)
    hom_order: list[int] = field(repr=False)

    def __len__(self):
        return len(self.indecs)

    @property
    def roots(self) -> list[tuple[int, ...]]:
        return [x.dims for x in self.indecs]

    def index_of_root(self, root) -> int:
        return self.roots.index(tuple(root))

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "p": self.p,
            "indecomposables": [{"root": list(x.dims), "mats": x.to_json()["mats"]} for x in self.indecs],
            "homTable": self.hom_table,
            "extTable": self.ext_table,
        }


def build_census(q: Quiver, p: int = 2) -> Census:
    if not ef.is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    validate(q)
    roots = positive_roots(q)
    indecs = [build_indec(q, r, p) for r in roots]
    k = len(indecs)
    bases = [[hom_basis(x, y) for y in indecs] for x in indecs]
    hom = [[len(bases[i][j]) for j in range(k)] for i in range(k)]
    ext = [[hom[i][j] - euler_form(q, roots[i], roots[j]) for j in range(k)] for i in range(k)]
    for i in range(k):
        if hom[i][i] != 1 or ext[i][i] != 0:
            raise CensusError(f"indecomposable {roots[i]} is not an exceptional brick")
        for j in range(k):
            if ext[i][j] < 0:
                raise CensusError(f"negative Ext between {roots[i]} and {roots[j]}")
    ts = TopologicalSorter({j: [i for i in range(k) if i != j and hom[i][j]] for j in range(k)})
    try:
        order = list(ts.static_order())
    except CycleError as exc:
        raise CensusError(f"Hom relation between indecomposables has a cycle: {exc.args[1]}") from None
    return Census(q, p, indecs, hom, ext, bases, order)


def decompose(m: Representation, c: Census) -> Counter:
    """Multiplicities of census indecomposables in ``m``.

    Solves ``dim Hom(X_a, m) = sum_b mult_b dim Hom(X_a, X_b)``.  In the
    topological order of the Hom relation that system is unitriangular, so
    back substitution over the integers is exact.
    """
    if m.quiver != c.quiver or m.p != c.p:
        raise DecompositionError("representation does not match the census quiver/field")
    if m.is_zero():
        return Counter()
    h = [hom_dim(x, m) for x in c.indecs]
    mult = [0] * len(c)
    # every j with hom[i][j] != 0 comes after i in hom_order
    for i in reversed(c.hom_order):
        mult[i] = h[i] - sum(c.hom_table[i][j] * mult[j] for j in range(len(c)) if j != i)
        if mult[i] < 0:
            raise DecompositionError(f"negative multiplicity for {c.indecs[i].dims} in {m.dims}")
    total = [sum(mult[i] * c.indecs[i].dims[v] for i in range(len(c))) for v in range(c.quiver.n)]
    if tuple(total) != m.dims:
        raise DecompositionError(f"multiplicities {mult} do not add up to {m.dims}")
    return Counter({i: k for i, k in enumerate(mult) if k})


def summands(m: Representation, c: Census) -> frozenset[int]:
    return frozenset(decompose(m, c))


def as_indecomposable(m: Representation, c: Census) -> int:
    """Census index of ``m``; raises if ``m`` is zero or decomposable."""
    d = decompose(m, c)
    if sum(d.values()) != 1:
        raise DecompositionError(f"expected an indecomposable, got multiplicities {dict(d)}")
    return next(iter(d))


def ext_coker_table(c: Census) -> list[list[int]]:
    return [[ext_dim_coker(x, y) for y in c.indecs] for x in c.indecs]
