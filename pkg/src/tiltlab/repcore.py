"""Representations of a quiver over F_p and the linear algebra around them.

Conventions: maps act on column vectors, so the matrix of an arrow
``a: i -> j`` has shape ``dims[j] x dims[i]`` and a morphism component at
vertex ``i`` has shape ``target.dims[i] x source.dims[i]``.
"""
from __future__ import annotations

from dataclasses import dataclass
import itertools
from typing import Sequence

import numpy as np

from . import exactfield as ef
from .quiverroots import Quiver, euler_form

DEFAULT_SUBREP_BOUND = 8


class RepresentationError(ValueError):
    pass


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class Representation:
    """A finite-dimensional representation; immutable once built."""

    def __init__(self, quiver: Quiver, dims: Sequence[int], mats: Sequence, p: int):
        dims = tuple(int(d) for d in dims)
        if len(dims) != quiver.n or any(d < 0 for d in dims):
            raise RepresentationError(f"bad dimension vector {dims} for {quiver.n} vertices")
        if len(mats) != len(quiver.arrows):
            raise RepresentationError(f"expected {len(quiver.arrows)} arrow matrices, got {len(mats)}")
        fixed = []
        for a, ((s, t), m) in enumerate(zip(quiver.arrows, mats)):
            arr = np.asarray(m, dtype=ef.DTYPE)
            if arr.size != dims[t] * dims[s]:
                raise RepresentationError(f"arrow {a} matrix has {arr.size} entries, expected {dims[t]}x{dims[s]}")
            arr = ef.as_mat(arr.reshape(dims[t], dims[s]), p)
            fixed.append(_frozen(arr))
        self.quiver = quiver
        self.dims = dims
        self.mats = tuple(fixed)
        self.p = p

    def __repr__(self):
        return f"Representation(dims={self.dims}, p={self.p})"

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def same_as(self, other: "Representation") -> bool:
        """Literal equality of data (not isomorphism)."""
        return (
            self.quiver == other.quiver
            and self.p == other.p
            and self.dims == other.dims
            and all(np.array_equal(x, y) for x, y in zip(self.mats, other.mats))
        )

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "mats": {str(a): m.tolist() for a, m in enumerate(self.mats)}}

    @classmethod
    def from_json(cls, quiver: Quiver, data: dict, p: int) -> "Representation":
        dims = data["dims"]
        mats = []
        for a, (s, t) in enumerate(quiver.arrows):
            m = data.get("mats", {}).get(str(a))
            mats.append(ef.zeros(dims[t], dims[s]) if m is None else np.asarray(m, dtype=ef.DTYPE).reshape(dims[t], dims[s]))
        return cls(quiver, dims, mats, p)


class Morphism:
    __slots__ = ("source", "target", "comps")

    def __init__(self, source: Representation, target: Representation, comps: Sequence, check: bool = False):
        if source.quiver != target.quiver:
            raise RepresentationError("morphism between representations of different quivers")
        p = source.p
        self.source = source
        self.target = target
        self.comps = tuple(
            _frozen(ef.as_mat(np.asarray(c, dtype=ef.DTYPE).reshape(target.dims[i], source.dims[i]), p))
            for i, c in enumerate(comps)
        )
        if check and not self.commutes():
            raise RepresentationError("commuting squares fail")

    def commutes(self) -> bool:
        p = self.source.p
        for a, (i, j) in enumerate(self.source.quiver.arrows):
            lhs = ef.matmul(self.target.mats[a], self.comps[i], p)
            rhs = ef.matmul(self.comps[j], self.source.mats[a], p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def ranks(self) -> tuple[int, ...]:
        return tuple(ef.rank(c, self.source.p) for c in self.comps)

    def is_injective(self) -> bool:
        return self.ranks() == self.source.dims

    def is_surjective(self) -> bool:
        return self.ranks() == self.target.dims

    def is_zero(self) -> bool:
        return all(not c.any() for c in self.comps)

    def compose(self, other: "Morphism") -> "Morphism":
        """``self o other``."""
        p = self.source.p
        return Morphism(other.source, self.target, [ef.matmul(f, g, p) for f, g in zip(self.comps, other.comps)])

    def __repr__(self):
        return f"Morphism({self.source.dims} -> {self.target.dims})"


@dataclass(frozen=True)
class ShortExactSeq:
    left: Representation
    middle: Representation
    right: Representation
    inj: Morphism
    surj: Morphism

    def is_exact(self) -> bool:
        p = self.middle.p
        if not (self.inj.commutes() and self.surj.commutes()):
            return False
        if not (self.inj.is_injective() and self.surj.is_surjective()):
            return False
        if any(l + r != m for l, r, m in zip(self.left.dims, self.right.dims, self.middle.dims)):
            return False
        return all(not ef.matmul(g, f, p).any() for f, g in zip(self.inj.comps, self.surj.comps))


# -- constructors --------------------------------------------------------------

def zero_rep(q: Quiver, p: int) -> Representation:
    return Representation(q, [0] * q.n, [ef.zeros(0, 0) for _ in q.arrows], p)


def simple(q: Quiver, v: int, p: int) -> Representation:
    dims = [0] * q.n
    dims[v] = 1
    return Representation(q, dims, [ef.zeros(dims[t], dims[s]) for s, t in q.arrows], p)


def direct_sum(*reps: Representation) -> Representation:
    if not reps:
        raise RepresentationError("direct_sum needs at least one summand")
    q, p = reps[0].quiver, reps[0].p
    dims = [sum(r.dims[v] for r in reps) for v in range(q.n)]
    mats = []
    for a, (s, t) in enumerate(q.arrows):
        m = ef.zeros(dims[t], dims[s])
        ro = co = 0
        for r in reps:
            m[ro : ro + r.dims[t], co : co + r.dims[s]] = r.mats[a]
            ro += r.dims[t]
            co += r.dims[s]
        mats.append(m)
    return Representation(q, dims, mats, p)


def projective(q: Quiver, v: int, p: int) -> Representation:
    """P(v): basis at ``j`` is the set of paths from ``v`` to ``j``."""
    basis = [q.paths(v, j) for j in range(q.n)]
    index = [{path: k for k, path in enumerate(b)} for b in basis]
    mats = []
    for a, (s, t) in enumerate(q.arrows):
        m = ef.zeros(len(basis[t]), len(basis[s]))
        for k, path in enumerate(basis[s]):
            m[index[t][path + (a,)], k] = 1
        mats.append(m)
    return Representation(q, [len(b) for b in basis], mats, p)


def injective(q: Quiver, v: int, p: int) -> Representation:
    """I(v), the dual of the projective at ``v`` over the opposite quiver."""
    return dual(projective(q.opposite(), v, p))


def dual(m: Representation) -> Representation:
    """Vector-space dual; a representation of the opposite quiver."""
    return Representation(m.quiver.opposite(), m.dims, [x.T for x in m.mats], m.p)


# -- Hom and Ext ---------------------------------------------------------------

def _check_pair(m: Representation, w: Representation):
    if m.quiver != w.quiver:
        raise RepresentationError("representations live on different quivers")
    if m.p != w.p:
        raise RepresentationError("representations live over different fields")


def _offsets(sizes):
    out, acc = [], 0
    for s in sizes:
        out.append(acc)
        acc += s
    return out, acc


def constraint_map(m: Representation, w: Representation) -> np.ndarray:
    """The map whose kernel is Hom(m, w) and whose cokernel is Ext(m, w).

    Domain: the direct sum over vertices of Hom_k(m_i, w_i); codomain: the sum
    over arrows ``a: i -> j`` of Hom_k(m_i, w_j); ``f -> w_a f_i - f_j m_a``.
    Blocks are column-major vectorisations.
    """
    _check_pair(m, w)
    q, p = m.quiver, m.p
    col_off, ncols = _offsets([w.dims[i] * m.dims[i] for i in range(q.n)])
    row_off, nrows = _offsets([w.dims[j] * m.dims[i] for i, j in q.arrows])
    delta = ef.zeros(nrows, ncols)
    for a, (i, j) in enumerate(q.arrows):
        r0, rn = row_off[a], w.dims[j] * m.dims[i]
        if rn == 0:
            continue
        if m.dims[i] and w.dims[i]:
            delta[r0 : r0 + rn, col_off[i] : col_off[i] + w.dims[i] * m.dims[i]] += np.kron(
                ef.identity(m.dims[i]), w.mats[a]
            )
        if m.dims[j] and w.dims[j]:
            delta[r0 : r0 + rn, col_off[j] : col_off[j] + w.dims[j] * m.dims[j]] -= np.kron(
                m.mats[a].T, ef.identity(w.dims[j])
            )
    return delta % p


def _unvec_vertices(vec: np.ndarray, m: Representation, w: Representation) -> list[np.ndarray]:
    out, off = [], 0
    for i in range(m.quiver.n):
        size = w.dims[i] * m.dims[i]
        out.append(vec[off : off + size].reshape((w.dims[i], m.dims[i]), order="F"))
        off += size
    return out


def _unvec_arrows(vec: np.ndarray, m: Representation, w: Representation) -> list[np.ndarray]:
    out, off = [], 0
    for i, j in m.quiver.arrows:
        size = w.dims[j] * m.dims[i]
        out.append(vec[off : off + size].reshape((w.dims[j], m.dims[i]), order="F"))
        off += size
    return out


def hom_basis(m: Representation, w: Representation) -> list[Morphism]:
    k = ef.kernel_basis(constraint_map(m, w), m.p)
    return [Morphism(m, w, _unvec_vertices(k[:, c], m, w)) for c in range(k.shape[1])]


def hom_dim(m: Representation, w: Representation) -> int:
    delta = constraint_map(m, w)
    return delta.shape[1] - ef.rank(delta, m.p)


def ext_dim(m: Representation, w: Representation) -> int:
    """dim Ext(m, w) from dim Hom minus the Euler form (hereditary identity)."""
    return hom_dim(m, w) - euler_form(m.quiver, m.dims, w.dims)


def ext_dim_coker(m: Representation, w: Representation) -> int:
    """dim Ext(m, w) as the cokernel dimension of :func:`constraint_map`."""
    delta = constraint_map(m, w)
    return delta.shape[0] - ef.rank(delta, m.p)


def ext_cocycle_basis(m: Representation, w: Representation) -> list[list[np.ndarray]]:
    """Cocycles (per-arrow matrices ``m_i -> w_j``) whose classes form a basis of Ext(m, w)."""
    delta = constraint_map(m, w)
    comp = ef.complement_basis(delta, m.p)
    return [_unvec_arrows(comp[:, c], m, w) for c in range(comp.shape[1])]


def coboundary(m: Representation, w: Representation, comps: Sequence[np.ndarray]) -> list[np.ndarray]:
    """The cocycle ``w_a f_i - f_j m_a`` of a family of vertex maps ``f``; it splits."""
    p = m.p
    return [
        (ef.matmul(w.mats[a], comps[i], p) - ef.matmul(comps[j], m.mats[a], p)) % p
        for a, (i, j) in enumerate(m.quiver.arrows)
    ]


def extension(m: Representation, w: Representation, cocycle: Sequence[np.ndarray]) -> ShortExactSeq:
    """The extension ``0 -> w -> E -> m -> 0`` attached to ``cocycle``."""
    _check_pair(m, w)
    q, p = m.quiver, m.p
    if len(cocycle) != len(q.arrows):
        raise RepresentationError("cocycle needs one matrix per arrow")
    dims = [w.dims[v] + m.dims[v] for v in range(q.n)]
    mats = []
    for a, (i, j) in enumerate(q.arrows):
        phi = np.asarray(cocycle[a], dtype=ef.DTYPE)
        if phi.shape != (w.dims[j], m.dims[i]):
            raise RepresentationError(f"cocycle block {a} has shape {phi.shape}, expected {(w.dims[j], m.dims[i])}")
        top = np.hstack([w.mats[a], phi])
        bottom = np.hstack([ef.zeros(m.dims[j], w.dims[i]), m.mats[a]])
        mats.append(np.vstack([top, bottom]))
    e = Representation(q, dims, mats, p)
    inj = Morphism(w, e, [np.vstack([ef.identity(w.dims[v]), ef.zeros(m.dims[v], w.dims[v])]) for v in range(q.n)])
    surj = Morphism(e, m, [np.hstack([ef.zeros(m.dims[v], w.dims[v]), ef.identity(m.dims[v])]) for v in range(q.n)])
    return ShortExactSeq(w, e, m, inj, surj)


def ext_cocycle_middle(m: Representation, w: Representation, cocycle: Sequence[np.ndarray]) -> Representation:
    return extension(m, w, cocycle).middle


# -- kernels, images, cokernels -------------------------------------------------

def _transport(basis_src: list[np.ndarray], basis_tgt: list[np.ndarray], rep: Representation) -> list[np.ndarray]:
    """Arrow matrices of the subrepresentation spanned by the given vertex bases."""
    p = rep.p
    mats = []
    for a, (i, j) in enumerate(rep.quiver.arrows):
        img = ef.matmul(rep.mats[a], basis_src[i], p)
        x = ef.solve(basis_tgt[j], img, p)
        if x is None:
            raise RepresentationError(f"subspaces not stable under arrow {a}")
        mats.append(x)
    return mats


def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    src, p = f.source, f.source.p
    bases = [ef.kernel_basis(c, p) for c in f.comps]
    k = Representation(src.quiver, [b.shape[1] for b in bases], _transport(bases, bases, src), p)
    return k, Morphism(k, src, bases)


def image(f: Morphism) -> tuple[Representation, Morphism]:
    tgt, p = f.target, f.target.p
    bases = [ef.column_basis(c, p) for c in f.comps]
    im = Representation(tgt.quiver, [b.shape[1] for b in bases], _transport(bases, bases, tgt), p)
    return im, Morphism(im, tgt, bases)


def cokernel(f: Morphism) -> tuple[Representation, Morphism]:
    tgt, p = f.target, f.target.p
    q = tgt.quiver
    projs = [ef.left_kernel_basis(c, p) for c in f.comps]
    sections = [ef.solve(pr, ef.identity(pr.shape[0]), p) for pr in projs]
    mats = [
        ef.matmul(ef.matmul(projs[j], tgt.mats[a], p), sections[i], p) for a, (i, j) in enumerate(q.arrows)
    ]
    c = Representation(q, [pr.shape[0] for pr in projs], mats, p)
    return c, Morphism(tgt, c, projs)


def inclusion_quotient(m: Representation, bases: Sequence[np.ndarray]) -> tuple[Representation, Morphism]:
    """Subrepresentation spanned by ``bases`` (one column basis per vertex)."""
    bases = [np.asarray(b, dtype=ef.DTYPE) for b in bases]
    sub = Representation(m.quiver, [b.shape[1] for b in bases], _transport(bases, bases, m), m.p)
    return sub, Morphism(sub, m, bases)


# -- maps out of / into direct sums ---------------------------------------------

def stacked_morphism(summands: Sequence[Morphism], target: Representation) -> Morphism:
    """The morphism ``(+) sources -> target`` with the given components."""
    if not summands:
        return Morphism(zero_rep(target.quiver, target.p), target, [ef.zeros(d, 0) for d in target.dims])
    src = direct_sum(*(f.source for f in summands))
    comps = [np.hstack([f.comps[v] for f in summands]) for v in range(target.quiver.n)]
    return Morphism(src, target, comps)


def costacked_morphism(source: Representation, summands: Sequence[Morphism]) -> Morphism:
    """The morphism ``source -> (+) targets`` with the given components."""
    if not summands:
        return Morphism(source, zero_rep(source.quiver, source.p), [ef.zeros(0, d) for d in source.dims])
    tgt = direct_sum(*(f.target for f in summands))
    comps = [np.vstack([f.comps[v] for f in summands]) for v in range(source.quiver.n)]
    return Morphism(source, tgt, comps)


def combination(basis: Sequence[Morphism], coeffs: Sequence[int]) -> Morphism:
    m, w, p = basis[0].source, basis[0].target, basis[0].source.p
    comps = [sum(int(c) * f.comps[v] for c, f in zip(coeffs, basis)) % p for v in range(m.quiver.n)]
    return Morphism(m, w, comps)


def hom_elements(basis: Sequence[Morphism], up_to_scalar: bool = True):
    """Nonzero elements of the span of ``basis`` (one per line if ``up_to_scalar``)."""
    if not basis:
        return
    h, p = len(basis), basis[0].source.p
    if up_to_scalar:
        coeffs = ef.projective_points(h, p)
    else:
        coeffs = (c for c in itertools.product(range(p), repeat=h) if any(c))
    for c in coeffs:
        yield combination(basis, c)


# -- subrepresentations --------------------------------------------------------

def sub_reps(m: Representation, bound: int = DEFAULT_SUBREP_BOUND) -> list[tuple[Representation, Morphism]]:
    """Every subrepresentation of ``m``, each with its inclusion."""
    if m.total_dim > bound:
        raise RepresentationError(f"total dimension {m.total_dim} exceeds sub_reps bound {bound}")
    q, p = m.quiver, m.p
    order = list(range(q.n))
    chosen: list[np.ndarray | None] = [None] * q.n
    found = []

    def stable(v: int) -> bool:
        for a, (i, j) in enumerate(q.arrows):
            if v not in (i, j) or chosen[i] is None or chosen[j] is None:
                continue
            img = ef.matmul(m.mats[a], chosen[i], p)
            if ef.rank(np.hstack([chosen[j], img]), p) != chosen[j].shape[1]:
                return False
        return True

    def place(k: int):
        if k == len(order):
            found.append(inclusion_quotient(m, list(chosen)))
            return
        v = order[k]
        for u in ef.subspaces(m.dims[v], p):
            chosen[v] = u
            if stable(v):
                place(k + 1)
        chosen[v] = None

    place(0)
    return found
