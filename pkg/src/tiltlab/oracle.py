"""Brute-force classification of torsion, torsionfree and thick subcategories.

Nothing here reuses the constructive maps of :mod:`tiltlab.bijectlab`.  Each
candidate subset of indecomposables is tested directly against the closure
axioms, using explicit subrepresentations, quotients, extension middle terms
and kernels/cokernels/images of enumerated morphisms.

The raw closure data ("if these objects are in, those must be too") is
computed once per census as bitmask rules; the subset scan then only does
integer arithmetic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .census import Census, summands
from .repcore import (
    DEFAULT_SUBREP_BOUND,
    combination,
    cokernel,
    direct_sum,
    ext_cocycle_basis,
    extension,
    hom_basis,
    image,
    kernel,
    sub_reps,
)
from . import exactfield as ef

MAX_THICK_CENSUS = 12


class OracleBoundError(ValueError):
    pass


@dataclass(frozen=True)
class ClosureSpec:
    kind: str  # "torsion" | "torsionfree" | "thick"
    max_dim: int = DEFAULT_SUBREP_BOUND
    max_terms: int = 2


def _mask(idx) -> int:
    out = 0
    for i in idx:
        out |= 1 << i
    return out


def _members(mask: int, k: int) -> frozenset[int]:
    return frozenset(i for i in range(k) if mask >> i & 1)


@lru_cache(maxsize=256)
def _quotient_rules(c: Census, bound: int) -> tuple[int, ...]:
    """Per indecomposable: mask of all summands of all its quotients."""
    out = []
    for x in c.indecs:
        req = 0
        for _, inc in sub_reps(x, bound):
            req |= _mask(summands(cokernel(inc)[0], c))
        out.append(req)
    return tuple(out)


@lru_cache(maxsize=256)
def _sub_rules(c: Census, bound: int) -> tuple[int, ...]:
    """Per indecomposable: mask of all summands of all its subrepresentations."""
    out = []
    for x in c.indecs:
        req = 0
        for sub, _ in sub_reps(x, bound):
            req |= _mask(summands(sub, c))
        out.append(req)
    return tuple(out)


@lru_cache(maxsize=256)
def _extension_rules(c: Census) -> tuple[tuple[int, int], ...]:
    """(pair mask, required mask) over ordered pairs with nonzero Ext.

    Every class of Ext(X, Y) is visited (all ``p**e`` combinations of a
    cocycle basis), since middle terms vary across the Ext space.
    """
    rules = []
    k = len(c)
    for i, j in itertools.product(range(k), repeat=2):
        if c.ext_table[i][j] == 0:
            continue
        x, y = c.indecs[i], c.indecs[j]
        basis = ext_cocycle_basis(x, y)
        req = 0
        for coeffs in itertools.product(range(c.p), repeat=len(basis)):
            cocycle = [sum(int(t) * phi[a] for t, phi in zip(coeffs, basis)) % c.p for a in range(len(c.quiver.arrows))]
            req |= _mask(summands(extension(x, y, cocycle).middle, c))
        rules.append((_mask((i, j)), req))
    return tuple(rules)


def _multisets(k: int, max_terms: int):
    for size in range(1, max_terms + 1):
        yield from itertools.combinations_with_replacement(range(k), size)


@lru_cache(maxsize=64)
def _morphism_rules(c: Census, max_terms: int) -> tuple[tuple[int, int], ...]:
    """(support mask, required mask) for maps between small direct sums.

    Sources and targets range over direct sums of at most ``max_terms``
    indecomposables (so multiplicity at most ``max_terms`` per summand); every
    nonzero morphism is enumerated, up to scalars, and the summands of its
    kernel, cokernel and image are required.
    """
    rules = []
    k = len(c)
    sums = {ms: direct_sum(*(c.indecs[i] for i in ms)) for ms in _multisets(k, max_terms)}
    for src, tgt in itertools.product(sums, repeat=2):
        # some component X_i -> X_j must be nonzero, else every map is zero
        if not any(c.hom_table[i][j] for i in src for j in tgt):
            continue
        basis = hom_basis(sums[src], sums[tgt])
        req = 0
        for coeffs in ef.projective_points(len(basis), c.p):
            f = combination(basis, coeffs)
            for obj in (kernel(f)[0], cokernel(f)[0], image(f)[0]):
                req |= _mask(summands(obj, c))
        rules.append((_mask(src) | _mask(tgt), req))
    return tuple(rules)


def _scan(k: int, unary: tuple[int, ...] | None, pair_rules) -> list[frozenset[int]]:
    """All subsets closed under the given rules."""
    if pair_rules:
        supp = np.array([r[0] for r in pair_rules], dtype=np.int64)
        reqs = np.array([r[1] for r in pair_rules], dtype=np.int64)
    found = []
    for s in range(1 << k):
        if unary is not None and any(s >> i & 1 and unary[i] & ~s for i in range(k)):
            continue
        if pair_rules:
            active = (supp & ~s) == 0
            if np.any(reqs[active] & ~s):
                continue
        found.append(_members(s, k))
    return sorted(found, key=lambda m: (len(m), sorted(m)))


def _check_dims(c: Census, bound: int):
    biggest = max((x.total_dim for x in c.indecs), default=0)
    if biggest > bound:
        raise OracleBoundError(f"indecomposable of total dimension {biggest} exceeds bound {bound}")


def all_torsion_classes(c: Census, bound: int = DEFAULT_SUBREP_BOUND) -> list[frozenset[int]]:
    """Subsets closed under quotients and extensions."""
    _check_dims(c, bound)
    return _scan(len(c), _quotient_rules(c, bound), _extension_rules(c))


def all_torsionfree_classes(c: Census, bound: int = DEFAULT_SUBREP_BOUND) -> list[frozenset[int]]:
    """Subsets closed under submodules and extensions."""
    _check_dims(c, bound)
    return _scan(len(c), _sub_rules(c, bound), _extension_rules(c))


def all_thick_subcategories(c: Census, max_terms: int = 2, max_census: int = MAX_THICK_CENSUS) -> list[frozenset[int]]:
    """Subsets closed under kernels, cokernels, images and extensions."""
    if len(c) > max_census:
        raise OracleBoundError(f"census of size {len(c)} exceeds thick-oracle bound {max_census}")
    return _scan(len(c), None, _morphism_rules(c, max_terms) + _extension_rules(c))


def classify(c: Census, spec: ClosureSpec) -> list[frozenset[int]]:
    if spec.kind == "torsion":
        return all_torsion_classes(c, spec.max_dim)
    if spec.kind == "torsionfree":
        return all_torsionfree_classes(c, spec.max_dim)
    if spec.kind == "thick":
        return all_thick_subcategories(c, spec.max_terms)
    raise ValueError(f"unknown closure kind {spec.kind!r}")


def _sum_maps(c: Census, members, y: int, into: bool) -> list:
    if into:
        return [f for i in members for f in c.hom_bases[i][y]]
    return [f for i in members for f in c.hom_bases[y][i]]


def contains_cover(c: Census, members: frozenset[int], co: bool = False) -> bool:
    """Does the sum of ``members`` generate (``co``: cogenerate) every member?"""
    for y in members:
        maps = _sum_maps(c, members, y, into=not co)
        stack = np.vstack if co else np.hstack
        for v, d in enumerate(c.indecs[y].dims):
            if d and ef.rank(stack([f.comps[v] for f in maps]), c.p) != d:
                return False
    return True


def cover_witnesses(c: Census, found: dict[str, list[frozenset[int]]]) -> dict[str, bool]:
    out = {}
    for name, classes in found.items():
        out[name] = all(contains_cover(c, s, co=(name == "torsionfree")) for s in classes)
    return out
