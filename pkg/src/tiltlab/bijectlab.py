"""The seven sets attached to a Dynkin path algebra and the maps between them.

Classes of modules (multiplicity-free, i.e. up to Morita equivalence) and
subcategories (via their indecomposable objects) are both ``frozenset``s of
census indices.  The numbered sets are

1. exceptional antichains
2. thick subcategories (with cover)
3. normal modules without self-extensions
4. support-tilting modules
5. torsion classes (with cover)
6. conormal modules without self-extensions
7. torsionfree classes (with cocover)

Sets 3 and 6 are enumerated by a direct subset scan, independently of the
maps that are later checked against them.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from graphlib import CycleError, TopologicalSorter
from typing import Iterable

import numpy as np

from . import exactfield as ef
from .census import Census, as_indecomposable, build_census, summands
from .quiverroots import Quiver, positive_roots, root_poset_antichains
from .repcore import (
    Representation,
    ShortExactSeq,
    cokernel,
    direct_sum,
    dual,
    ext_cocycle_basis,
    ext_dim,
    extension,
    hom_basis,
    hom_elements,
    injective,
    kernel,
    stacked_morphism,
    zero_rep,
)

log = logging.getLogger(__name__)

ModuleClass = frozenset
SET_NAMES = {
    1: "antichains",
    2: "thick",
    3: "normal",
    4: "support-tilting",
    5: "torsion",
    6: "conormal",
    7: "torsionfree",
}


class BijectionError(RuntimeError):
    """An internal consistency check failed; carries the offending data."""


def _key(s: frozenset) -> tuple:
    return (len(s), tuple(sorted(s)))


def _ordered(sets: Iterable[frozenset]) -> list[frozenset]:
    return sorted(set(sets), key=_key)


# -- support -------------------------------------------------------------------

def support(c: Census, mc: Iterable[int]) -> frozenset[int]:
    """Vertices where some member has a nonzero space (0-based)."""
    return frozenset(v for i in mc for v, d in enumerate(c.indecs[i].dims) if d)


def support_rank(c: Census, mc: Iterable[int]) -> int:
    return len(support(c, mc))


def is_sincere(c: Census, mc: Iterable[int]) -> bool:
    return support_rank(c, mc) == c.quiver.n


# -- generation ----------------------------------------------------------------

def _bases_into(c: Census, x: Iterable[int], y) -> list:
    if isinstance(y, (int, np.integer)):
        return [f for i in x for f in c.hom_bases[i][y]]
    return [f for i in x for f in hom_basis(c.indecs[i], y)]


def _bases_from(c: Census, y, x: Iterable[int]) -> list:
    if isinstance(y, (int, np.integer)):
        return [f for i in x for f in c.hom_bases[y][i]]
    return [f for i in x for f in hom_basis(y, c.indecs[i])]


def _onto(maps: list, y: Representation, p: int) -> bool:
    return all(
        y.dims[v] == 0 or (bool(maps) and ef.rank(np.hstack([f.comps[v] for f in maps]), p) == y.dims[v])
        for v in range(y.quiver.n)
    )


def _into(maps: list, y: Representation, p: int) -> bool:
    return all(
        y.dims[v] == 0 or (bool(maps) and ef.rank(np.vstack([f.comps[v] for f in maps]), p) == y.dims[v])
        for v in range(y.quiver.n)
    )


def generates(c: Census, x: Iterable[int], y) -> bool:
    """Is ``y`` (census index or representation) a quotient of a sum of copies of ``x``?

    Checks that the evaluation map from ``X^Hom(X, y)`` is onto at every vertex.
    """
    if isinstance(y, (int, np.integer)):
        return _generates_index(c, frozenset(x), int(y))
    return _onto(_bases_into(c, x, y), y, c.p)


@lru_cache(maxsize=1 << 16)
def _generates_index(c: Census, x: frozenset, y: int) -> bool:
    return _onto(_bases_into(c, x, y), c.indecs[y], c.p)


def cogenerates(c: Census, x: Iterable[int], y) -> bool:
    """Is ``y`` a submodule of a sum of copies of ``x``?  (Coevaluation is injective.)"""
    if isinstance(y, (int, np.integer)):
        return _cogenerates_index(c, frozenset(x), int(y))
    return _into(_bases_from(c, y, x), y, c.p)


@lru_cache(maxsize=1 << 16)
def _cogenerates_index(c: Census, x: frozenset, y: int) -> bool:
    return _into(_bases_from(c, y, x), c.indecs[y], c.p)


def gen_class(c: Census, t: Iterable[int]) -> frozenset[int]:
    t = frozenset(t)
    return frozenset(y for y in range(len(c)) if generates(c, t, y))


def cogen_class(c: Census, t: Iterable[int]) -> frozenset[int]:
    t = frozenset(t)
    return frozenset(y for y in range(len(c)) if cogenerates(c, t, y))


# -- antichains ----------------------------------------------------------------

def _cliques(k: int, compatible) -> list[frozenset]:
    """All sets of pairwise compatible indices in ``range(k)`` (empty set included)."""
    out: list[frozenset] = []

    def grow(chosen: list[int], start: int):
        out.append(frozenset(chosen))
        for j in range(start, k):
            if all(compatible(i, j) for i in chosen):
                chosen.append(j)
                grow(chosen, j + 1)
                chosen.pop()

    grow([], 0)
    return _ordered(out)


def is_antichain(c: Census, a: Iterable[int]) -> bool:
    a = list(a)
    return all(c.hom_table[i][i] == 1 for i in a) and all(
        c.hom_table[i][j] == 0 for i in a for j in a if i != j
    )


def antichains(c: Census) -> list[frozenset[int]]:
    """Every set of pairwise Hom-orthogonal bricks."""
    h = c.hom_table
    bricks = [i for i in range(len(c)) if h[i][i] == 1]
    found = _cliques(len(bricks), lambda i, j: h[bricks[i]][bricks[j]] == 0 and h[bricks[j]][bricks[i]] == 0)
    return _ordered(frozenset(bricks[i] for i in s) for s in found)


def is_exceptional(c: Census, a: Iterable[int]) -> bool:
    """Is the Ext-quiver (edge i -> j when Ext(i, j) != 0) acyclic?"""
    a = list(a)
    graph = {j: [i for i in a if i != j and c.ext_table[i][j]] for j in a}
    if any(c.ext_table[i][i] for i in a):
        return False
    try:
        tuple(TopologicalSorter(graph).static_order())
    except CycleError:
        return False
    return True


# -- thick subcategories -------------------------------------------------------

@lru_cache(maxsize=1 << 14)
def _mono_cokernels(c: Census, i: int, j: int) -> tuple[frozenset, ...]:
    """Summand sets of the cokernels of all monomorphisms ``X_i -> X_j``."""
    found = set()
    for f in hom_elements(c.hom_bases[i][j]):
        if f.is_injective():
            found.add(summands(cokernel(f)[0], c))
    return tuple(_ordered(found))


def filt_closure(c: Census, a: Iterable[int]) -> frozenset[int]:
    """Indecomposables admitting a filtration with factors in ``a``.

    ``M`` qualifies when it lies in ``a`` or some ``A -> M`` in ``a`` is a
    monomorphism whose cokernel has all summands already qualified.
    Cokernels are smaller, so one pass in order of total dimension suffices.
    """
    a = frozenset(a)
    if not is_exceptional(c, a):
        log.warning("filt_closure called on a non-exceptional antichain %s", sorted(a))
    closure: set[int] = set()
    for m in sorted(range(len(c)), key=lambda k: c.indecs[k].total_dim):
        if m in a:
            closure.add(m)
            continue
        if any(opt <= closure for ai in a for opt in _mono_cokernels(c, ai, m)):
            closure.add(m)
    return frozenset(closure)


@lru_cache(maxsize=1 << 14)
def _maps_all_onto(c: Census, y: int, x: int) -> bool:
    return all(f.is_surjective() for f in hom_elements(c.hom_bases[y][x]))


def simples_of_thick(c: Census, s: Iterable[int]) -> frozenset[int]:
    """Objects of ``s`` all of whose nonzero maps from ``s`` are onto."""
    s = frozenset(s)
    return frozenset(x for x in s if all(_maps_all_onto(c, y, x) for y in s))


def projective_generator(c: Census, s: Iterable[int]) -> frozenset[int]:
    """Ext-projective objects of a thick subcategory (its projectives)."""
    s = frozenset(s)
    proj = frozenset(x for x in s if all(c.ext_table[x][m] == 0 for m in s))
    if len(proj) != len(simples_of_thick(c, s)):
        raise BijectionError(f"thick {sorted(s)}: {len(proj)} projectives vs {len(simples_of_thick(c, s))} simples")
    return proj


def injective_cogenerator_of(c: Census, s: Iterable[int]) -> frozenset[int]:
    """Ext-injective objects of a thick subcategory (its injectives)."""
    s = frozenset(s)
    inj = frozenset(x for x in s if all(c.ext_table[m][x] == 0 for m in s))
    if len(inj) != len(simples_of_thick(c, s)):
        raise BijectionError(f"thick {sorted(s)}: {len(inj)} injectives vs {len(simples_of_thick(c, s))} simples")
    return inj


@lru_cache(maxsize=1 << 12)
def presentation_closure(c: Census, pgen: frozenset) -> frozenset[int]:
    """Indecomposables that are cokernels of maps inside ``add pgen``.

    For ``pgen`` without self-extensions over a hereditary algebra, ``X`` is
    such a cokernel iff the evaluation map ``E -> X`` from ``add pgen`` is
    onto with kernel generated by ``pgen``.  The composite ``E' -> K -> E``
    is then an explicit presentation, and its cokernel is checked to be ``X``.
    """
    pgen = frozenset(pgen)
    if not pgen:
        return frozenset()
    out = set()
    for x in range(len(c)):
        maps = _bases_into(c, pgen, x)
        if not maps:
            continue
        ev = stacked_morphism(maps, c.indecs[x])
        if not ev.is_surjective():
            continue
        k, inc = kernel(ev)
        if not generates(c, pgen, k):
            continue
        cover = stacked_morphism(_bases_into(c, pgen, k), k) if not k.is_zero() else None
        pres = inc.compose(cover) if cover is not None else inc
        if as_indecomposable(cokernel(pres)[0], c) != x:
            raise BijectionError(f"presentation of {c.indecs[x].dims} has the wrong cokernel")
        out.add(x)
    return frozenset(out)


# -- normal modules ------------------------------------------------------------

def is_self_orthogonal(c: Census, mc: Iterable[int]) -> bool:
    mc = list(mc)
    return all(c.ext_table[i][j] == 0 for i in mc for j in mc)


def is_normal(c: Census, mc: Iterable[int]) -> bool:
    mc = frozenset(mc)
    return not any(generates(c, mc - {x}, x) for x in mc)


def is_conormal(c: Census, mc: Iterable[int]) -> bool:
    mc = frozenset(mc)
    return not any(cogenerates(c, mc - {x}, x) for x in mc)


def normalization(c: Census, mc: Iterable[int], order: Iterable[int] | None = None) -> frozenset[int]:
    """Drop members generated by the rest until none is (lowest index first by default)."""
    cur = set(mc)
    order = list(order) if order is not None else sorted(cur)
    changed = True
    while changed:
        changed = False
        for x in order:
            if x in cur and generates(c, frozenset(cur - {x}), x):
                cur.discard(x)
                changed = True
                break
    return frozenset(cur)


def delta_antichain(c: Census, n: Iterable[int]) -> frozenset[int]:
    """Cokernels of the trace of ``n - {N_i}`` in each ``N_i``."""
    n = frozenset(n)
    if not is_self_orthogonal(c, n):
        raise BijectionError(f"{sorted(n)} has self-extensions")
    out = []
    for i in sorted(n):
        ev = stacked_morphism(_bases_into(c, n - {i}, i), c.indecs[i])
        cok = cokernel(ev)[0]
        try:
            out.append(as_indecomposable(cok, c))
        except Exception as exc:
            raise BijectionError(f"cokernel of the trace in {c.indecs[i].dims} is not indecomposable: {exc}") from None
    delta = frozenset(out)
    if len(delta) != len(n) or not is_antichain(c, delta) or not is_exceptional(c, delta):
        raise BijectionError(f"{sorted(n)} gave {sorted(delta)}, not an exceptional antichain of the same size")
    return delta


# -- support-tilting -----------------------------------------------------------

def self_orthogonal_sets(c: Census) -> list[frozenset[int]]:
    e = c.ext_table
    return _cliques(len(c), lambda i, j: e[i][j] == 0 and e[j][i] == 0)


def is_support_tilting(c: Census, mc: Iterable[int]) -> bool:
    mc = frozenset(mc)
    return is_self_orthogonal(c, mc) and len(mc) == support_rank(c, mc)


def support_tilting_census(c: Census) -> list[frozenset[int]]:
    return [s for s in self_orthogonal_sets(c) if len(s) == support_rank(c, s)]


def _lift(q: Quiver, sub: Quiver, m: Representation) -> Representation:
    """A representation of a restricted subquiver, viewed on the full quiver."""
    where = {arrow: k for k, arrow in enumerate(sub.arrows)}
    mats = [
        m.mats[where[(s, t)]] if (s, t) in where else ef.zeros(m.dims[t], m.dims[s]) for s, t in q.arrows
    ]
    return Representation(q, m.dims, mats, m.p)


def injective_cogenerator(c: Census, verts: Iterable[int]) -> frozenset[int]:
    """Indecomposable injectives of the support algebra on ``verts``."""
    verts = sorted(set(verts))
    sub = c.quiver.restricted(verts)
    return frozenset(as_indecomposable(_lift(c.quiver, sub, injective(sub, v, c.p)), c) for v in verts)


def universal_foundation(c: Census, n: Iterable[int]) -> tuple[Representation, ShortExactSeq]:
    """Extension ``0 -> N^r -> Y -> Z -> 0`` built from a basis of Ext(Z, N).

    ``Z`` is the injective cogenerator of the support algebra of ``N``.  The
    cocycle of ``Y`` stacks the ``r`` basis cocycles, i.e. the pullback of
    their direct sum along the diagonal ``Z -> Z^r``.
    """
    n = frozenset(n)
    q, p = c.quiver, c.p
    if not is_self_orthogonal(c, n):
        raise BijectionError(f"{sorted(n)} has self-extensions")
    if not n:
        z = zero_rep(q, p)
        seq = extension(z, z, [ef.zeros(0, 0) for _ in q.arrows])
        return seq.middle, seq
    nrep = direct_sum(*(c.indecs[i] for i in sorted(n)))
    zrep = direct_sum(*(c.indecs[i] for i in sorted(injective_cogenerator(c, support(c, n)))))
    basis = ext_cocycle_basis(zrep, nrep)
    r = len(basis)
    big_n = direct_sum(*([nrep] * r)) if r else zero_rep(q, p)
    cocycle = [
        np.vstack([phi[a] for phi in basis]) if r else ef.zeros(0, zrep.dims[i])
        for a, (i, _) in enumerate(q.arrows)
    ]
    seq = extension(zrep, big_n, cocycle)
    y = seq.middle
    if not seq.is_exact():
        raise BijectionError("universal foundation sequence is not exact")
    if ext_dim(y, nrep) != 0:
        raise BijectionError(f"Ext(Y, N) != 0 for N = {sorted(n)}")
    if not generates(c, n, y):
        raise BijectionError(f"Y is not generated by N = {sorted(n)}")
    return y, seq


@lru_cache(maxsize=1 << 12)
def _factor_complement(c: Census, n: frozenset) -> frozenset:
    y, _ = universal_foundation(c, n)
    t = n | summands(y, c)
    if len(t) != support_rank(c, n) or not is_support_tilting(c, t):
        raise BijectionError(f"N = {sorted(n)} completed to {sorted(t)}, not support-tilting")
    return t


def factor_complement(c: Census, n: Iterable[int]) -> frozenset[int]:
    """``N`` together with the indecomposable summands of its universal foundation."""
    return _factor_complement(c, frozenset(n))


def minimal_factor_complement(c: Census, n: Iterable[int]) -> frozenset[int]:
    n = frozenset(n)
    return factor_complement(c, n) - n


def ext_projectives(c: Census, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    return frozenset(x for x in s if all(c.ext_table[x][m] == 0 for m in s))


# -- duality -------------------------------------------------------------------

def opposite_census(c: Census) -> Census:
    return _opposite_census(c)


@lru_cache(maxsize=64)
def _opposite_census(c: Census) -> Census:
    return build_census(c.quiver.opposite(), c.p)


def dual_index_map(c_from: Census, c_to: Census) -> list[int]:
    """Census index in ``c_to`` of the dual of each indecomposable of ``c_from``."""
    if c_from.quiver.opposite() != c_to.quiver:
        raise ValueError("censuses are not over opposite quivers")
    return [as_indecomposable(dual(x), c_to) for x in c_from.indecs]


# -- the seven sets ------------------------------------------------------------

def enumerate_set(c: Census, which: int, c_op: Census | None = None) -> list[frozenset[int]]:
    if which == 1:
        return [a for a in antichains(c) if is_exceptional(c, a)]
    if which == 2:
        return _ordered(filt_closure(c, a) for a in enumerate_set(c, 1))
    if which == 3:
        return [s for s in self_orthogonal_sets(c) if is_normal(c, s)]
    if which == 4:
        return support_tilting_census(c)
    if which == 5:
        return _ordered(gen_class(c, t) for t in support_tilting_census(c))
    if which == 6:
        return [s for s in self_orthogonal_sets(c) if is_conormal(c, s)]
    if which == 7:
        c_op = c_op or opposite_census(c)
        back = dual_index_map(c_op, c)
        return _ordered(
            frozenset(back[i] for i in gen_class(c_op, t)) for t in support_tilting_census(c_op)
        )
    raise ValueError(f"unknown set number {which}")


def all_sets(c: Census, c_op: Census | None = None) -> dict[int, list[frozenset[int]]]:
    c_op = c_op or opposite_census(c)
    return {k: enumerate_set(c, k, c_op) for k in range(1, 8)}


# -- verification --------------------------------------------------------------

class _Checks:
    def __init__(self):
        self.items: list[dict] = []

    def record(self, name: str, failures: list):
        entry = {"name": name, "pass": not failures}
        if failures:
            entry["witness"] = failures[:5]
        self.items.append(entry)

    @property
    def passed(self) -> bool:
        return all(x["pass"] for x in self.items)


def _l(s: Iterable[int]) -> list[int]:
    return sorted(int(i) for i in s)


def correspondence(c: Census, a: frozenset, c_op: Census) -> dict[str, frozenset]:
    """Images of one exceptional antichain in all seven sets."""
    to_op = dual_index_map(c, c_op)
    back = dual_index_map(c_op, c)
    thick = filt_closure(c, a)
    proj = projective_generator(c, thick)
    tilt = factor_complement(c, proj)
    a_op = frozenset(to_op[i] for i in a)
    tilt_op = factor_complement(c_op, projective_generator(c_op, filt_closure(c_op, a_op)))
    return {
        "antichain": a,
        "thick": thick,
        "normal": proj,
        "support-tilting": tilt,
        "torsion": gen_class(c, tilt),
        "conormal": injective_cogenerator_of(c, thick),
        "torsionfree": frozenset(back[i] for i in gen_class(c_op, tilt_op)),
    }


def verify_bijections(c: Census, c_op: Census | None = None, oracle: bool = False, max_dim: int = 8) -> dict:
    """Run every count, roundtrip, support and supplement check; return a JSON-ready report."""
    c_op = c_op or opposite_census(c)
    sets = all_sets(c, c_op)
    sets_op = all_sets(c_op, c)
    back = dual_index_map(c_op, c)
    checks = _Checks()

    counts = {f"set{k}": len(v) for k, v in sets.items()}
    checks.record("seven counts equal", [] if len(set(counts.values())) == 1 else [counts])

    checks.record(
        "simples_of_thick . filt_closure = id on (1)",
        [_l(a) for a in sets[1] if simples_of_thick(c, filt_closure(c, a)) != a],
    )
    checks.record(
        "presentation_closure . projective_generator = id on (2)",
        [_l(s) for s in sets[2] if presentation_closure(c, projective_generator(c, s)) != s],
    )
    checks.record(
        "projective_generator maps (2) onto (3)",
        [] if _ordered(projective_generator(c, s) for s in sets[2]) == sets[3] else ["image differs from (3)"],
    )
    checks.record(
        "normalization . factor_complement = id on (3)",
        [_l(n) for n in sets[3] if normalization(c, factor_complement(c, n)) != n],
    )
    checks.record(
        "factor_complement . normalization = id on (4)",
        [_l(t) for t in sets[4] if factor_complement(c, normalization(c, t)) != t],
    )
    checks.record(
        "ext_projectives . gen_class = id on (4)",
        [_l(t) for t in sets[4] if ext_projectives(c, gen_class(c, t)) != t],
    )
    checks.record(
        "delta_antichain = simples_of_thick . presentation_closure on (3)",
        [_l(n) for n in sets[3] if delta_antichain(c, n) != simples_of_thick(c, presentation_closure(c, n))],
    )
    checks.record(
        "filt_closure . delta_antichain = presentation_closure on (3)",
        [_l(n) for n in sets[3] if filt_closure(c, delta_antichain(c, n)) != presentation_closure(c, n)],
    )
    checks.record(
        "dual of (3) over the opposite quiver = (6)",
        [] if _ordered(frozenset(back[i] for i in n) for n in sets_op[3]) == sets[6] else ["mismatch"],
    )
    checks.record(
        "dual of (5) over the opposite quiver = (7)",
        [] if _ordered(frozenset(back[i] for i in s) for s in sets_op[5]) == sets[7] else ["mismatch"],
    )
    checks.record(
        "cogen_class of dual support-tilting = (7)",
        [] if _ordered(cogen_class(c, frozenset(back[i] for i in t)) for t in sets_op[4]) == sets[7] else ["mismatch"],
    )
    checks.record(
        "dual of (1), (2), (4) over the opposite quiver are (1), (2), (4)",
        [
            k
            for k in (1, 2, 4)
            if _ordered(frozenset(back[i] for i in s) for s in sets_op[k]) != sets[k]
        ],
    )

    # one full correspondence per antichain; images must hit each set exactly once
    names = ["antichain", "thick", "normal", "support-tilting", "torsion", "conormal", "torsionfree"]
    chains = [correspondence(c, a, c_op) for a in sets[1]]
    for k, name in enumerate(names, start=1):
        images = [ch[name] for ch in chains]
        ok = len(set(images)) == len(images) and _ordered(images) == sets[k]
        checks.record(f"antichain -> {name} is a bijection onto ({k})", [] if ok else [name])
    support_fail = []
    for ch in chains:
        sups = {name: support(c, s) for name, s in ch.items()}
        if len(set(sups.values())) != 1:
            support_fail.append({name: [v + 1 for v in sorted(s)] for name, s in sups.items()})
    checks.record("support preserved along the correspondence", support_fail)
    checks.record(
        "conormal image = dual of projective generator over the opposite quiver",
        [
            _l(ch["antichain"])
            for ch in chains
            if ch["conormal"]
            != frozenset(
                back[i]
                for i in projective_generator(
                    c_op, filt_closure(c_op, frozenset(dual_index_map(c, c_op)[j] for j in ch["antichain"]))
                )
            )
        ],
    )

    all_anti = antichains(c)
    supplements = {
        "antichains": len(all_anti),
        "all_antichains_exceptional": all(is_exceptional(c, a) for a in all_anti),
        "thick_have_cover": all(all(generates(c, projective_generator(c, s), x) for x in s) for s in sets[2]),
        "torsion_have_cover": all(
            all(generates(c, ext_projectives(c, s), x) for x in s) for s in sets[5]
        ),
        "torsionfree_have_cocover": all(
            all(cogenerates(c, frozenset(x for x in s if all(c.ext_table[m][x] == 0 for m in s)), y) for y in s)
            for s in sets[7]
        ),
    }
    checks.record("supplements", [k for k, v in supplements.items() if v is False])

    sincere = {f"set{k}": sum(1 for s in v if is_sincere(c, s)) for k, v in sets.items()}
    sincere["tilting"] = sum(1 for t in sets[4] if len(t) == c.quiver.n)
    checks.record(
        "sincere counts equal",
        [] if len(set(sincere.values())) == 1 else [sincere],
    )

    rp = root_poset_antichains(positive_roots(c.quiver))
    checks.record("root poset antichains = module antichains", [] if rp == counts["set1"] else [rp])

    report = {
        "quiver": c.quiver.to_json(),
        "p": c.p,
        "roots": [list(r) for r in c.roots],
        "counts": counts,
        "root_poset_antichains": rp,
        "roundtrips": checks.items,
        "supplements": supplements,
        "sincere": sincere,
    }
    if oracle:
        from . import oracle as orc

        found, skipped = {}, {}
        runners = {
            "torsion": lambda: orc.all_torsion_classes(c, max_dim),
            "torsionfree": lambda: orc.all_torsionfree_classes(c, max_dim),
            "thick": lambda: orc.all_thick_subcategories(c),
        }
        for name, run in runners.items():
            try:
                found[name] = run()
            except orc.OracleBoundError as exc:
                skipped[name] = str(exc)
        expected = {"torsion": sets[5], "torsionfree": sets[7], "thick": sets[2]}
        for name in found:
            checks.record(
                f"oracle {name} = bijectlab",
                [] if _ordered(found[name]) == expected[name] else [[_l(s) for s in found[name]]],
            )
        covers = orc.cover_witnesses(c, found)
        checks.record("oracle classes have covers", [k for k, v in covers.items() if not v])
        report["oracle"] = {name: len(v) for name, v in found.items()} | {"covers": covers, "skipped": skipped}
    report["passed"] = checks.passed
    return report


def jsonable_sets(sets: list[frozenset[int]]) -> list[list[int]]:
    return [_l(s) for s in sets]
