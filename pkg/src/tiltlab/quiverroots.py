"""Quivers, the Euler form, Dynkin recognition and positive roots.

Vertices are 0-based internally.  The JSON form uses 1-based vertices:
``{"vertices": n, "arrows": [[s, t], ...]}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

# largest coefficient of the highest root, per simply-laced type
MAX_ROOT_COEFF = {"A": 1, "D": 2, "E6": 3, "E7": 4, "E8": 6}


class InvalidQuiverError(ValueError):
    """Raised for input the engine refuses; ``diagnostic`` is JSON-ready."""

    def __init__(self, error: str, witness=None):
        super().__init__(f"{error}: {witness!r}")
        self.diagnostic = {"error": error, "witness": witness}


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        if self.n < 0:
            raise InvalidQuiverError("negative vertex count", self.n)
        for a, (s, t) in enumerate(self.arrows):
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise InvalidQuiverError("arrow endpoint out of range", [s + 1, t + 1])

    @classmethod
    def from_json(cls, data) -> "Quiver":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise InvalidQuiverError("malformed JSON", str(exc)) from None
        try:
            n = int(data["vertices"])
            arrows = [(int(s) - 1, int(t) - 1) for s, t in data["arrows"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidQuiverError("malformed quiver", str(exc)) from None
        return cls(n, tuple(arrows))

    def to_json(self) -> dict:
        return {"vertices": self.n, "arrows": [[s + 1, t + 1] for s, t in self.arrows]}

    def opposite(self) -> "Quiver":
        return Quiver(self.n, tuple((t, s) for s, t in self.arrows))

    def reflected(self, v: int) -> "Quiver":
        """Reverse every arrow at ``v``, keeping arrow indices."""
        return Quiver(self.n, tuple((t, s) if v in (s, t) else (s, t) for s, t in self.arrows))

    def arrows_into(self, v: int) -> list[int]:
        return [a for a, (_, t) in enumerate(self.arrows) if t == v]

    def arrows_out_of(self, v: int) -> list[int]:
        return [a for a, (s, _) in enumerate(self.arrows) if s == v]

    def is_sink(self, v: int) -> bool:
        return not self.arrows_out_of(v)

    def is_source(self, v: int) -> bool:
        return not self.arrows_into(v)

    def sinks(self) -> list[int]:
        return [v for v in range(self.n) if self.is_sink(v)]

    def neighbours(self, v: int) -> set[int]:
        return {t for s, t in self.arrows if s == v} | {s for s, t in self.arrows if t == v}

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for v in range(self.n):
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.neighbours(u):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def paths(self, i: int, j: int) -> list[tuple[int, ...]]:
        """All paths from ``i`` to ``j`` as tuples of arrow indices."""
        if i == j:
            return [()]
        out = []
        for a in self.arrows_out_of(i):
            out.extend((a,) + rest for rest in self.paths(self.arrows[a][1], j))
        return out

    def restricted(self, verts) -> "Quiver":
        """Full subquiver on ``verts``, vertex numbering kept (others isolated)."""
        vs = set(verts)
        return Quiver(self.n, tuple((s, t) for s, t in self.arrows if s in vs and t in vs))


def _find_cycle(q: Quiver) -> list[int] | None:
    colour = [0] * q.n
    parent = [-1] * q.n

    def dfs(u):
        colour[u] = 1
        for a in q.arrows_out_of(u):
            w = q.arrows[a][1]
            if colour[w] == 1:
                cyc, x = [w], u
                while x != w:
                    cyc.append(x)
                    x = parent[x]
                return cyc[::-1]
            if colour[w] == 0:
                parent[w] = u
                found = dfs(w)
                if found:
                    return found
        colour[u] = 2
        return None

    for v in range(q.n):
        if colour[v] == 0:
            cyc = dfs(v)
            if cyc:
                return cyc
    return None


def dynkin_type(q: Quiver, comp: Sequence[int]) -> str | None:
    """Type label (``"A3"``, ``"D5"``, ``"E6"``...) of a connected component, or None."""
    k = len(comp)
    cs = set(comp)
    edges = [(s, t) for s, t in q.arrows if s in cs]
    if len({frozenset(e) for e in edges}) != len(edges) or len(edges) != k - 1:
        return None  # multiple edges or not a tree
    deg = {v: len(q.neighbours(v)) for v in comp}
    branch = [v for v in comp if deg[v] >= 3]
    if not branch:
        return f"A{k}"
    if len(branch) > 1 or deg[branch[0]] > 3:
        return None
    c = branch[0]
    arms = []
    for start in q.neighbours(c):
        length, prev, cur = 1, c, start
        while True:
            nxt = [w for w in q.neighbours(cur) if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length + 1)  # count the branch vertex
    a, b, cc = sorted(arms)
    if a == 2 and b == 2:
        return f"D{k}"
    if (a, b) == (2, 3) and cc in (3, 4, 5):
        return f"E{k}"
    return None


def validate(q: Quiver) -> None:
    """Raise :class:`InvalidQuiverError` unless ``q`` is an acyclic Dynkin quiver."""
    for s, t in q.arrows:
        if s == t:
            raise InvalidQuiverError("loop", [s + 1])
    cyc = _find_cycle(q)
    if cyc:
        raise InvalidQuiverError("cycle", [v + 1 for v in cyc])
    for comp in q.components():
        if dynkin_type(q, comp) is None:
            raise InvalidQuiverError("non-Dynkin underlying graph", [v + 1 for v in comp])


def diagnose(q: Quiver) -> dict | None:
    try:
        validate(q)
    except InvalidQuiverError as exc:
        return exc.diagnostic
    return None


def euler_form(q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    if len(d) != q.n or len(e) != q.n:
        raise ValueError(f"dimension vectors must have length {q.n}")
    return sum(x * y for x, y in zip(d, e)) - sum(d[s] * e[t] for s, t in q.arrows)


def tits_form(q: Quiver, d: Sequence[int]) -> int:
    return euler_form(q, d, d)


def positive_roots(q: Quiver) -> list[tuple[int, ...]]:
    """Positive roots, sorted by (total, vector); orientation plays no role."""
    validate(q)
    roots = []
    for comp in q.components():
        label = dynkin_type(q, comp)
        bound = MAX_ROOT_COEFF.get(label, MAX_ROOT_COEFF.get(label[0]))
        k = len(comp)
        # adjacency restricted to the component, in local coordinates
        loc = {v: i for i, v in enumerate(comp)}
        edges = [(loc[s], loc[t]) for s, t in q.arrows if s in loc]
        # vectorise over the trailing coordinates, loop over the first one
        tail = np.indices((bound + 1,) * (k - 1)).reshape(k - 1, -1).T if k > 1 else np.zeros((1, 0), int)
        for head in range(bound + 1):
            cand = np.hstack([np.full((tail.shape[0], 1), head), tail])
            quad = (cand * cand).sum(axis=1)
            for s, t in edges:
                quad -= cand[:, s] * cand[:, t]
            for row in cand[(quad == 1) & (cand.sum(axis=1) > 0)]:
                d = [0] * q.n
                for i, v in enumerate(comp):
                    d[v] = int(row[i])
                roots.append(tuple(d))
    return sorted(roots, key=lambda r: (sum(r), r))


def root_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def root_poset_antichains(roots: Sequence[Sequence[int]], listing: bool = False):
    """Count (or list) antichains of the root poset, the empty one included."""
    roots = [tuple(r) for r in roots]
    m = len(roots)
    incomparable = [
        [i != j and not root_leq(roots[i], roots[j]) and not root_leq(roots[j], roots[i]) for j in range(m)]
        for i in range(m)
    ]
    found: list[tuple[int, ...]] = []

    def extend(chosen: list[int], start: int):
        found.append(tuple(chosen))
        for j in range(start, m):
            if all(incomparable[i][j] for i in chosen):
                chosen.append(j)
                extend(chosen, j + 1)
                chosen.pop()

    extend([], 0)
    if listing:
        return [frozenset(roots[i] for i in a) for a in found]
    return len(found)


# -- built-in families ---------------------------------------------------------

def diagram_edges(kind: str, n: int) -> list[tuple[int, int]]:
    """Undirected edges of the standard labelling of A_n, D_n, E_n (0-based)."""
    if kind == "A" and n >= 1:
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D" and n >= 4:
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E" and n in (6, 7, 8):
        return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    raise InvalidQuiverError("unknown family", f"{kind}{n}")


def family_quiver(tag: str) -> Quiver:
    """Expand a tag like ``"A3"`` or ``"D4:><>"``.

    The orientation string has one character per diagram edge (in
    :func:`diagram_edges` order); ``>`` keeps the edge direction, ``<`` flips
    it.  It defaults to all ``>``.
    """
    name, _, orient = tag.partition(":")
    if len(name) < 2 or name[0].upper() not in "ADE" or not name[1:].isdigit():
        raise InvalidQuiverError("unknown family", tag)
    kind, n = name[0].upper(), int(name[1:])
    edges = diagram_edges(kind, n)
    orient = orient or ">" * len(edges)
    if len(orient) != len(edges) or set(orient) - {"<", ">"}:
        raise InvalidQuiverError("bad orientation string", tag)
    return Quiver(n, tuple(e if c == ">" else (e[1], e[0]) for e, c in zip(edges, orient)))


def orientations(name: str) -> list[str]:
    """All family tags with explicit orientation for a diagram name like ``"A3"``."""
    edges = diagram_edges(name[0].upper(), int(name[1:]))
    return [f"{name}:{''.join(o)}" for o in product("><", repeat=len(edges))]
