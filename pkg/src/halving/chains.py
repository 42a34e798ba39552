"""Left-to-right chain decomposition of an oriented geograph.

At every vertex the edges arriving from the West and those leaving to the
East are each sorted by slope in the direction frame and paired by rank:

* one more East edge than West edges: West k continues along East k+1 and
  the lowest East edge starts a chain here;
* one more West edge than East edges: West k continues along East k and the
  highest West edge ends a chain here.

Any other degree pattern means the input is not an underlying geograph.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import OrientedGeograph, halves
from .errors import InvariantViolation


@dataclass(frozen=True)
class Chain:
    vertices: tuple[int, ...]

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((min(a, b), max(a, b)) for a, b in zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class ChainDecomposition:
    oriented: OrientedGeograph
    chains: tuple[Chain, ...]

    def __len__(self):
        return len(self.chains)

    def __iter__(self):
        return iter(self.chains)


def _slope(og: OrientedGeograph, v: int, u: int) -> Fraction:
    d, pts = og.direction, og.geograph.points
    return (d.north(pts[u]) - d.north(pts[v])) / (d.project(pts[u]) - d.project(pts[v]))


def _pairings(og: OrientedGeograph):
    """Map each (west neighbour, v) to the east neighbour the chain continues to."""
    cont = {}
    starts = []
    adj = og.geograph.adjacency()
    for v in range(og.n):
        west = sorted((u for u in adj[v] if og.rank[u] < og.rank[v]), key=lambda u: _slope(og, v, u))
        east = sorted((u for u in adj[v] if og.rank[u] > og.rank[v]), key=lambda u: _slope(og, v, u))
        if len(east) == len(west) + 1:
            starts.append((v, east[0]))
            cont.update(((w, v), e) for w, e in zip(west, east[1:]))
        elif len(west) == len(east) + 1:
            cont.update(((w, v), e) for w, e in zip(west, east))
        else:
            raise InvariantViolation(
                f"vertex {v} has {len(west)} west and {len(east)} east edges; "
                "not an underlying geograph"
            )
    return starts, cont


def chain_property_violations(og: OrientedGeograph, chains) -> list[str]:
    """Check the four chain properties independently of how chains were built."""
    problems = []
    g = og.geograph
    edge_set = set(g.edges)
    used: dict[tuple[int, int], int] = {}
    left_end = [0] * g.n
    right_end = [0] * g.n
    for k, ch in enumerate(chains):
        vs = ch.vertices
        if len(vs) < 2:
            problems.append(f"chain {k} has no edge")
            continue
        for a, b in zip(vs, vs[1:]):
            e = (min(a, b), max(a, b))
            if e not in edge_set:
                problems.append(f"chain {k} uses non-edge {e}")
            if og.rank[b] <= og.rank[a]:
                problems.append(f"chain {k} does not travel left to right at {a}->{b}")
            used[e] = used.get(e, 0) + 1
        left_end[vs[0]] += 1
        right_end[vs[-1]] += 1
    for e in g.edges:
        if used.get(e, 0) != 1:
            problems.append(f"edge {e} lies on {used.get(e, 0)} chains")
    left, right = halves(og)
    for v in range(g.n):
        if left_end[v] + right_end[v] != 1:
            problems.append(f"vertex {v} is an endpoint of {left_end[v] + right_end[v]} chains")
        if v in left and not left_end[v]:
            problems.append(f"left-half vertex {v} is not a left endpoint")
        if v in right and not right_end[v]:
            problems.append(f"right-half vertex {v} is not a right endpoint")
    if len(chains) != g.n // 2:
        problems.append(f"{len(chains)} chains, expected {g.n // 2}")
    return problems


def chain_decomposition(og: OrientedGeograph) -> ChainDecomposition:
    starts, cont = _pairings(og)
    chains = []
    for s, nxt in sorted(starts, key=lambda se: og.rank[se[0]]):
        path = [s, nxt]
        while (path[-2], path[-1]) in cont:
            path.append(cont[path[-2], path[-1]])
        chains.append(Chain(tuple(path)))
    problems = chain_property_violations(og, chains)
    if problems:
        raise InvariantViolation("; ".join(problems))
    return ChainDecomposition(og, tuple(chains))
