"""Directed graphs, their distance structure and combinatorial tests.

Vertices are 0..n-1, arcs are ordered pairs without loops or repeats.
Everything downstream assumes strong connectivity; the checks that need
it raise :class:`NotStronglyConnectedError` instead of guessing.

Path counts are kept as Python integers (they outgrow int64 quickly on
dense graphs) inside object arrays.  The infinite girth of an acyclic or
odd-cycle-free graph is the :data:`INFINITE` singleton, which compares
above every integer; it is never encoded as -1 or a large sentinel.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np


class GraphError(ValueError):
    """Invalid digraph description."""


class LoopArcError(GraphError):
    pass


class DuplicateArcError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class NotStronglyConnectedError(GraphError):
    pass


class _Infinite:
    """Order-maximal marker for girths of graphs without the relevant cycles."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("_Infinite")

    def __repr__(self):
        return "infinite"


INFINITE = _Infinite()


def is_infinite(x) -> bool:
    return x is INFINITE


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple

    @cached_property
    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.arcs:
            A[u, v] = 1
        return A

    @cached_property
    def successors(self):
        out = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(s) for s in out)

    @cached_property
    def predecessors(self):
        out = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[v].append(u)
        return tuple(tuple(s) for s in out)

    @cached_property
    def out_degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @cached_property
    def in_degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=0)

    @cached_property
    def is_strongly_connected(self) -> bool:
        if self.n == 1:
            return True
        return (_reach_count(self.successors, 0) == self.n
                and _reach_count(self.predecessors, 0) == self.n)

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


def _reach_count(neighbors, start: int) -> int:
    seen = [False] * len(neighbors)
    seen[start] = True
    queue = deque([start])
    count = 1
    while queue:
        u = queue.popleft()
        for v in neighbors[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count


def build_digraph(n, arcs) -> Digraph:
    """Validate and freeze a digraph given as vertex count plus arc list."""
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    seen = set()
    clean = []
    for arc in arcs:
        u, v = arc
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"arc ({u}, {v}) outside vertex range 0..{n - 1}")
        if u == v:
            raise LoopArcError(f"loop arc at vertex {u}")
        if (u, v) in seen:
            raise DuplicateArcError(f"duplicate arc ({u}, {v})")
        seen.add((u, v))
        clean.append((u, v))
    clean.sort()
    return Digraph(n, tuple(clean))


def strong_connectivity(G: Digraph) -> bool:
    return G.is_strongly_connected


@dataclass(frozen=True)
class DistanceStructure:
    """Distances, distance layers and geodesic counts of a strongly connected digraph."""

    n: int
    dist: np.ndarray          # int64, dist[u, v] along directed paths
    diameter: int
    layers: tuple             # layers[k][u, v] = 1 iff dist(u, v) == k
    path_counts: np.ndarray   # object array of Python ints, geodesics u -> v


def distance_structure(G: Digraph) -> DistanceStructure:
    if not G.is_strongly_connected:
        raise NotStronglyConnectedError("distance structure needs strong connectivity")
    n = G.n
    dist = np.full((n, n), -1, dtype=np.int64)
    counts = np.zeros((n, n), dtype=object)
    succ = G.successors
    for u in range(n):
        drow = dist[u]
        crow = counts[u]
        drow[u] = 0
        crow[u] = 1
        order = deque([u])
        while order:
            v = order.popleft()
            dv = drow[v]
            cv = crow[v]
            for w in succ[v]:
                if drow[w] < 0:
                    drow[w] = dv + 1
                    order.append(w)
                if drow[w] == dv + 1:
                    crow[w] += cv
    D = int(dist.max())
    layers = tuple((dist == k).astype(np.int64) for k in range(D + 1))
    return DistanceStructure(n, dist, D, layers, counts)


@dataclass(frozen=True)
class DeltaProfile:
    """Mean layer sizes delta_k and mean geodesic counts delta'_k, exact.

    delta_k averages |Gamma_k(u)| over the vertices; delta'_k averages
    the number of shortest paths leaving u for its distance-k layer.
    delta_k <= delta'_k always, with equality for all k exactly on the
    geodetic graphs.
    """

    delta: tuple               # Fractions, k = 0..D
    delta_prime: tuple         # Fractions, k = 0..D
    vertex_counts: np.ndarray  # int64, vertex_counts[k, u] = |Gamma_k(u)|
    vertex_prime: np.ndarray   # object ints, geodesics from u to its layer k


def delta_profile(ds: DistanceStructure) -> DeltaProfile:
    D = ds.diameter
    counts = np.zeros((D + 1, ds.n), dtype=np.int64)
    prime = np.zeros((D + 1, ds.n), dtype=object)
    for k, layer in enumerate(ds.layers):
        counts[k] = layer.sum(axis=1)
        prime[k] = (ds.path_counts * layer.astype(object)).sum(axis=1)
    delta = tuple(Fraction(int(counts[k].sum()), ds.n) for k in range(D + 1))
    delta_prime = tuple(Fraction(int(prime[k].sum()), ds.n) for k in range(D + 1))
    return DeltaProfile(delta, delta_prime, counts, prime)


def girth(G: Digraph, ds: DistanceStructure = None):
    """Length of a shortest directed cycle; INFINITE only for the one-vertex graph."""
    if ds is None:
        ds = distance_structure(G)
    best = INFINITE
    for u, v in G.arcs:
        back = ds.dist[v, u]
        if back >= 0 and (is_infinite(best) or back + 1 < best):
            best = int(back) + 1
    return best

def odd_girth(G: Digraph):
    """Length of a shortest odd directed cycle, INFINITE when none exists.

    A shortest odd closed walk is an odd cycle (any closed walk splits
    into cycles and an odd total forces an odd, no longer, part), so a
    parity-layered search from each vertex suffices.
    """
    if not G.is_strongly_connected:
        raise NotStronglyConnectedError("odd girth needs strong connectivity")
    n = G.n
    succ = G.successors
    best = INFINITE
    for s in range(n):
        # state (v, p): walk s -> v of parity p; target (s, 1)
        seen = np.full((n, 2), -1, dtype=np.int64)
        seen[s, 0] = 0
        queue = deque([(s, 0)])
        while queue:
            v, p = queue.popleft()
            d = seen[v, p]
            if not is_infinite(best) and d + 1 >= best:
                continue
            for w in succ[v]:
                q = p ^ 1
                if seen[w, q] < 0:
                    seen[w, q] = d + 1
                    if w == s and q == 1:
                        best = int(d) + 1
                        queue.clear()
                        break
                    queue.append((w, q))
    return best


def girth_and_odd_girth(G: Digraph, ds: DistanceStructure = None):
    """(shortest cycle length, shortest odd cycle length or INFINITE)."""
    return girth(G, ds), odd_girth(G)


def bipartite_test(G: Digraph) -> bool:
    """True iff no directed closed walk has odd length."""
    if not G.is_strongly_connected:
        raise NotStronglyConnectedError("bipartiteness test needs strong connectivity")
    color = [-1] * G.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in G.successors[u]:
            if color[v] < 0:
                color[v] = color[u] ^ 1
                queue.append(v)
    # strong connectivity makes the forced coloring total; any arc that
    # fails to alternate closes an odd walk
    return all(color[v] == color[u] ^ 1 for u, v in G.arcs)


def geodetic_test(ds: DistanceStructure) -> bool:
    """True iff every ordered vertex pair is joined by a unique geodesic."""
    return all(c <= 1 for c in ds.path_counts.flat)


def regularity_test(G: Digraph):
    """Returns (is_regular, degree); regular means all in- and out-degrees agree."""
    out = G.out_degrees
    if G.n == 0:
        return True, 0
    k = int(out[0])
    if np.all(out == k) and np.all(G.in_degrees == k):
        return True, k
    return False, None
