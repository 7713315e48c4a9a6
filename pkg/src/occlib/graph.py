"""Graphs as edge bitmasks over the complete graph K_n.

Edges of K_n are ordered lexicographically as pairs (i, j) with i < j:
(0,1), (0,2), ..., (0,n-1), (1,2), ...  Bit k of a mask is the k-th edge in
that order.  The same order is the module-wide bit order used by the cube
transforms and the tensor operators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "BlockDecomposition",
    "Graph6Error",
    "edge_index",
    "edge_pairs",
    "canonical_form",
    "canonical_key",
    "block_decomposition",
    "enumerate_unlabeled",
    "parse_graph6",
    "write_graph6",
]

MAX_N = 64


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All edges of K_n in the canonical lexicographic order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def edge_index(i: int, j: int, n: int) -> int:
    """Position of edge (i, j) in the canonical order; arguments may be swapped."""
    if i == j:
        raise ValueError("self-loops are not edges")
    if i > j:
        i, j = j, i
    if not 0 <= i < j < n:
        raise ValueError(f"edge ({i},{j}) outside K_{n}")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Graph:
    """Simple graph on n labeled vertices, edge set stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"need 1 <= n <= {MAX_N}, got {self.n}")
        e = self.n * (self.n - 1) // 2
        if self.mask < 0 or self.mask >> e:
            raise ValueError("edge mask out of range for this n")

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, 0)

    @staticmethod
    def complete(n: int) -> "Graph":
        e = n * (n - 1) // 2
        return Graph(n, (1 << e) - 1)

    @staticmethod
    def from_edges(n: int, edges: Sequence[tuple[int, int]]) -> "Graph":
        m = 0
        for i, j in edges:
            m |= 1 << edge_index(i, j, n)
        return Graph(n, m)

    # edge-set views

    @property
    def edge_count(self) -> int:
        return self.mask.bit_count()

    def edges(self) -> list[tuple[int, int]]:
        pairs = edge_pairs(self.n)
        return [pairs[k] for k in _bit_positions(self.mask)]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.mask >> edge_index(i, j, self.n) & 1)

    def degree(self, v: int) -> int:
        return sum(1 for i, j in self.edges() if v in (i, j))

    def touched_vertices(self) -> int:
        """Bitmask of non-isolated vertices."""
        t = 0
        pairs = edge_pairs(self.n)
        for k in _bit_positions(self.mask):
            i, j = pairs[k]
            t |= (1 << i) | (1 << j)
        return t

    @property
    def v(self) -> int:
        """Number of non-isolated vertices."""
        return self.touched_vertices().bit_count()

    # set algebra on the shared vertex set

    def _check_same_n(self, other: "Graph"):
        if self.n != other.n:
            raise ValueError("graphs live on different vertex sets")

    def __xor__(self, other: "Graph") -> "Graph":
        self._check_same_n(other)
        return Graph(self.n, self.mask ^ other.mask)

    def __and__(self, other: "Graph") -> "Graph":
        self._check_same_n(other)
        return Graph(self.n, self.mask & other.mask)

    def __or__(self, other: "Graph") -> "Graph":
        self._check_same_n(other)
        return Graph(self.n, self.mask | other.mask)

    def complement(self) -> "Graph":
        full = (1 << len(edge_pairs(self.n))) - 1
        return Graph(self.n, self.mask ^ full)

    def is_subgraph_of(self, other: "Graph") -> bool:
        self._check_same_n(other)
        return self.mask & ~other.mask == 0

    def with_edge(self, i: int, j: int) -> "Graph":
        return Graph(self.n, self.mask | 1 << edge_index(i, j, self.n))

    # structure

    def adjacency(self) -> list[int]:
        """Neighbor bitmask per vertex."""
        adj = [0] * self.n
        pairs = edge_pairs(self.n)
        for k in _bit_positions(self.mask):
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def component_count(self) -> int:
        """Connected components among non-isolated vertices."""
        adj = self.adjacency()
        todo = self.touched_vertices()
        count = 0
        while todo:
            count += 1
            start = todo & -todo
            frontier = start
            seen = 0
            while frontier:
                seen |= frontier
                nxt = 0
                f = frontier
                while f:
                    vtx = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= adj[vtx]
                frontier = nxt & ~seen
            todo &= ~seen
        return count

    def is_bipartite(self) -> bool:
        """True when the graph carries no odd cycle."""
        adj = self.adjacency()
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0 or adj[s] == 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                nb = adj[u]
                while nb:
                    w = (nb & -nb).bit_length() - 1
                    nb &= nb - 1
                    if color[w] < 0:
                        color[w] = color[u] ^ 1
                        stack.append(w)
                    elif color[w] == color[u]:
                        return False
        return True

    def has_odd_cycle(self) -> bool:
        return not self.is_bipartite()

    def contains_triangle(self) -> bool:
        adj = self.adjacency()
        for i, j in self.edges():
            if adj[i] & adj[j]:
                return True
        return False

    def is_forest(self) -> bool:
        return self.edge_count == self.v - self.component_count()

    def strip_isolated(self) -> "Graph":
        """Relabel down to the non-isolated vertices, preserving vertex order."""
        t = self.touched_vertices()
        if t == 0:
            return Graph(1, 0)
        old = _bit_positions(t)
        newidx = {u: k for k, u in enumerate(old)}
        nn = len(old)
        m = 0
        for i, j in self.edges():
            m |= 1 << edge_index(newidx[i], newidx[j], nn)
        return Graph(nn, m)

    def permute(self, sigma: Sequence[int]) -> "Graph":
        """Relabel vertices: edge (i, j) becomes (sigma[i], sigma[j])."""
        if sorted(sigma) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        m = 0
        for i, j in self.edges():
            m |= 1 << edge_index(sigma[i], sigma[j], self.n)
        return Graph(self.n, m)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bit_positions(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


# ---------------------------------------------------------------------------
# block decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    """Bridges plus biconnected blocks; every edge appears in exactly one part."""

    bridges: tuple[tuple[int, int], ...]
    blocks: tuple[Graph, ...]

    @property
    def m(self) -> int:
        return len(self.bridges)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Split g into bridge edges and biconnected blocks (>= 3 edges each)."""
    adj = [[] for _ in range(g.n)]
    for i, j in g.edges():
        adj[i].append(j)
        adj[j].append(i)

    disc = [0] * g.n
    low = [0] * g.n
    timer = itertools.count(1)
    edge_stack: list[tuple[int, int]] = []
    components: list[list[tuple[int, int]]] = []

    def dfs(u: int, parent: int):
        disc[u] = low[u] = next(timer)
        for w in adj[u]:
            if w == parent:
                # simple graph: the one (u, parent) edge is the tree edge
                continue
            if disc[w]:
                if disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
                continue
            edge_stack.append((u, w))
            dfs(w, u)
            low[u] = min(low[u], low[w])
            if low[w] >= disc[u]:
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == (u, w):
                        break
                components.append(comp)

    for s in range(g.n):
        if disc[s] == 0 and adj[s]:
            dfs(s, -1)

    bridges = []
    blocks = []
    for comp in components:
        if len(comp) == 1:
            i, j = comp[0]
            bridges.append((i, j) if i < j else (j, i))
        else:
            blocks.append(Graph.from_edges(g.n, comp))
    bridges.sort()
    blocks.sort(key=lambda b: b.mask)
    dec = BlockDecomposition(tuple(bridges), tuple(blocks))
    covered = sum(1 for _ in bridges) + sum(b.edge_count for b in blocks)
    if covered != g.edge_count:
        raise AssertionError("block decomposition lost or duplicated edges")
    return dec


# ---------------------------------------------------------------------------
# canonical forms and enumeration
# ---------------------------------------------------------------------------

_CANON_MAX_N = 8


@lru_cache(maxsize=None)
def _perm_weight_matrix(n: int) -> np.ndarray:
    """Row per vertex permutation: weight 2^(new index) at each old edge index."""
    pairs = edge_pairs(n)
    e = len(pairs)
    perms = list(itertools.permutations(range(n)))
    w = np.zeros((len(perms), e), dtype=np.int64)
    for r, sigma in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            w[r, k] = 1 << edge_index(sigma[i], sigma[j], n)
    return w


@lru_cache(maxsize=None)
def canonical_form(g: Graph) -> int:
    """Lexicographically minimal edge bitmask over all vertex relabelings."""
    if g.n > _CANON_MAX_N:
        raise ValueError(f"canonical form by full scan needs n <= {_CANON_MAX_N}")
    if g.mask == 0:
        return 0
    e = len(edge_pairs(g.n))
    bits = np.fromiter(((g.mask >> k) & 1 for k in range(e)), dtype=np.int64, count=e)
    return int((_perm_weight_matrix(g.n) @ bits).min())


def canonical_key(g: Graph) -> tuple[int, int]:
    """Isomorphism-class key across vertex-set sizes: (v, canonical core mask)."""
    core = g.strip_isolated()
    return core.n if core.mask else 0, canonical_form(core)


@lru_cache(maxsize=None)
def enumerate_unlabeled(max_vertices: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs without isolated
    vertices on at most max_vertices vertices (the empty graph included)."""
    if not 1 <= max_vertices <= 7:
        raise ValueError("exhaustive enumeration supported for 1..7 vertices")
    n = max_vertices
    e = len(edge_pairs(n))
    canon_cache: dict[int, int] = {0: 0}

    def canon(mask: int) -> int:
        got = canon_cache.get(mask)
        if got is None:
            got = canonical_form(Graph(n, mask))
            canon_cache[mask] = got
        return got

    level = {0}
    seen = {0}
    for _ in range(e):
        nxt = set()
        for mask in level:
            free = ~mask & ((1 << e) - 1)
            while free:
                bit = free & -free
                free ^= bit
                c = canon(mask | bit)
                if c not in seen:
                    seen.add(c)
                    nxt.add(c)
        level = nxt
    reps = [Graph(n, m).strip_isolated() for m in seen]
    reps.sort(key=lambda g: (g.v, g.edge_count, canonical_form(g)))
    return tuple(reps)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 word (n <= 62, no header)."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 input", 0)
    if s.startswith(">>graph6<<"):
        s = s[10:]
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("multi-byte vertex counts (n > 62) not supported", 0)
    if not 63 <= first <= 125:
        raise Graph6Error("vertex-count byte out of range", 0)
    n = first - 63
    if n == 0:
        raise Graph6Error("graph6 word with zero vertices", 0)
    e = n * (n - 1) // 2
    need = (e + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}", 1 + min(len(body), need))
    bits = []
    for pos, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error("data byte out of range", 1 + pos)
        bits.extend((val >> (5 - t)) & 1 for t in range(6))
    if any(bits[e:]):
        raise Graph6Error("nonzero padding bits", len(s) - 1)
    # graph6 lists the upper triangle column by column: (i, j) for j = 1..n-1, i < j
    m = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                m |= 1 << edge_index(i, j, n)
            k += 1
    return Graph(n, m)


def write_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 word (n <= 62)."""
    if g.n > 62:
        raise ValueError("graph6 single-byte encoding needs n <= 62")
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for t in range(6):
            val = (val << 1) | bits[k + t]
        chars.append(chr(val + 63))
    return "".join(chars)


def random_graph(n: int, edge_prob, rng) -> Graph:
    """Seeded G(n, p) sample; edge_prob is an exact rational in [0, 1]."""
    m = 0
    for k in range(len(edge_pairs(n))):
        if rng.random() < edge_prob:
            m |= 1 << k
    return Graph(n, m)


def all_masks(n: int) -> Iterator[int]:
    """Every edge bitmask of K_n in numeric order."""
    return iter(range(1 << len(edge_pairs(n))))
