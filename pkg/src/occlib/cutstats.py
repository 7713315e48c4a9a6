"""Cut statistics of graphs under uniformly random vertex bipartitions.

For a graph G and a uniform random vertex 2-coloring B, the cut is the set of
edges of G with differently colored endpoints.  q_k(G) is the probability the
cut has exactly k edges; q_R(G) is the probability the cut is isomorphic to a
fixed bipartite graph R (isolated vertices ignored).  Colorings are drawn on
the non-isolated vertices, so isolated vertices never affect any statistic.

Two independent routes compute the size distribution: direct enumeration of
all colorings, and the bridge/block product formula
    Q_G(X) = (1/2 + X/2)^m * prod_blocks Q_block(X)
where m counts bridge edges.  Both are exact and are cross-checked in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Polynomial, frac_str
from .graph import Graph, block_decomposition, canonical_key, write_graph6

__all__ = [
    "CutDistribution",
    "CutLemmaViolation",
    "cut_profile",
    "cut_distribution_bruteforce",
    "cut_distribution_blocks",
    "q_iso",
    "check_cut_lemmas",
    "builtin_table",
]

_MAX_BRUTE_V = 24


@dataclass(frozen=True, eq=False)
class CutDistribution:
    """Exact law of the cut size: probs[k] = q_k, indexed from 0."""

    probs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.probs:
            raise ValueError("empty distribution")
        if any(p < 0 for p in self.probs):
            raise ValueError("negative cut probability")
        if sum(self.probs) != 1:
            raise ValueError("cut probabilities must sum to 1")
        if self.probs[0] == 0:
            raise ValueError("q_0 must be positive (monochromatic coloring)")

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("negative cut size")
        return self.probs[k] if k < len(self.probs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.probs)

    def trimmed(self) -> tuple[Fraction, ...]:
        out = list(self.probs)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CutDistribution):
            return NotImplemented
        return self.trimmed() == other.trimmed()

    def __hash__(self) -> int:
        return hash(self.trimmed())

    def pgf(self) -> Polynomial:
        """Probability generating function sum_k q_k X^k."""
        return Polynomial(self.probs)

    def mean(self) -> Fraction:
        return sum(k * p for k, p in enumerate(self.probs))

    def as_strings(self) -> list[str]:
        return [frac_str(p) for p in self.probs]

    def __repr__(self) -> str:
        return "CutDistribution(" + ", ".join(self.as_strings()) + ")"


@lru_cache(maxsize=32)
def _cut_mask_table(v: int) -> tuple[int, ...]:
    """Cut edge-masks of K_v for every coloring with vertex 0 on side 0."""
    pairs_idx = []
    k = 0
    for i in range(v):
        for j in range(i + 1, v):
            pairs_idx.append((i, j, k))
            k += 1
    out = []
    for s_high in range(1 << max(v - 1, 0)):
        s = s_high << 1
        m = 0
        for i, j, idx in pairs_idx:
            if ((s >> i) ^ (s >> j)) & 1:
                m |= 1 << idx
        out.append(m)
    return tuple(out)


def cut_profile(g: Graph) -> tuple[Graph, dict[int, int], int]:
    """Exact multiset of cut masks of g.

    Returns (core, counts, total): core is g with isolated vertices removed,
    counts maps each achievable cut mask (in core edge coordinates) to the
    number of colorings producing it, and total is the number of colorings
    considered (2^(v-1), one per unordered bipartition; 1 for edgeless g).
    """
    core = g.strip_isolated()
    if core.mask == 0:
        return core, {0: 1}, 1
    if core.n > _MAX_BRUTE_V:
        raise ValueError(f"brute-force cut profile needs v <= {_MAX_BRUTE_V}")
    table = _cut_mask_table(core.n)
    counts: dict[int, int] = {}
    gm = core.mask
    for cm in table:
        key = gm & cm
        counts[key] = counts.get(key, 0) + 1
    return core, counts, len(table)


def cut_distribution_bruteforce(g: Graph) -> CutDistribution:
    """Cut-size law by direct enumeration of all colorings."""
    _, counts, total = cut_profile(g)
    probs = [Fraction(0)] * (g.edge_count + 1)
    for mask, c in counts.items():
        probs[mask.bit_count()] += Fraction(c, total)
    return CutDistribution(tuple(probs))


def cut_distribution_blocks(g: Graph) -> CutDistribution:
    """Cut-size law via the bridge/block product formula."""
    dec = block_decomposition(g)
    pgf = Polynomial([Fraction(1, 2), Fraction(1, 2)]) ** dec.m
    for block in dec.blocks:
        pgf = pgf * cut_distribution_bruteforce(block).pgf()
    probs = list(pgf.coeffs) + [Fraction(0)] * (g.edge_count + 1 - len(pgf.coeffs))
    return CutDistribution(tuple(probs))


def q_iso(g: Graph, r: Graph) -> Fraction:
    """Probability that the cut of g is isomorphic to r (isolated vertices ignored)."""
    if r.has_odd_cycle():
        raise ValueError("cuts are bipartite; r must be bipartite")
    rcore = r.strip_isolated()
    if rcore.n > 8:
        raise ValueError("isomorphism typing of cuts needs v(r) <= 8")
    rkey = canonical_key(rcore)
    redges = rcore.edge_count
    core, counts, total = cut_profile(g)
    hits = 0
    for mask, c in counts.items():
        if mask.bit_count() != redges:
            continue
        if canonical_key(Graph(core.n, mask)) == rkey:
            hits += c
    return Fraction(hits, total)


class CutLemmaViolation(AssertionError):
    """A cut-statistics assertion failed for a specific graph."""

    def __init__(self, g: Graph, message: str):
        super().__init__(f"{message} for graph {write_graph6(g)}")
        self.graph = g


def check_cut_lemmas(g: Graph) -> dict:
    """Assert the cut-statistics facts for one graph; return the computed values.

    Checked: q_0 = 2^(components - v); q_1 = m q_0; all q_k <= 1/2 when some
    vertex has odd degree; q_k <= 1/2 for odd k; q_2 <= 3/4; the two
    computation routes agree; the mean cut size is half the edge count.
    """
    brute = cut_distribution_bruteforce(g)
    blocks = cut_distribution_blocks(g)
    if brute != blocks:
        raise CutLemmaViolation(g, "block formula disagrees with enumeration")
    q = brute
    ncomp = g.component_count()
    v = g.v
    if q[0] != Fraction(1, 2 ** (v - ncomp)):
        raise CutLemmaViolation(g, "q_0 is not 2^(components - v)")
    m = block_decomposition(g).m
    if q[1] != m * q[0]:
        raise CutLemmaViolation(g, "q_1 is not (bridge count) * q_0")
    half = Fraction(1, 2)
    if any(g.degree(u) % 2 for u in range(g.n)):
        if any(p > half for p in q.probs):
            raise CutLemmaViolation(g, "q_k > 1/2 despite an odd-degree vertex")
    for k, p in enumerate(q.probs):
        if k % 2 == 1 and p > half:
            raise CutLemmaViolation(g, f"q_{k} > 1/2 for odd k")
    if q[2] > Fraction(3, 4):
        raise CutLemmaViolation(g, "q_2 > 3/4")
    if q.mean() != Fraction(g.edge_count, 2):
        raise CutLemmaViolation(g, "mean cut size is not |G|/2")
    return {
        "graph6": write_graph6(g),
        "distribution": q,
        "components": ncomp,
        "bridges": m,
    }


def builtin_table() -> list[tuple[str, Graph, CutDistribution]]:
    """The reference cut-size table for the six standard small graphs."""
    rows = [
        ("empty", Graph(1, 0)),
        ("edge", Graph.from_edges(2, [(0, 1)])),
        ("path2", Graph.from_edges(3, [(0, 1), (1, 2)])),
        ("triangle", Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])),
        ("forest4", Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])),
        ("K4minus", Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])),
    ]
    return [(name, g, cut_distribution_bruteforce(g)) for name, g in rows]
