"""Brauer diagram combinatorics.

A diagram on n strands is a perfect matching of n bottom and n top vertices.
Composition stacks two diagrams, counting the closed loops that form in the
middle; the loop count is returned, never multiplied into anything, so the
same engine serves any coefficient ring.

Every diagram with 2f horizontal strands factors uniquely as

    gamma = alpha . (E_1 E_3 ... E_{2f-1}) . pi . beta^{-1}

with pi a permutation of the last n - 2f positions and alpha, beta the
canonical order-preserving coset representatives fixed here: alpha sends the
position pair (2i-1, 2i) to the i-th top horizontal strand ordered by left
endpoint and is order-preserving elsewhere, and beta does the same at the
bottom.  The factorization indexes the spanning elements T_{gamma, a, b, c};
counting them gives the rank formulas checked in the semi-admissibility
module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, Tuple

ENUMERATION_CAP = 6


class BrauerDiagram:
    """Perfect matching on vertices 0..2n-1; bottom i is i, top i is n + i."""

    __slots__ = ("n", "partner")

    def __init__(self, n: int, partner):
        partner = tuple(partner)
        if len(partner) != 2 * n:
            raise ValueError("partner table must list all 2n vertices")
        for v, w in enumerate(partner):
            if w == v or not 0 <= w < 2 * n or partner[w] != v:
                raise ValueError(f"not a perfect matching at vertex {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "partner", partner)

    def __setattr__(self, name, value):
        raise AttributeError("BrauerDiagram is immutable")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "BrauerDiagram":
        partner = [-1] * (2 * n)
        for v, w in pairs:
            partner[v], partner[w] = w, v
        return cls(n, partner)

    @classmethod
    def identity(cls, n: int) -> "BrauerDiagram":
        return cls.from_pairs(n, [(i, n + i) for i in range(n)])

    @classmethod
    def cap(cls, i: int, n: int) -> "BrauerDiagram":
        """E_i: horizontal strands joining positions i, i+1 (1-based) at the
        bottom and at the top, all other strands vertical."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"cap index {i} out of range for n={n}")
        pairs = [(i - 1, i), (n + i - 1, n + i)]
        pairs += [(j, n + j) for j in range(n) if j not in (i - 1, i)]
        return cls.from_pairs(n, pairs)

    @classmethod
    def transposition(cls, i: int, n: int) -> "BrauerDiagram":
        perm = list(range(n))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return cls.permutation(perm)

    @classmethod
    def permutation(cls, perm) -> "BrauerDiagram":
        """Diagram of a permutation given 0-based: bottom i to top perm[i]."""
        n = len(perm)
        return cls.from_pairs(n, [(i, n + perm[i]) for i in range(n)])

    @classmethod
    def half_caps(cls, f: int, n: int) -> "BrauerDiagram":
        """E_1 E_3 ... E_{2f-1}: f nested-free cap pairs then verticals."""
        pairs = [(2 * k, 2 * k + 1) for k in range(f)]
        pairs += [(n + 2 * k, n + 2 * k + 1) for k in range(f)]
        pairs += [(j, n + j) for j in range(2 * f, n)]
        return cls.from_pairs(n, pairs)

    def is_bottom(self, v: int) -> bool:
        return v < self.n

    def strands(self):
        return [(v, self.partner[v]) for v in range(2 * self.n)
                if v < self.partner[v]]

    def bottom_horizontal(self):
        """Bottom horizontal strands as (left, right) position pairs."""
        return sorted((v, w) for v, w in self.strands()
                      if w < self.n)

    def top_horizontal(self):
        """Top horizontal strands as 0-based (left, right) position pairs."""
        return sorted((v - self.n, w - self.n) for v, w in self.strands()
                      if v >= self.n)

    def vertical(self):
        """Vertical strands as (bottom, top) position pairs."""
        return sorted((v, w - self.n) for v, w in self.strands()
                      if v < self.n <= w)

    def horizontal_count(self) -> int:
        """Total number of horizontal strands (top plus bottom), always even."""
        return len(self.bottom_horizontal()) + len(self.top_horizontal())

    def is_permutation(self) -> bool:
        return self.horizontal_count() == 0

    def to_permutation(self):
        if not self.is_permutation():
            raise ValueError("diagram has horizontal strands")
        perm = [0] * self.n
        for b, t in self.vertical():
            perm[b] = t
        return tuple(perm)

    def __eq__(self, other):
        if not isinstance(other, BrauerDiagram):
            return NotImplemented
        return self.n == other.n and self.partner == other.partner

    def __hash__(self):
        return hash((self.n, self.partner))

    def __repr__(self):
        bh = self.bottom_horizontal()
        th = self.top_horizontal()
        vs = self.vertical()
        return (f"BrauerDiagram(n={self.n}, bottom={bh}, top={th}, "
                f"vertical={vs})")


def compose(d1: BrauerDiagram, d2: BrauerDiagram) -> Tuple[BrauerDiagram, int]:
    """The product d1 d2: d1 stacked above d2, with closed loops counted.

    Returns (diagram, loop_count); the scalar factor omega_0^loops is the
    caller's business.
    """
    if d1.n != d2.n:
        raise ValueError("strand count mismatch")
    n = d1.n
    # nodes: ('T', i) result top, ('B', i) result bottom, ('M', i) glued seam;
    # every seam node has degree exactly 2 (one edge from each factor)
    adj: Dict[tuple, list] = {}

    def link(a, b):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    def node_of(v, in_upper):
        if in_upper:  # d1: bottoms are seam vertices, tops stay tops
            return ('M', v) if v < n else ('T', v - n)
        return ('B', v) if v < n else ('M', v - n)

    for v, w in d1.strands():
        link(node_of(v, True), node_of(w, True))
    for v, w in d2.strands():
        link(node_of(v, False), node_of(w, False))

    outer = [('T', i) for i in range(n)] + [('B', i) for i in range(n)]
    visited = set()
    pairs = []
    for start in outer:
        if start in visited:
            continue
        visited.add(start)
        prev, cur = start, adj[start][0]
        while cur[0] == 'M':
            visited.add(cur)
            step = [x for x in adj[cur] if x != prev]
            # parallel seam edges only occur on closed loops, never on a
            # path that reaches an outer vertex
            prev, cur = cur, step[0]
        visited.add(cur)
        pairs.append((start, cur))

    # what remains of the seam layer is a disjoint union of cycles (every
    # unvisited node has degree 2), one loop per connected component
    loops = 0
    for i in range(n):
        node = ('M', i)
        if node in visited or node not in adj:
            continue
        loops += 1
        stack = [node]
        while stack:
            cur = stack.pop()
            if cur in visited:
                continue
            visited.add(cur)
            stack.extend(adj[cur])

    def vertex(node):
        return node[1] if node[0] == 'B' else n + node[1]

    matching = []
    seen = set()
    for a, b in pairs:
        va, vb = vertex(a), vertex(b)
        if (vb, va) not in seen:
            seen.add((va, vb))
            matching.append((va, vb))
    return BrauerDiagram.from_pairs(n, matching), loops


def enumerate_diagrams(n: int) -> Iterator[BrauerDiagram]:
    """All (2n-1)!! diagrams on n strands, in a deterministic order."""
    if n > ENUMERATION_CAP:
        raise ValueError(f"diagram enumeration capped at n <= {ENUMERATION_CAP}")

    def rec(free, pairs):
        if not free:
            yield BrauerDiagram.from_pairs(n, pairs)
            return
        v = free[0]
        for w in free[1:]:
            yield from rec([x for x in free[1:] if x != w], pairs + [(v, w)])

    yield from rec(list(range(2 * n)), [])


@dataclass(frozen=True)
class BrauerFactorization:
    """Canonical (alpha, f, pi, beta) with
    gamma = alpha . half_caps(f) . pi . beta^{-1}."""

    n: int
    f: int
    alpha: Tuple[int, ...]
    pi: Tuple[int, ...]
    beta: Tuple[int, ...]

    def recompose(self) -> Tuple[BrauerDiagram, int]:
        n = self.n
        beta_inv = _invert(self.beta)
        d, loops = compose(BrauerDiagram.permutation(self.alpha),
                           BrauerDiagram.half_caps(self.f, n))
        d, l2 = compose(d, BrauerDiagram.permutation(self.pi))
        d, l3 = compose(d, BrauerDiagram.permutation(beta_inv))
        return d, loops + l2 + l3


def _invert(perm):
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return tuple(inv)


def _coset_representative(horizontal, n, f):
    """Order-preserving representative: position pairs (2i, 2i+1) onto the
    i-th horizontal strand, remaining positions onto the rest in order."""
    perm = [0] * n
    used = set()
    for i, (left, right) in enumerate(horizontal):
        perm[2 * i], perm[2 * i + 1] = left, right
        used.update((left, right))
    rest = [v for v in range(n) if v not in used]
    for j, v in enumerate(rest):
        perm[2 * f + j] = v
    return tuple(perm)


def factorize(gamma: BrauerDiagram) -> BrauerFactorization:
    """The canonical factorization; certified by recomposition."""
    n = gamma.n
    tops = gamma.top_horizontal()
    bottoms = gamma.bottom_horizontal()
    f = len(tops)
    alpha = _coset_representative(tops, n, f)
    beta = _coset_representative(bottoms, n, f)
    alpha_inv = _invert(alpha)
    beta_inv = _invert(beta)
    pi = list(range(n))
    for b, t in gamma.vertical():
        pi[beta_inv[b]] = alpha_inv[t]
    fac = BrauerFactorization(n, f, alpha, tuple(pi), beta)
    check, loops = fac.recompose()
    if check != gamma or loops:
        raise AssertionError(f"factorization failed to recompose {gamma!r}")
    return fac


@dataclass(frozen=True)
class RegularMonomial:
    """Spanning element y^p gamma y^q with the support constraints:
    p_i = 0 unless bottom vertex i starts a horizontal strand, q_i = 0
    unless top vertex i starts a horizontal strand or ends a vertical one."""

    gamma: BrauerDiagram
    p: Tuple[int, ...]
    q: Tuple[int, ...]


@dataclass(frozen=True)
class IndexedSpanningElement:
    """Spanning element T_{gamma, a, b, c}: exponents a, b sit on the odd
    positions 1, 3, ..., 2f-1 (1-based) and c on positions 2f+1..n."""

    gamma: BrauerDiagram
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    c: Tuple[int, ...]


def free_exponent_positions(gamma: BrauerDiagram):
    """(bottom positions for p, top positions for q), 0-based."""
    p_pos = [left for left, _ in gamma.bottom_horizontal()]
    q_pos = sorted([left for left, _ in gamma.top_horizontal()]
                   + [t for _, t in gamma.vertical()])
    return p_pos, q_pos


def enumerate_regular(n: int, bound: int) -> Iterator[RegularMonomial]:
    """All regular monomials with exponents < bound; there are
    bound^n (2n-1)!! of them."""
    for gamma in enumerate_diagrams(n):
        p_pos, q_pos = free_exponent_positions(gamma)
        free = len(p_pos) + len(q_pos)
        for exps in product(range(bound), repeat=free):
            p = [0] * n
            q = [0] * n
            for pos, e in zip(p_pos, exps[:len(p_pos)]):
                p[pos] = e
            for pos, e in zip(q_pos, exps[len(p_pos):]):
                q[pos] = e
            yield RegularMonomial(gamma, tuple(p), tuple(q))


def count_regular(n: int, bound: int) -> int:
    return bound ** n * _double_factorial_odd(n)


def enumerate_ideal_spanning(n: int, bound: int) -> Iterator[IndexedSpanningElement]:
    """All T_{gamma, a, b, c} with exponents < bound over diagrams having at
    least one horizontal strand; there are bound^n ((2n-1)!! - n!) of them."""
    for gamma in enumerate_diagrams(n):
        if gamma.is_permutation():
            continue
        f = len(gamma.top_horizontal())
        s = n - 2 * f
        for exps in product(range(bound), repeat=n):
            yield IndexedSpanningElement(gamma,
                                         exps[:f],
                                         exps[f:2 * f],
                                         exps[2 * f:2 * f + s])


def count_ideal_spanning(n: int, bound: int) -> int:
    return bound ** n * (_double_factorial_odd(n) - math.factorial(n))


def _double_factorial_odd(n: int) -> int:
    out = 1
    for k in range(1, n + 1):
        out *= 2 * k - 1
    return out


@dataclass(frozen=True)
class CellDatum:
    """Poset of cell labels with the size of each index set T(label).

    order holds strict relations as (lower, higher) pairs; rank is
    sum |T(label)|^2.
    """

    sizes: Tuple[Tuple[str, int], ...]
    order: frozenset = frozenset()

    def labels(self):
        return tuple(lbl for lbl, _ in self.sizes)

    def rank(self) -> int:
        return sum(size * size for _, size in self.sizes)


def extend_cell_datum(cell_ideal: CellDatum, cell_quotient: CellDatum) -> CellDatum:
    """Cell datum of an extension: ideal labels all above quotient labels.

    Label sets must be disjoint; the rank is additive.
    """
    ideal_labels = set(cell_ideal.labels())
    quotient_labels = set(cell_quotient.labels())
    clash = ideal_labels & quotient_labels
    if clash:
        raise ValueError(f"label collision: {sorted(clash)}")
    cross = {(h, j) for h in quotient_labels for j in ideal_labels}
    return CellDatum(cell_ideal.sizes + cell_quotient.sizes,
                     cell_ideal.order | cell_quotient.order | frozenset(cross))
