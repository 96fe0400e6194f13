"""Coxeter systems, finite-type recognition, Solomon and Steinberg growth series."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional

from .polyalg import IntPolynomial, RationalFunction, bracket_product, ratfun_sum

INF = math.inf


class CoxeterParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class CoxeterSystem:
    """Symmetric Coxeter matrix; off-diagonal entries are integers >= 2 or INF."""

    orders: tuple
    labels: tuple = ()

    def __post_init__(self):
        n = len(self.orders)
        rows = tuple(tuple(r) for r in self.orders)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
            if row[i] != 1:
                raise ValueError(f"diagonal entry ({i},{i}) must be 1")
            for j, m in enumerate(row):
                if i == j:
                    continue
                if m != rows[j][i]:
                    raise ValueError(f"Coxeter matrix not symmetric at ({i},{j})")
                if not (m == INF or (isinstance(m, int) and m >= 2)):
                    raise ValueError(f"order ({i},{j}) must be an integer >= 2 or inf, got {m!r}")
        object.__setattr__(self, "orders", rows)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"s{i}" for i in range(n)))

    @property
    def rank(self) -> int:
        return len(self.orders)

    @classmethod
    def from_edges(cls, rank: int, edges, labels=()) -> "CoxeterSystem":
        """Build from (i, j, m) triples; unlisted pairs commute (m = 2)."""
        m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
        for i, j, order in edges:
            m[i][j] = m[j][i] = order
        return cls(tuple(map(tuple, m)), tuple(labels))

    def full_mask(self) -> int:
        return (1 << self.rank) - 1


def members(mask: int) -> list:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def connected_components(sys: CoxeterSystem, subset: int) -> list:
    """Split a generator bitmask into connected pieces of the Coxeter graph."""
    if subset >> sys.rank:
        raise ValueError("subset has bits beyond the rank")
    remaining = subset
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = 1 << start
        stack = [start]
        while stack:
            i = stack.pop()
            for j in members(remaining & ~comp):
                if sys.orders[i][j] != 2:
                    comp |= 1 << j
                    stack.append(j)
        comps.append(comp)
        remaining &= ~comp
    return comps


@dataclass(frozen=True)
class FiniteTypeLabel:
    family: str
    rank_param: int
    dihedral_order: int = 0

    def __post_init__(self):
        lo = {"A": 1, "B": 2, "D": 4}
        fixed = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "H3": 3, "H4": 4, "I2": 2}
        if self.family in lo:
            if self.rank_param < lo[self.family]:
                raise ValueError(f"{self.family}_{self.rank_param} is not a valid type")
        elif self.family in fixed:
            if self.rank_param != fixed[self.family]:
                raise ValueError(f"{self.family} has rank {fixed[self.family]}")
            if self.family == "I2" and self.dihedral_order < 3:
                raise ValueError("I2(m) requires m >= 3")
        else:
            raise ValueError(f"unknown family {self.family}")

    def __str__(self) -> str:
        if self.family == "I2":
            return f"I2({self.dihedral_order})"
        if self.family in ("A", "B", "D"):
            return f"{self.family}{self.rank_param}"
        return self.family

    def exponents(self) -> list:
        n = self.rank_param
        f = self.family
        if f == "A":
            return list(range(1, n + 1))
        if f == "B":
            return list(range(1, 2 * n, 2))
        if f == "D":
            return list(range(1, 2 * n - 2, 2)) + [n - 1]
        if f == "I2":
            return [1, self.dihedral_order - 1]
        return {
            "E6": [1, 4, 5, 7, 8, 11],
            "E7": [1, 5, 7, 9, 11, 13, 17],
            "E8": [1, 7, 11, 13, 17, 19, 23, 29],
            "F4": [1, 5, 7, 11],
            "H3": [1, 5, 9],
            "H4": [1, 11, 19, 29],
        }[f]

    def order(self) -> int:
        return math.prod(e + 1 for e in self.exponents())


def _classify_component(sys: CoxeterSystem, comp: int) -> Optional[FiniteTypeLabel]:
    verts = members(comp)
    n = len(verts)
    if n == 1:
        return FiniteTypeLabel("A", 1)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            m = sys.orders[verts[a]][verts[b]]
            if m != 2:
                if m == INF:
                    return None
                edges.append((a, b, m))
    if n == 2:
        m = edges[0][2]
        if m == 3:
            return FiniteTypeLabel("A", 2)
        if m == 4:
            return FiniteTypeLabel("B", 2)
        return FiniteTypeLabel("I2", 2, m)
    if len(edges) != n - 1:
        return None  # connected with a cycle
    adj = {a: [] for a in range(n)}
    for a, b, m in edges:
        adj[a].append((b, m))
        adj[b].append((a, m))
    degrees = sorted(len(v) for v in adj.values())
    heavy = [e for e in edges if e[2] > 3]
    if degrees[-1] > 3:
        return None
    branch = [a for a in adj if len(adj[a]) == 3]
    if len(branch) > 1:
        return None
    if branch:
        if heavy:
            return None
        c = branch[0]
        arms = []
        for nb, _ in adj[c]:
            length, prev, cur = 1, c, nb
            while len(adj[cur]) == 2:
                nxt = [x for x, _ in adj[cur] if x != prev][0]
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return FiniteTypeLabel("D", n)
        return {(1, 2, 2): FiniteTypeLabel("E6", 6),
                (1, 2, 3): FiniteTypeLabel("E7", 7),
                (1, 2, 4): FiniteTypeLabel("E8", 8)}.get(tuple(arms))
    # a path
    if not heavy:
        return FiniteTypeLabel("A", n)
    if len(heavy) > 1:
        return None
    a, b, m = heavy[0]
    at_end = len(adj[a]) == 1 or len(adj[b]) == 1
    if m == 4:
        if at_end:
            return FiniteTypeLabel("B", n)
        if n == 4:
            return FiniteTypeLabel("F4", 4)
        return None
    if m == 5 and at_end and n in (3, 4):
        return FiniteTypeLabel(f"H{n}", n)
    return None


def classify_finite(sys: CoxeterSystem, subset: Optional[int] = None):
    """Finite-type label per connected component, or None when the subgroup is infinite."""
    if subset is None:
        subset = sys.full_mask()
    labels = []
    for comp in connected_components(sys, subset):
        lab = _classify_component(sys, comp)
        if lab is None:
            return None
        labels.append(lab)
    return labels


def solomon_series(labels) -> IntPolynomial:
    """Growth polynomial of a finite Coxeter group: product of [e+1] over its exponents."""
    if isinstance(labels, FiniteTypeLabel):
        labels = [labels]
    return bracket_product([e + 1 for lab in labels for e in lab.exponents()])


def finite_subsets(sys: CoxeterSystem) -> list:
    """All T with finite W_T, as (mask, growth polynomial) in increasing mask order.

    Finite subsets are closed under taking subsets, so a subset is only extended
    when it is itself finite.
    """
    out = [(0, IntPolynomial([1]))]
    frontier = [0]
    n = sys.rank
    while frontier:
        nxt = []
        for mask in frontier:
            top = mask.bit_length()
            for j in range(top, n):
                m2 = mask | (1 << j)
                labs = classify_finite(sys, m2)
                if labs is not None:
                    out.append((m2, solomon_series(labs)))
                    nxt.append(m2)
        frontier = nxt
    out.sort(key=lambda x: x[0])
    return out


def steinberg_inverse_series(sys: CoxeterSystem) -> RationalFunction:
    """W(t) = sum over finite T of (-1)^|T| / f_T(t), which equals 1/f_S(1/t)."""
    terms = [((-1) ** bin(mask).count("1"), f) for mask, f in finite_subsets(sys)]
    return ratfun_sum(terms)


def steinberg_growth(sys: CoxeterSystem) -> RationalFunction:
    """Growth function f_S(t) from Steinberg's alternating sum over finite subsets."""
    return steinberg_inverse_series(sys).reverse_variable().reciprocal()


_LINE = re.compile(r"^\s*(\d+)\s+(\d+)\s+(\S+)\s*$")


def parse_coxeter_graph(text: str) -> CoxeterSystem:
    """Parse the graph format: ``rank N`` then ``i j m`` lines (m integer >= 2 or ``inf``)."""
    rank = None
    seen = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if rank is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "rank" or not parts[1].isdigit() or int(parts[1]) < 1:
                raise CoxeterParseError(f"expected 'rank N' with N >= 1, got {line!r}", lineno)
            rank = int(parts[1])
            continue
        mt = _LINE.match(line)
        if not mt:
            raise CoxeterParseError(f"expected 'i j m', got {line!r}", lineno)
        i, j, tok = int(mt.group(1)), int(mt.group(2)), mt.group(3)
        if i >= rank or j >= rank:
            raise CoxeterParseError(f"index out of range for rank {rank}", lineno)
        if i == j:
            raise CoxeterParseError("diagonal entries are fixed to 1", lineno)
        if tok == "inf":
            m = INF
        elif tok.isdigit() and int(tok) >= 2:
            m = int(tok)
        else:
            raise CoxeterParseError(f"order must be an integer >= 2 or 'inf', got {tok!r}", lineno)
        key = (min(i, j), max(i, j))
        if key in seen and seen[key] != m:
            raise CoxeterParseError(f"conflicting orders for pair {key}", lineno)
        seen[key] = m
        edges.append((i, j, m))
    if rank is None:
        raise CoxeterParseError("missing 'rank N' header")
    return CoxeterSystem.from_edges(rank, edges)


def format_coxeter_graph(sys: CoxeterSystem) -> str:
    lines = [f"rank {sys.rank}"]
    for i in range(sys.rank):
        for j in range(i + 1, sys.rank):
            m = sys.orders[i][j]
            if m != 2:
                lines.append(f"{i} {j} {'inf' if m == INF else m}")
    return "\n".join(lines) + "\n"


def irreducible_system(label: FiniteTypeLabel) -> CoxeterSystem:
    """A Coxeter matrix realizing the given irreducible finite type (for testing)."""
    n, f = label.rank_param, label.family
    if f == "I2":
        return CoxeterSystem.from_edges(2, [(0, 1, label.dihedral_order)])
    if f == "A":
        return CoxeterSystem.from_edges(n, [(i, i + 1, 3) for i in range(n - 1)])
    if f == "B":
        return CoxeterSystem.from_edges(n, [(i, i + 1, 3) for i in range(n - 2)] + [(n - 2, n - 1, 4)])
    if f == "D":
        return CoxeterSystem.from_edges(n, [(i, i + 1, 3) for i in range(n - 2)] + [(n - 3, n - 1, 3)])
    if f in ("E6", "E7", "E8"):
        # chain 0-1-...-(n-2) with vertex n-1 attached to the third chain vertex
        return CoxeterSystem.from_edges(n, [(i, i + 1, 3) for i in range(n - 2)] + [(2, n - 1, 3)])
    if f == "F4":
        return CoxeterSystem.from_edges(4, [(0, 1, 3), (1, 2, 4), (2, 3, 3)])
    if f in ("H3", "H4"):
        return CoxeterSystem.from_edges(n, [(0, 1, 5)] + [(i, i + 1, 3) for i in range(1, n - 1)])
    raise ValueError(f)
