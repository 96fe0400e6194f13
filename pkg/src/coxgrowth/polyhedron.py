"""Combinatorial Coxeter polyhedra: faces on the 2-sphere with pi/m edge labels."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Mapping, Optional

from .coxeter import INF, CoxeterSystem

CUSP_2222 = (2, 2, 2, 2)
EUCLIDEAN_TRIPLES = ((2, 3, 6), (2, 4, 4), (3, 3, 3))


class PolyhedronError(ValueError):
    """Invalid polyhedron data or a violated operation precondition."""


def _edge(u: int, v: int) -> tuple:
    return (u, v) if u < v else (v, u)


class CombinatorialPolyhedron:
    """Faces as cyclic vertex-id tuples plus a label m >= 2 on every edge.

    Construction validates the sphere structure and re-orients the faces
    coherently (every edge is traversed once in each direction).
    """

    def __init__(self, faces: Iterable[Iterable[int]], labels: Mapping, name: str = ""):
        faces = [tuple(int(v) for v in f) for f in faces]
        self.name = name
        _precheck(faces)
        self.faces = _orient(faces)
        lab = {}
        for key, m in labels.items():
            u, v = tuple(key)
            e = _edge(int(u), int(v))
            if e in lab and lab[e] != m:
                raise PolyhedronError(f"conflicting labels for edge {e}")
            lab[e] = m
        self._labels = lab
        self._validate()

    # derived structure

    @cached_property
    def edge_faces(self) -> dict:
        ef: dict = {}
        for i, f in enumerate(self.faces):
            for a, b in zip(f, f[1:] + f[:1]):
                ef.setdefault(_edge(a, b), []).append(i)
        return {e: tuple(fs) for e, fs in sorted(ef.items())}

    @property
    def edges(self) -> tuple:
        return tuple(self.edge_faces)

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted({v for f in self.faces for v in f}))

    @cached_property
    def vertex_edges(self) -> dict:
        ve: dict = {v: [] for v in self.vertices}
        for e in self.edges:
            ve[e[0]].append(e)
            ve[e[1]].append(e)
        return ve

    @cached_property
    def vertex_faces(self) -> dict:
        vf: dict = {v: [] for v in self.vertices}
        for i, f in enumerate(self.faces):
            for v in f:
                vf[v].append(i)
        return vf

    @cached_property
    def face_adjacency(self) -> dict:
        """(i, j) with i < j -> shared edge."""
        return {tuple(sorted(fs)): e for e, fs in self.edge_faces.items()}

    @property
    def labels(self) -> dict:
        return dict(self._labels)

    def label(self, e) -> int:
        return self._labels[_edge(*e)]

    def valence(self, v: int) -> int:
        return len(self.vertex_edges[v])

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def E(self) -> int:
        return len(self.edge_faces)

    @property
    def V(self) -> int:
        return len(self.vertices)

    def faces_adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.face_adjacency

    def dihedral(self, i: int, j: int):
        """Label between faces i and j, or INF when they share no edge."""
        e = self.face_adjacency.get((min(i, j), max(i, j)))
        return INF if e is None else self._labels[e]

    @cached_property
    def _dart_face(self) -> dict:
        return {(a, b): i for i, f in enumerate(self.faces) for a, b in zip(f, f[1:] + f[:1])}

    def rotation(self, v: int) -> list:
        """Faces around v in cyclic order, starting from the lowest face index."""
        # face f has darts a->v->b; the next face across edge v-a holds the dart v->a
        dart_face = self._dart_face
        start = min(self.vertex_faces[v])
        order = [start]
        cur = start
        while True:
            f = self.faces[cur]
            k = f.index(v)
            prev = f[k - 1]
            cur = dart_face[(v, prev)]
            if cur == start:
                return order
            order.append(cur)
            if len(order) > len(self.faces):
                raise PolyhedronError(f"faces around vertex {v} do not close up")

    def relabeled(self, changes: Mapping) -> "CombinatorialPolyhedron":
        lab = dict(self._labels)
        for e, m in changes.items():
            e = _edge(*e)
            if e not in lab:
                raise PolyhedronError(f"{e} is not an edge")
            lab[e] = m
        return CombinatorialPolyhedron(self.faces, lab, self.name)

    def mirror(self) -> "CombinatorialPolyhedron":
        return CombinatorialPolyhedron([tuple(reversed(f)) for f in self.faces], self._labels, self.name)

    def _validate(self):
        for f in self.faces:
            if len(f) < 3:
                raise PolyhedronError(f"face {f} has fewer than 3 vertices")
            if len(set(f)) != len(f):
                raise PolyhedronError(f"face {f} repeats a vertex")
        for e, fs in self.edge_faces.items():
            if len(fs) != 2:
                raise PolyhedronError(f"edge {e} lies on {len(fs)} faces, expected 2")
        pairs = Counter(tuple(sorted(fs)) for fs in self.edge_faces.values())
        for fs, c in pairs.items():
            if c > 1:
                raise PolyhedronError(f"faces {fs} share {c} edges")
        for e in self.edges:
            if e not in self._labels:
                raise PolyhedronError(f"edge {e} has no label")
            m = self._labels[e]
            if not (m == INF or (isinstance(m, int) and m >= 2)):
                raise PolyhedronError(f"edge {e} label {m!r} must be an integer >= 2")
        extra = set(self._labels) - set(self.edge_faces)
        if extra:
            raise PolyhedronError(f"labels given for non-edges {sorted(extra)}")
        for v in self.vertices:
            d = self.valence(v)
            if d not in (3, 4):
                raise PolyhedronError(f"vertex {v} has valence {d}; only 3 and 4 are allowed")
            if len(self.vertex_faces[v]) != d or len(self.rotation(v)) != d:
                raise PolyhedronError(f"neighbourhood of vertex {v} is not a disk")
        if self.V - self.E + self.F != 2:
            raise PolyhedronError(f"V - E + F = {self.V - self.E + self.F}, not 2: not a sphere")

    def __repr__(self) -> str:
        nm = f" {self.name!r}" if self.name else ""
        return f"<CombinatorialPolyhedron{nm} V={self.V} E={self.E} F={self.F}>"


def _precheck(faces: list) -> None:
    for f in faces:
        if len(f) < 3:
            raise PolyhedronError(f"face {f} has fewer than 3 vertices")
        if len(set(f)) != len(f):
            raise PolyhedronError(f"face {f} repeats a vertex")
    count = Counter(_edge(a, b) for f in faces for a, b in zip(f, f[1:] + f[:1]))
    for e, c in sorted(count.items()):
        if c != 2:
            raise PolyhedronError(f"edge {e} lies on {c} faces, expected 2")


def _orient(faces: list) -> tuple:
    """Flip faces so that each edge is used once in each direction."""
    if not faces:
        raise PolyhedronError("no faces")
    edge_to = {}
    for i, f in enumerate(faces):
        for a, b in zip(f, f[1:] + f[:1]):
            edge_to.setdefault(_edge(a, b), []).append(i)
    out: list = [None] * len(faces)
    out[0] = faces[0]
    stack = [0]
    while stack:
        i = stack.pop()
        f = out[i]
        for a, b in zip(f, f[1:] + f[:1]):
            for j in edge_to[_edge(a, b)]:
                if j == i:
                    continue
                g = faces[j]
                darts = set(zip(g, g[1:] + g[:1]))
                want = g if (b, a) in darts else tuple(reversed(g))
                if out[j] is None:
                    out[j] = want
                    stack.append(j)
                elif out[j] != want:
                    raise PolyhedronError("faces cannot be oriented coherently: not a sphere")
    if any(f is None for f in out):
        raise PolyhedronError("face complex is disconnected")
    return tuple(out)


# vertex typing


@dataclass(frozen=True)
class VertexType:
    kind: str  # "spherical", "euclidean" or "hyperbolic"
    signature: tuple

    @property
    def is_cusp(self) -> bool:
        return self.kind == "euclidean"


def vertex_type(labels) -> VertexType:
    sig = tuple(sorted(labels))
    if len(sig) == 4:
        return VertexType("euclidean" if sig == CUSP_2222 else "hyperbolic", sig)
    if len(sig) != 3:
        raise PolyhedronError(f"vertex with {len(sig)} edges")
    s = sum(Fraction(1, a) for a in sig if a != INF)
    if s > 1:
        kind = "spherical"
    elif s == 1:
        kind = "euclidean"
    else:
        kind = "hyperbolic"
    return VertexType(kind, sig)


@dataclass
class VertexCensus:
    F: int
    E: int
    V: int
    vertex_counts: dict = field(default_factory=dict)  # signature -> count
    edge_counts: dict = field(default_factory=dict)  # m -> count
    kinds: dict = field(default_factory=dict)  # vertex id -> VertexType
    valence3: int = 0
    valence4: int = 0

    def v(self, *sig) -> int:
        return self.vertex_counts.get(tuple(sorted(sig)), 0)

    def e(self, m: int) -> int:
        return self.edge_counts.get(m, 0)

    @property
    def k(self) -> int:
        return sum(c for m, c in self.edge_counts.items() if m >= 7)

    @property
    def cusps(self) -> int:
        return sum(c for sig, c in self.vertex_counts.items() if vertex_type(sig).is_cusp)

    @property
    def hyperbolic_vertices(self) -> list:
        return sorted(v for v, t in self.kinds.items() if t.kind == "hyperbolic")

    def signatures(self) -> list:
        return sorted(self.vertex_counts)


def vertex_labels(P: CombinatorialPolyhedron, v: int) -> tuple:
    return tuple(P.label(e) for e in P.vertex_edges[v])


def classify_vertices(P: CombinatorialPolyhedron) -> VertexCensus:
    kinds = {v: vertex_type(vertex_labels(P, v)) for v in P.vertices}
    return VertexCensus(
        F=P.F,
        E=P.E,
        V=P.V,
        vertex_counts=dict(sorted(Counter(t.signature for t in kinds.values()).items())),
        edge_counts=dict(sorted(Counter(P.label(e) for e in P.edges).items())),
        kinds=kinds,
        valence3=sum(1 for v in P.vertices if P.valence(v) == 3),
        valence4=sum(1 for v in P.vertices if P.valence(v) == 4),
    )


# counting identities


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: object
    rhs: object
    relation: str = "="

    @property
    def passed(self) -> bool:
        if self.relation == ">=":
            return self.lhs >= self.rhs
        if self.relation == "<=":
            return self.lhs <= self.rhs
        return self.lhs == self.rhs


def counting_identities(c: VertexCensus) -> list:
    """Evaluate the vertex and edge counting identities and the cusp inequality on a census."""
    v = c.v
    n_2 = sorted({s[2] for s in c.vertex_counts if len(s) == 3 and s[:2] == (2, 2)} | {2})
    big = sorted({m for m in c.edge_counts if m >= 7} | {s[2] for s in c.vertex_counts if len(s) == 3 and s[:2] == (2, 2) and s[2] >= 7})
    checks = [
        IdentityCheck("V - E + F = 2", c.V - c.E + c.F, 2),
        IdentityCheck(
            "V = v2222 + sum v22n + v233 + v234 + v235 + v236 + v244 + v333",
            c.V,
            v(2, 2, 2, 2) + sum(v(2, 2, n) for n in n_2) + v(2, 3, 3) + v(2, 3, 4) + v(2, 3, 5) + v(2, 3, 6) + v(2, 4, 4) + v(3, 3, 3),
        ),
        IdentityCheck("E = sum e_n", c.E, sum(c.edge_counts.values())),
        IdentityCheck(
            "2e2 = 4v2222 + 3v222 + 2 sum_{n>=3} v22n + v233 + v234 + v235 + v236 + v244",
            2 * c.e(2),
            4 * v(2, 2, 2, 2) + 3 * v(2, 2, 2) + 2 * sum(v(2, 2, n) for n in n_2 if n >= 3)
            + v(2, 3, 3) + v(2, 3, 4) + v(2, 3, 5) + v(2, 3, 6) + v(2, 4, 4),
        ),
        IdentityCheck("2e3 = 3v333 + 2v233 + v223 + v234 + v235 + v236", 2 * c.e(3),
                      3 * v(3, 3, 3) + 2 * v(2, 3, 3) + v(2, 2, 3) + v(2, 3, 4) + v(2, 3, 5) + v(2, 3, 6)),
        IdentityCheck("2e4 = 2v244 + v224 + v234", 2 * c.e(4), 2 * v(2, 4, 4) + v(2, 2, 4) + v(2, 3, 4)),
        IdentityCheck("2e5 = v225 + v235", 2 * c.e(5), v(2, 2, 5) + v(2, 3, 5)),
        IdentityCheck("2e6 = v226 + v236", 2 * c.e(6), v(2, 2, 6) + v(2, 3, 6)),
    ]
    for n in big:
        checks.append(IdentityCheck(f"2e{n} = v22{n}", 2 * c.e(n), v(2, 2, n)))
    checks.append(IdentityCheck("v2222 + v236 + v244 + v333 >= 1",
                                v(2, 2, 2, 2) + v(2, 3, 6) + v(2, 4, 4) + v(3, 3, 3), 1, ">="))
    return checks


def check_counting_identities(P: CombinatorialPolyhedron) -> list:
    c = classify_vertices(P)
    if c.hyperbolic_vertices:
        raise PolyhedronError(f"hyperbolic vertices present: {c.hyperbolic_vertices}")
    return counting_identities(c)


def euler_valence_identity(c: VertexCensus) -> IdentityCheck:
    """F - 2 = (number of 4-valent vertices) + (number of 3-valent vertices)/2."""
    return IdentityCheck("F - 2 = v4 + v3/2", Fraction(c.F - 2), c.valence4 + Fraction(c.valence3, 2))


def large_label_slack(c: VertexCensus) -> int:
    """v2222 + e3 + e4 + e5 + e6 + F - 8; the inequality asks for >= 0."""
    return c.v(2, 2, 2, 2) + c.e(3) + c.e(4) + c.e(5) + c.e(6) + c.F - 8


# Andreev's conditions


@dataclass
class AndreevReport:
    partial: bool
    conditions: dict  # letter -> (passed, witnesses)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.conditions.values())


def is_tetrahedron(P: CombinatorialPolyhedron) -> bool:
    return P.F == 4 and P.V == 4


def is_triangular_prism(P: CombinatorialPolyhedron) -> bool:
    return P.F == 5 and sorted(len(f) for f in P.faces) == [3, 3, 4, 4, 4] and P.V == 6


def _inv_sum(labels) -> Fraction:
    return sum((Fraction(1, m) for m in labels), Fraction(0))


def prismatic_circuits(P: CombinatorialPolyhedron, length: int) -> list:
    """Cyclically adjacent face tuples whose crossing edges share no endpoints."""
    out = []
    F = P.F
    for combo in combinations(range(F), length):
        first = combo[0]
        for rest in permutations(combo[1:]):
            cyc = (first,) + rest
            if length > 3 and rest[0] > rest[-1]:
                continue  # each undirected cycle once
            if length == 3 and rest != tuple(sorted(rest)):
                continue
            edges = []
            ok = True
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                e = P.face_adjacency.get((min(a, b), max(a, b)))
                if e is None:
                    ok = False
                    break
                edges.append(e)
            if not ok:
                continue
            ends = [v for e in edges for v in e]
            if len(set(ends)) == len(ends):
                out.append(cyc)
    return out


def andreev_check(P: CombinatorialPolyhedron) -> AndreevReport:
    """Conditions (a)-(f); only (a)-(c) for tetrahedra and triangular prisms."""
    conds = {}
    bad_a, bad_b, bad_c = [], [], []
    for v in P.vertices:
        labs = vertex_labels(P, v)
        if len(labs) == 3:
            s = _inv_sum(labs)
            if s < 1:
                bad_a.append((v, tuple(sorted(labs))))
            # a 3-valent vertex with sum exactly 1 is a cusp, which is (b)
        elif tuple(sorted(labs)) != CUSP_2222:
            bad_c.append((v, tuple(sorted(labs))))
    conds["a"] = (not bad_a, bad_a)
    conds["b"] = (not bad_b, bad_b)
    conds["c"] = (not bad_c, bad_c)
    partial = is_tetrahedron(P) or is_triangular_prism(P)
    if partial:
        return AndreevReport(True, conds)
    bad_d = []
    for cyc in prismatic_circuits(P, 3):
        labs = [P.dihedral(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])]
        if _inv_sum(labs) >= 1:
            bad_d.append((cyc, tuple(labs)))
    conds["d"] = (not bad_d, bad_d)
    bad_e = []
    for v in P.vertices:
        if P.valence(v) != 4 or tuple(sorted(vertex_labels(P, v))) != CUSP_2222:
            continue
        rot = P.rotation(v)
        for j, k in ((rot[0], rot[2]), (rot[1], rot[3])):
            if P.faces_adjacent(j, k):
                continue
            for i in range(P.F):
                if i in rot or not (P.faces_adjacent(i, j) and P.faces_adjacent(i, k)):
                    continue
                if P.dihedral(i, j) == 2 and P.dihedral(i, k) == 2:
                    bad_e.append((i, j, k, v))
    conds["e"] = (not bad_e, bad_e)
    bad_f = []
    for cyc in prismatic_circuits(P, 4):
        labs = [P.dihedral(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])]
        if all(m == 2 for m in labs):
            bad_f.append(cyc)
    conds["f"] = (not bad_f, bad_f)
    return AndreevReport(False, conds)


# pinching and opening


def pinch(P: CombinatorialPolyhedron, edge) -> CombinatorialPolyhedron:
    """Contract a pi/m-edge (m >= 7) with (2,2,m) endpoints to a (2,2,2,2) cusp."""
    e = _edge(*edge)
    if e not in P.edge_faces:
        raise PolyhedronError(f"{edge} is not an edge")
    m = P.label(e)
    if not (isinstance(m, int) and m >= 7):
        raise PolyhedronError(f"edge {e} has label {m}; pinching needs m >= 7")
    for x in e:
        if sorted(vertex_labels(P, x)) != [2, 2, m]:
            raise PolyhedronError(f"endpoint {x} of {e} is not of type (2,2,{m})")
    keep, drop = e
    faces = []
    for f in P.faces:
        g = []
        for x in f:
            x = keep if x == drop else x
            if not g or g[-1] != x:
                g.append(x)
        if len(g) > 1 and g[0] == g[-1]:
            g.pop()
        faces.append(tuple(g))
    labels = {}
    for (a, b), lab in P.labels.items():
        if (a, b) == e:
            continue
        a = keep if a == drop else a
        b = keep if b == drop else b
        labels[_edge(a, b)] = lab
    try:
        return CombinatorialPolyhedron(faces, labels, P.name)
    except PolyhedronError as exc:
        raise PolyhedronError(f"pinching {e} does not give a polyhedron: {exc}") from exc


def cusp_pairings(P: CombinatorialPolyhedron, v: int) -> tuple:
    """The two pairs of opposite faces at a 4-valent vertex; index = pairing argument."""
    if P.valence(v) != 4:
        raise PolyhedronError(f"vertex {v} is not 4-valent")
    r = P.rotation(v)
    return ((r[0], r[2]), (r[1], r[3]))


def open_cusp(P: CombinatorialPolyhedron, vertex: int, pairing: int, m: int) -> CombinatorialPolyhedron:
    """Replace a (2,2,2,2) cusp by a pi/m-edge joining the faces of the chosen opposite pair."""
    w = vertex
    if w not in P.vertex_edges:
        raise PolyhedronError(f"{w} is not a vertex")
    if P.valence(w) != 4 or tuple(sorted(vertex_labels(P, w))) != CUSP_2222:
        raise PolyhedronError(f"vertex {w} is not a (2,2,2,2) cusp")
    if not (isinstance(m, int) and m >= 7):
        raise PolyhedronError(f"opening needs m >= 7, got {m}")
    if pairing not in (0, 1):
        raise PolyhedronError("pairing must be 0 or 1")
    r = P.rotation(w)
    A, C, B, D = r[pairing], r[pairing + 1], r[(pairing + 2) % 4], r[(pairing + 3) % 4]
    u, new = w, max(P.vertices) + 1

    def across(f1, f2):
        e = P.face_adjacency[(min(f1, f2), max(f1, f2))]
        return e[0] if e[1] == w else e[1]

    x_ac, x_ad, x_bc, x_bd = across(A, C), across(A, D), across(B, C), across(B, D)
    faces = []
    for i, f in enumerate(P.faces):
        if i in (A, B):
            xc, xd = (x_ac, x_ad) if i == A else (x_bc, x_bd)
            k = f.index(w)
            prev = f[k - 1]
            ins = (u, new) if prev == xc else (new, u)
            faces.append(f[:k] + ins + f[k + 1:])
        elif i == D:
            faces.append(tuple(new if x == w else x for x in f))
        else:
            faces.append(f)
    labels = {}
    for (a, b), lab in P.labels.items():
        other = b if a == w else a if b == w else None
        if other in (x_ad, x_bd):
            labels[_edge(new, other)] = lab
        else:
            labels[(a, b)] = lab
    labels[_edge(u, new)] = m
    try:
        return CombinatorialPolyhedron(faces, labels, P.name)
    except PolyhedronError as exc:
        raise PolyhedronError(f"opening cusp {w} with pairing {pairing} fails: {exc}") from exc


# bound on the number of large-label edges


@dataclass
class Theorem3Report:
    k: int
    F: int
    bound_holds: bool
    equality: bool
    equality_census_ok: Optional[bool]

    @property
    def passed(self) -> bool:
        return self.bound_holds and self.equality_census_ok is not False


def theorem3_bound_census(c: VertexCensus) -> Theorem3Report:
    k, F = c.k, c.F
    eq = k == F - 3
    census_ok = None
    if eq:
        others = {s: n for s, n in c.vertex_counts.items() if s != CUSP_2222}
        census_ok = c.v(2, 2, 2, 2) == 1 and all(len(s) == 3 and s[:2] == (2, 2) and s[2] >= 7 for s in others)
    return Theorem3Report(k, F, k <= F - 3, eq, census_ok)


def theorem3_bound(P: CombinatorialPolyhedron) -> Theorem3Report:
    c = classify_vertices(P)
    if c.cusps == 0:
        raise PolyhedronError("the bound is stated for non-compact polyhedra; no cusp found")
    return theorem3_bound_census(c)


# Coxeter system and isomorphism


def coxeter_system_of(P: CombinatorialPolyhedron) -> CoxeterSystem:
    """One reflection per face; non-adjacent faces generate an infinite dihedral group."""
    n = P.F
    rows = [[1 if i == j else P.dihedral(i, j) for j in range(n)] for i in range(n)]
    return CoxeterSystem(tuple(map(tuple, rows)), tuple(f"F{i}" for i in range(n)))


def _dart_code(P: CombinatorialPolyhedron) -> tuple:
    darts = []
    nxt = {}
    for f in P.faces:
        for i in range(len(f)):
            d = (f[i], f[(i + 1) % len(f)])
            darts.append(d)
            nxt[d] = (f[(i + 1) % len(f)], f[(i + 2) % len(f)])
    best = None
    for d0 in darts:
        idx = {d0: 0}
        order = [d0]
        i = 0
        while i < len(order):
            d = order[i]
            for nb in (nxt[d], (d[1], d[0])):
                if nb not in idx:
                    idx[nb] = len(order)
                    order.append(nb)
            i += 1
        code = tuple((idx[nxt[d]], idx[(d[1], d[0])], P.label(d)) for d in order)
        if best is None or code < best:
            best = code
    return best


def canonical_form(P: CombinatorialPolyhedron) -> tuple:
    """Labeled planar-map invariant; equal iff isomorphic (reflections allowed)."""
    return min(_dart_code(P), _dart_code(P.mirror()))


def is_isomorphic(P: CombinatorialPolyhedron, Q: CombinatorialPolyhedron) -> bool:
    if (P.V, P.E, P.F) != (Q.V, Q.E, Q.F):
        return False
    return canonical_form(P) == canonical_form(Q)


# file format


def load_polyhedron(text: str, name: str = "") -> CombinatorialPolyhedron:
    """Parse the ``faces`` / ``angles`` text format."""
    section = None
    faces, labels = [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        low = line.lower()
        if low in ("faces", "angles"):
            section = low
            continue
        if low.startswith("name "):
            name = name or line[5:].strip()
            continue
        toks = line.split()
        try:
            nums = [int(x) for x in toks]
        except ValueError:
            raise PolyhedronError(f"line {lineno}: expected integers, got {line!r}") from None
        if section == "faces":
            faces.append(nums)
        elif section == "angles":
            if len(nums) != 3:
                raise PolyhedronError(f"line {lineno}: angle lines are 'v1 v2 m'")
            u, v, m = nums
            if m < 2:
                raise PolyhedronError(f"line {lineno}: label {m} < 2")
            e = _edge(u, v)
            if e in labels and labels[e] != m:
                raise PolyhedronError(f"line {lineno}: conflicting label for edge {e}")
            labels[e] = m
        else:
            raise PolyhedronError(f"line {lineno}: data before a 'faces' or 'angles' header")
    if not faces:
        raise PolyhedronError("no faces section")
    return CombinatorialPolyhedron(faces, labels, name)


def format_polyhedron(P: CombinatorialPolyhedron) -> str:
    lines = []
    if P.name:
        lines.append(f"name {P.name}")
    lines.append("faces")
    lines.extend(" ".join(map(str, f)) for f in P.faces)
    lines.append("angles")
    lines.extend(f"{a} {b} {m}" for (a, b), m in sorted(P.labels.items()))
    return "\n".join(lines) + "\n"
