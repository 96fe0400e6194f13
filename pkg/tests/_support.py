"""Shared builders for the tests."""

import random

from coxgrowth.catalog import octahedron, square_antiprism, square_pyramid, triangular_bipyramid
from coxgrowth.polyhedron import (
    CUSP_2222,
    CombinatorialPolyhedron,
    PolyhedronError,
    is_isomorphic,
    open_cusp,
    pinch,
    vertex_labels,
)

CUBE_FACES = ((0, 1, 2, 3), (4, 7, 6, 5), (0, 4, 5, 1), (1, 5, 6, 2), (2, 6, 7, 3), (3, 7, 4, 0))
TETRA_FACES = ((0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0))

# criterion number -> summary line, printed at the end of the session by conftest
ACCEPTANCE_RESULTS = {}


def with_labels(faces, labels=None, default=2, name=""):
    lab = {}
    for f in faces:
        for a, b in zip(f, f[1:] + f[:1]):
            lab[(min(a, b), max(a, b))] = default
    lab.update({(min(e), max(e)): m for e, m in (labels or {}).items()})
    return CombinatorialPolyhedron(faces, lab, name)


def cusps_2222(P):
    return [v for v in P.vertices if P.valence(v) == 4 and tuple(sorted(vertex_labels(P, v))) == CUSP_2222]


def pinchable_edges(P):
    out = []
    for e in P.edges:
        m = P.label(e)
        if m >= 7 and all(sorted(vertex_labels(P, x)) == [2, 2, m] for x in e):
            out.append(e)
    return out


def random_relabel(P, rng):
    """Shuffle vertex ids (an isomorphic copy)."""
    ids = list(P.vertices)
    new = ids[:]
    rng.shuffle(new)
    perm = dict(zip(ids, [n + 100 for n in new]))
    faces = [tuple(perm[v] for v in f) for f in P.faces]
    labels = {(perm[a], perm[b]): m for (a, b), m in P.labels.items()}
    return CombinatorialPolyhedron(faces, labels, P.name)


def random_valid_polyhedron(rng: random.Random):
    """A right-angled ideal polyhedron with a random number of cusps opened."""
    base = rng.choice([octahedron, square_antiprism, triangular_bipyramid, square_pyramid])()
    P = base
    for _ in range(rng.randint(0, 3)):
        cusps = cusps_2222(P)
        if len(cusps) <= 1:
            break
        try:
            P = open_cusp(P, rng.choice(cusps), rng.randint(0, 1), rng.randint(7, 12))
        except PolyhedronError:
            continue
    return P


def pairing_restoring(P, edge):
    """The pairing that reopens the cusp produced by pinching ``edge`` into the same faces."""
    Q = pinch(P, edge)
    v = min(edge)
    fa, fb = P.edge_faces[(min(edge), max(edge))]
    rot = Q.rotation(v)
    return Q, v, 0 if {rot[0], rot[2]} == {fa, fb} else 1


def roundtrip_cases(n: int, seed: int = 2024):
    """n tuples (kind, original, result) exercising pinch/open in both orders."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        P = random_valid_polyhedron(rng)
        if len(out) % 2 == 0:
            cusps = cusps_2222(P)
            if not cusps:
                continue
            v = rng.choice(cusps)
            m = rng.randint(7, 15)
            try:
                R = open_cusp(P, v, rng.randint(0, 1), m)
            except PolyhedronError:
                continue
            new_edge = next(e for e in R.edges if R.label(e) == m and v in e and set(e) - set(P.vertices))
            out.append(("pinch(open)", P, pinch(R, new_edge)))
        else:
            edges = pinchable_edges(P)
            if not edges:
                continue
            e = rng.choice(edges)
            Q, v, pairing = pairing_restoring(P, e)
            out.append(("open(pinch)", P, open_cusp(Q, v, pairing, P.label(e))))
    return out


def roundtrips_ok(cases) -> bool:
    return all(is_isomorphic(a, b) for _, a, b in cases)
