"""Small combinatorial polyhedra and the bundled catalog files.

The builder functions return labeled polyhedra directly; the catalog files
under ``catalog/`` are written from them (see ``write_catalog``) and are
what the command line and the tests load.
"""

from __future__ import annotations

from importlib import resources
from typing import Mapping, Optional

from .polyhedron import CombinatorialPolyhedron, format_polyhedron, load_polyhedron, open_cusp


def _edges_of(faces) -> set:
    out = set()
    for f in faces:
        for a, b in zip(f, f[1:] + f[:1]):
            out.add((min(a, b), max(a, b)))
    return out


def _build(faces, labels: Optional[Mapping] = None, name: str = "", default: int = 2) -> CombinatorialPolyhedron:
    faces = [tuple(f) for f in faces]
    lab = {e: default for e in _edges_of(faces)}
    for (a, b), m in (labels or {}).items():
        e = (min(a, b), max(a, b))
        if e not in lab:
            raise KeyError(f"{e} is not an edge")
        lab[e] = m
    return CombinatorialPolyhedron(faces, lab, name)


# Vertex numbering for the triangular prism: top triangle 0 1 2, bottom 3 4 5,
# with vertical edges (0,3), (1,4), (2,5).
PRISM_FACES = ((0, 1, 2), (3, 5, 4), (0, 3, 4, 1), (1, 4, 5, 2), (2, 5, 3, 0))
PRISM_EDGES = tuple(sorted(_edges_of(PRISM_FACES)))
# where the three side faces meet
PRISM_VERTICAL_EDGES = ((0, 3), (1, 4), (2, 5))

# Square pyramid: apex 0 over the base cycle 1 2 3 4.
PYRAMID_FACES = ((1, 4, 3, 2), (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1))

# Octahedron: poles 0 and 5 over the equator 1 2 3 4.
OCTAHEDRON_FACES = tuple(
    f for i in range(4) for f in ((0, 1 + i, 1 + (i + 1) % 4), (5, 1 + (i + 1) % 4, 1 + i))
)

# Triangular bipyramid: poles 0 and 4 over the equator 1 2 3.
BIPYRAMID_FACES = tuple(
    f for i in range(3) for f in ((0, 1 + i, 1 + (i + 1) % 3), (4, 1 + (i + 1) % 3, 1 + i))
)

# Square antiprism: top square 0..3, bottom square 4..7.
ANTIPRISM_FACES = ((0, 1, 2, 3), (7, 6, 5, 4)) + tuple(
    f for i in range(4) for f in ((i, 4 + i, (i + 1) % 4), ((i + 1) % 4, 4 + i, 4 + (i + 1) % 4))
)


def triangular_prism(labels: Optional[Mapping] = None, name: str = "triangular prism") -> CombinatorialPolyhedron:
    return _build(PRISM_FACES, labels, name)


def square_pyramid(labels: Optional[Mapping] = None, name: str = "square pyramid") -> CombinatorialPolyhedron:
    return _build(PYRAMID_FACES, labels, name)


def octahedron(labels: Optional[Mapping] = None, name: str = "octahedron") -> CombinatorialPolyhedron:
    return _build(OCTAHEDRON_FACES, labels, name)


def triangular_bipyramid(labels: Optional[Mapping] = None, name: str = "triangular bipyramid") -> CombinatorialPolyhedron:
    return _build(BIPYRAMID_FACES, labels, name)


def square_antiprism(labels: Optional[Mapping] = None, name: str = "square antiprism") -> CombinatorialPolyhedron:
    return _build(ANTIPRISM_FACES, labels, name)


def equality_pyramid(m1: int, m2: Optional[int] = None) -> CombinatorialPolyhedron:
    """Square pyramid with a right-angled apex cusp and base edges m1, 2, m2, 2.

    Every base vertex is of type (2,2,m): this is the census of the
    equality case k = F - 3.  Andreev's condition (e) fails for it, so it is
    an abstract polyhedron rather than a hyperbolic one.
    """
    m2 = m1 if m2 is None else m2
    return square_pyramid({(1, 2): m1, (3, 4): m2}, f"pyramid k=F-3 m=({m1},{m2})")


def opened_octahedron(ms, name: Optional[str] = None) -> CombinatorialPolyhedron:
    """Right-angled ideal octahedron with one cusp opened per entry of ``ms``.

    Cusps are opened at vertices 0, 1, 2, ... in turn, always with pairing 0.
    """
    P = octahedron()
    for v, m in enumerate(ms):
        P = open_cusp(P, v, 0, m)
    return CombinatorialPolyhedron(P.faces, P.labels, name or f"octahedron opened {tuple(ms)}")


def opened_bipyramid(m1: int, m2: int) -> CombinatorialPolyhedron:
    """Six facets, one (2,2,2,2) cusp and two large-label edges, all other angles right."""
    P = triangular_bipyramid()
    P = open_cusp(P, 1, 0, m1)
    P = open_cusp(P, 2, 0, m2)
    return CombinatorialPolyhedron(P.faces, P.labels, f"bipyramid opened ({m1},{m2})")


def case1_prism(m: int) -> CombinatorialPolyhedron:
    """Prism with a pi/m vertical edge and a (2,4,4) cusp."""
    return triangular_prism({(0, 3): m, (1, 2): 4, (1, 4): 4}, f"prism case I m={m}")


def case2_prism(m: int) -> CombinatorialPolyhedron:
    """Prism with a pi/m vertical edge and a (2,3,6) cusp."""
    return triangular_prism({(0, 3): m, (1, 2): 3, (1, 4): 6}, f"prism case II m={m}")


def _catalog_builders() -> dict:
    return {
        "octahedron_ideal": lambda: octahedron(name="octahedron_ideal"),
        "antiprism_ideal": lambda: square_antiprism(name="antiprism_ideal"),
        "pyramid_3333": lambda: square_pyramid({(1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 1): 3}, "pyramid_3333"),
        "prism_case2_reduced": lambda: triangular_prism({(0, 3): 6, (1, 2): 3, (1, 4): 6}, "prism_case2_reduced"),
        "prism_case1_m7": lambda: _renamed(case1_prism(7), "prism_case1_m7"),
        "prism_case2_m7": lambda: _renamed(case2_prism(7), "prism_case2_m7"),
        "octahedron_open1": lambda: opened_octahedron([7], "octahedron_open1"),
        "octahedron_open2": lambda: opened_octahedron([7, 9], "octahedron_open2"),
        "octahedron_open3": lambda: opened_octahedron([7, 9, 8], "octahedron_open3"),
        "octahedron_open5": lambda: opened_octahedron([7] * 5, "octahedron_open5"),
        "bipyramid_open_9_7": lambda: _renamed(opened_bipyramid(9, 7), "bipyramid_open_9_7"),
        "pyramid_equality_m7": lambda: _renamed(equality_pyramid(7), "pyramid_equality_m7"),
    }


def _renamed(P: CombinatorialPolyhedron, name: str) -> CombinatorialPolyhedron:
    return CombinatorialPolyhedron(P.faces, P.labels, name)


CATALOG_NAMES = tuple(_catalog_builders())


def build_catalog_entry(name: str) -> CombinatorialPolyhedron:
    return _catalog_builders()[name]()


def catalog_text(name: str) -> str:
    return resources.files(__package__).joinpath("catalog", f"{name}.poly").read_text()


def load_catalog_entry(name: str) -> CombinatorialPolyhedron:
    if name not in CATALOG_NAMES:
        raise KeyError(f"unknown catalog entry {name!r}")
    return load_polyhedron(catalog_text(name), name)


def load_catalog() -> dict:
    """Every bundled polyhedron, keyed by name, in a fixed order."""
    return {name: load_catalog_entry(name) for name in CATALOG_NAMES}


def write_catalog(directory) -> list:
    """Regenerate the ``.poly`` files from the builders; returns the paths written."""
    from pathlib import Path

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name in CATALOG_NAMES:
        path = directory / f"{name}.poly"
        path.write_text(format_polyhedron(build_catalog_entry(name)))
        out.append(path)
    return out
