"""Built-in cone corpus: orthants, cones over polygons, cube, octahedron."""

from __future__ import annotations

from dataclasses import dataclass

from .cones import FaceLattice, Vector, face_lattice


@dataclass(frozen=True)
class ConeSpec:
    """A named cone given by ray generators, with optional expected counts."""

    name: str
    rank: int
    rays: tuple[Vector, ...]
    expected_face_counts: tuple[int, ...] = ()

    def lattice(self) -> FaceLattice:
        return face_lattice(list(self.rays), rank=self.rank)

    def to_json_obj(self) -> dict:
        return {"name": self.name, "rank": self.rank, "rays": [list(r) for r in self.rays]}


def orthant(n: int) -> ConeSpec:
    rays = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return ConeSpec(
        name=f"orthant-{n}",
        rank=n,
        rays=rays,
        expected_face_counts=tuple(
            _binomial(n, k) for k in range(n + 1)
        ),
    )


def _binomial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def polygon_cone(m: int) -> ConeSpec:
    """Cone over a convex m-gon at height 1 (integer vertices)."""
    if m == 3:
        verts = [(0, 0), (1, 0), (0, 1)]
    elif m == 4:
        verts = [(0, 0), (1, 0), (0, 1), (1, 1)]
    else:
        # vertices on a parabola are in convex position for every m
        verts = [(k, k * k) for k in range(m)]
    rays = tuple((x, y, 1) for x, y in verts)
    return ConeSpec(
        name=f"polygon-{m}", rank=3, rays=rays, expected_face_counts=(1, m, m, 1)
    )


POINT = ConeSpec(name="point", rank=0, rays=(), expected_face_counts=(1,))

CUBE = ConeSpec(
    name="cube",
    rank=4,
    rays=tuple((x, y, z, 1) for x in (0, 1) for y in (0, 1) for z in (0, 1)),
    expected_face_counts=(1, 8, 12, 6, 1),
)

OCTAHEDRON = ConeSpec(
    name="octahedron",
    rank=4,
    rays=(
        (1, 0, 0, 1),
        (-1, 0, 0, 1),
        (0, 1, 0, 1),
        (0, -1, 0, 1),
        (0, 0, 1, 1),
        (0, 0, -1, 1),
    ),
    expected_face_counts=(1, 6, 12, 8, 1),
)

CORPUS: tuple[ConeSpec, ...] = (
    POINT,
    orthant(1),
    orthant(2),
    orthant(3),
    orthant(4),
    polygon_cone(3),
    polygon_cone(4),
    polygon_cone(5),
    polygon_cone(6),
    polygon_cone(7),
    polygon_cone(8),
    CUBE,
    OCTAHEDRON,
)


def corpus_by_name(name: str) -> ConeSpec:
    for spec in CORPUS:
        if spec.name == name:
            return spec
    raise KeyError(f"no corpus cone named {name!r}")


def load_cone_spec(obj: dict) -> ConeSpec:
    """Parse the CLI input format {"name", "rank", "rays"}."""
    if not isinstance(obj, dict):
        raise ValueError("cone spec must be a JSON object")
    try:
        rank = int(obj["rank"])
        rays = tuple(tuple(int(x) for x in r) for r in obj["rays"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed cone spec: {exc}") from exc
    name = str(obj.get("name", "cone"))
    if any(len(r) != rank for r in rays):
        raise ValueError("every ray must have exactly `rank` entries")
    expected = obj.get("expected_face_counts", ())
    try:
        expected = tuple(int(x) for x in expected)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed expected_face_counts: {exc}") from exc
    return ConeSpec(
        name=name, rank=rank, rays=rays, expected_face_counts=expected
    )
