"""Simplicial subdivisions of a cone and their multiplicity tables.

Two constructions are provided:

  * ``barycentric_subdivision``: one interior ray per nonzero face (the
    primitive sum of the face's ray generators); maximal cones correspond to
    maximal chains of nonzero faces.  Built directly from chains, so that the
    chain-counting oracle is an independent cross-check of the multiplicity
    table rather than a restatement of the construction.
  * ``stellar_subdivision`` and the staged ``interior_ray_subdivision``
    recipe: star subdivision at an interior ray of a face, applied to every
    face of dimension >= 3 in decreasing dimension order.  Low-dimensional
    faces are already simplicial, so the result is a simplicial fan.

The multiplicity table d_l(tau) counts l-dimensional cones of the subdivision
whose minimal containing face of sigma is tau.  The minimal containing face is
located exactly: the sum of a cone's primitive ray generators lies in the
relative interior of precisely that face.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .cones import (
    FaceLattice,
    Vector,
    dot,
    dual_cone,
    primitive,
    primitive_from_rational,
    rank_of,
    vector_sum,
)
from .errors import NotSimplicialResult
from .linalg import rref

ConeSet = frozenset[int]


class _ConeGeom:
    """Exact membership and face enumeration for a cone of arbitrary rank."""

    def __init__(self, ray_vectors: list[Vector]):
        self.rays = list(ray_vectors)
        self.dim = rank_of(self.rays)
        # basis of the span as echelon rows; coordinates read off pivot columns
        self.span_basis, self.pivot_cols = rref([list(r) for r in self.rays])
        span_coords = [self._span_coords(r) for r in self.rays]
        if self.dim:
            int_coords = [
                primitive_from_rational(c) if any(c) else tuple(c) for c in span_coords
            ]
            self.span_normals = dual_cone(int_coords, self.dim)
            self.int_coords = int_coords
        else:
            self.span_normals = []
            self.int_coords = []

    def _span_coords(self, vec) -> tuple | None:
        coords = [Fraction(vec[c]) for c in self.pivot_cols]
        n = len(vec)
        for j in range(n):
            s = sum(
                (coef * row[j] for coef, row in zip(coords, self.span_basis)),
                Fraction(0),
            )
            if s != Fraction(vec[j]):
                return None
        return tuple(coords)

    def contains(self, vec: Vector) -> bool:
        coords = self._span_coords(vec)
        if coords is None:
            return False
        if self.dim == 0:
            return not any(vec)
        scaled = primitive_from_rational(coords) if any(coords) else (0,) * self.dim
        return all(dot(u, scaled) >= 0 for u in self.span_normals)

    def local_faces(self) -> set[frozenset[int]]:
        """All faces of the cone, as sets of local ray indices."""
        n_normals = len(self.span_normals)
        out: set[frozenset[int]] = set()
        for size in range(n_normals + 1):
            for subset in itertools.combinations(range(n_normals), size):
                zero = frozenset(
                    i
                    for i, r in enumerate(self.int_coords)
                    if all(dot(self.span_normals[s], r) == 0 for s in subset)
                )
                out.add(zero)
        if self.dim == 0:
            out.add(frozenset())
        return out


@dataclass
class SubdivisionMap:
    """A subdivision of sigma together with the minimal-containing-face map.

    ``rays`` starts with sigma's own rays (same indices as the lattice), then
    any added interior rays; ``ray_face`` tags each ray with the face of sigma
    whose relative interior contains it.  ``cones`` contains every cone of the
    subdivision including the zero cone (the empty index set).
    """

    lattice: FaceLattice
    rays: list[Vector]
    ray_face: list[int]
    cones: set[ConeSet]
    maximal: list[ConeSet]
    pushforward: dict[ConeSet, int] = field(default_factory=dict)
    kind: str = ""

    def __post_init__(self):
        if not self.pushforward:
            self.pushforward = {c: self._locate(c) for c in self.cones}

    def _locate(self, cone: ConeSet) -> int:
        point = vector_sum([self.rays[i] for i in cone], self.lattice.rank)
        return self.lattice.face_of_point(point)

    def cone_dim(self, cone: ConeSet) -> int:
        return rank_of([self.rays[i] for i in cone])

    def is_simplicial(self) -> bool:
        return all(self.cone_dim(c) == len(c) for c in self.cones)

    def cones_by_dim(self) -> dict[int, list[ConeSet]]:
        out: dict[int, list[ConeSet]] = {}
        for c in self.cones:
            out.setdefault(len(c), []).append(c)
        for lst in out.values():
            lst.sort(key=sorted)
        return out

    def added_rays(self) -> list[tuple[int, Vector, int]]:
        n0 = len(self.lattice.rays)
        return [
            (i, self.rays[i], self.ray_face[i]) for i in range(n0, len(self.rays))
        ]

    def to_json_obj(self) -> dict:
        return {
            "added_rays": [
                {"index": i, "vector": list(v), "face_id": f}
                for i, v, f in self.added_rays()
            ],
            "maximal_cones": sorted(sorted(c) for c in self.maximal),
        }


class MultiplicityTable:
    """Counts d_l(tau) of l-dimensional subdivision cones lying over tau."""

    def __init__(self, counts: dict[tuple[int, int], int], lattice: FaceLattice):
        self.counts = dict(counts)
        self.lattice = lattice

    def get(self, l: int, tau: int) -> int:
        return self.counts.get((l, tau), 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def to_json_obj(self) -> dict:
        rows = [
            {"tau": tau, "l": l, "count": c}
            for (l, tau), c in sorted(self.counts.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        ]
        return {"d": rows}


def multiplicity_table(sub: SubdivisionMap) -> MultiplicityTable:
    counts: dict[tuple[int, int], int] = {}
    for cone in sub.cones:
        l = len(cone)
        tau = sub.pushforward[cone]
        counts[(l, tau)] = counts.get((l, tau), 0) + 1
    table = MultiplicityTable(counts, sub.lattice)
    for (l, tau), c in counts.items():
        assert l <= sub.lattice.dim(tau), "a cone cannot exceed its minimal face"
        if l == 0:
            assert tau == sub.lattice.zero_id and c == 1
    assert table.total() == len(sub.cones)
    return table


def barycentric_subdivision(lattice: FaceLattice) -> SubdivisionMap:
    """The subdivision whose maximal cones are maximal chains of nonzero faces."""
    n = lattice.rank
    rays: list[Vector] = list(lattice.rays)
    ray_face: list[int] = [0] * len(rays)
    face_ray: dict[int, int] = {}
    for f in lattice.faces:
        if f.dim == 1:
            (ri,) = f.rays
            face_ray[f.id] = ri
            ray_face[ri] = f.id
    for f in lattice.faces:
        if f.dim >= 2:
            vec = primitive(
                vector_sum([lattice.rays[i] for i in sorted(f.rays)], n)
            )
            face_ray[f.id] = len(rays)
            rays.append(vec)
            ray_face.append(f.id)

    # enumerate chains of nonzero faces by increasing top face
    chains_to: dict[int, list[tuple[int, ...]]] = {}
    for f in sorted((f for f in lattice.faces if f.dim >= 1), key=lambda f: f.dim):
        chains = [(f.id,)]
        for g in lattice.faces:
            if 1 <= g.dim < f.dim and lattice.leq(g.id, f.id):
                chains.extend(ch + (f.id,) for ch in chains_to[g.id])
        chains_to[f.id] = chains

    cones: set[ConeSet] = {frozenset()}
    chain_of: dict[ConeSet, tuple[int, ...]] = {}
    for f_id, chains in chains_to.items():
        for ch in chains:
            cone = frozenset(face_ray[fid] for fid in ch)
            cones.add(cone)
            chain_of[cone] = ch
    maximal = sorted(
        (c for c, ch in chain_of.items() if len(ch) == n), key=sorted
    )
    if n == 0:
        maximal = [frozenset()]

    sub = SubdivisionMap(
        lattice=lattice,
        rays=rays,
        ray_face=ray_face,
        cones=cones,
        maximal=maximal,
        kind="barycentric",
    )
    for cone, ch in chain_of.items():
        assert rank_of([rays[i] for i in cone]) == len(cone), "chain cone not simplicial"
        assert sub.pushforward[cone] == ch[-1], "pushforward must be the chain top"
    return sub


def fan_of_lattice(lattice: FaceLattice) -> SubdivisionMap:
    """Sigma itself, viewed as the trivial (identity) subdivision."""
    cones = {f.rays for f in lattice.faces}
    ray_face = [0] * len(lattice.rays)
    for f in lattice.faces:
        if f.dim == 1:
            (ri,) = f.rays
            ray_face[ri] = f.id
    return SubdivisionMap(
        lattice=lattice,
        rays=list(lattice.rays),
        ray_face=ray_face,
        cones=set(cones),
        maximal=[lattice.faces[lattice.top_id].rays],
        kind="identity",
    )


def stellar_subdivision(sub: SubdivisionMap, face_id: int) -> SubdivisionMap:
    """Star subdivision at an interior ray of a face of sigma.

    The new ray is the primitive sum of the face's primitive ray generators.
    Cones containing the new ray are replaced by joins of the ray with the
    faces of those cones that do not contain it.  Subdividing a 1-dimensional
    face only re-tags the existing ray.
    """
    lattice = sub.lattice
    face = lattice.faces[face_id]
    if face.dim == 0:
        raise ValueError("cannot subdivide the zero face")
    if face.dim == 1:
        return SubdivisionMap(
            lattice=lattice,
            rays=list(sub.rays),
            ray_face=list(sub.ray_face),
            cones=set(sub.cones),
            maximal=list(sub.maximal),
            kind=sub.kind,
        )
    for idx, vec, tagged in sub.added_rays():
        if tagged == face_id:
            raise ValueError(
                f"face {face_id} already carries an interior ray; "
                "subdivide in weakly decreasing dimension order"
            )
    rho = primitive(vector_sum([lattice.rays[i] for i in sorted(face.rays)], lattice.rank))
    if rho in sub.rays:
        raise ValueError("the interior ray of the face is already present")
    rho_idx = len(sub.rays)
    rays = list(sub.rays) + [rho]
    ray_face = list(sub.ray_face) + [face_id]

    geom: dict[ConeSet, _ConeGeom] = {
        c: _ConeGeom([sub.rays[i] for i in sorted(c)]) for c in sub.cones
    }
    ray_pos: dict[ConeSet, list[int]] = {c: sorted(c) for c in sub.cones}
    containing = {c for c in sub.cones if geom[c].contains(rho)}
    new_cones: set[ConeSet] = {c for c in sub.cones if c not in containing}
    for c in containing:
        for loc in geom[c].local_faces():
            g = frozenset(ray_pos[c][i] for i in loc)
            assert g in sub.cones, "fan is not closed under faces"
            if g in containing:
                continue
            new_cones.add(g | {rho_idx})
    maximal = [
        c for c in new_cones if not any(c < d for d in new_cones)
    ]
    return SubdivisionMap(
        lattice=lattice,
        rays=rays,
        ray_face=ray_face,
        cones=new_cones,
        maximal=sorted(maximal, key=sorted),
        kind="stellar",
    )


def interior_ray_subdivision(lattice: FaceLattice) -> SubdivisionMap:
    """Interior rays added to every face of dimension >= 3, largest first.

    Faces of dimension <= 2 are simplicial already, so the result is a
    simplicial subdivision; this is validated, not assumed.
    """
    sub = fan_of_lattice(lattice)
    for d in range(lattice.rank, 2, -1):
        for fid in lattice.faces_of_dim(d):
            sub = stellar_subdivision(sub, fid)
    sub.kind = "interior-ray"
    if not sub.is_simplicial():
        raise NotSimplicialResult(
            "staged interior-ray subdivision left a non-simplicial cone"
        )
    for c in sub.maximal:
        if len(c) != lattice.rank:
            raise NotSimplicialResult("maximal cones must be full-dimensional")
    return sub


class ChainCounter:
    """Counts chains lo < v_1 < ... < v_l = el of faces strictly above lo."""

    def __init__(self, lattice: FaceLattice):
        self.lattice = lattice
        self._memo: dict[tuple[int, int, int], int] = {}

    def count(self, lo: int, el: int, length: int) -> int:
        if el == lo:
            return 1 if length == 0 else 0
        if length <= 0:
            return 0
        if length == 1:
            return 1 if self.lattice.leq(lo, el) else 0
        key = (lo, el, length)
        if key not in self._memo:
            total = 0
            for mid in self.lattice.strictly_between(lo, el):
                total += self.count(lo, mid, length - 1)
            self._memo[key] = total
        return self._memo[key]


def chain_counter(lattice: FaceLattice) -> ChainCounter:
    counter = getattr(lattice, "_chain_counter", None)
    if counter is None:
        counter = ChainCounter(lattice)
        lattice._chain_counter = counter
    return counter


def chain_count_oracle(lattice: FaceLattice, tau: int, length: int) -> int:
    """Number of chains of nonzero faces of the given length ending at tau."""
    return chain_counter(lattice).count(lattice.zero_id, tau, length)


def in_simplicial_cone(sub: SubdivisionMap, cone: ConeSet, point) -> bool:
    """Exact membership of a rational point in a simplicial cone of the fan."""
    idx = sorted(cone)
    if not idx:
        return not any(point)
    rows = [[Fraction(sub.rays[i][j]) for i in idx] for j in range(sub.lattice.rank)]
    aug = [row + [Fraction(point[j])] for j, row in enumerate(rows)]
    reduced, pivots = rref(aug)
    width = len(idx)
    if width in pivots:
        return False  # inconsistent system: point outside the span
    coeffs = [Fraction(0)] * width
    for r, p in zip(reduced, pivots):
        coeffs[p] = r[width]
    recon = [
        sum((coeffs[k] * sub.rays[idx[k]][j] for k in range(width)), Fraction(0))
        for j in range(sub.lattice.rank)
    ]
    if any(recon[j] != Fraction(point[j]) for j in range(sub.lattice.rank)):
        return False
    return all(c >= 0 for c in coeffs)


def validate_subdivision(sub: SubdivisionMap, samples: int = 0) -> None:
    """Desk-scale fan validity checks: simpliciality, tags, disjoint interiors."""
    lattice = sub.lattice
    n = lattice.rank
    assert sub.is_simplicial()
    for c in sub.maximal:
        assert len(c) == n
    for idx, vec, fid in sub.added_rays():
        assert lattice.face_of_point(vec) == fid
    for cone, tau in sub.pushforward.items():
        face = lattice.faces[tau]
        for i in cone:
            for s in face.normals:
                assert dot(lattice.dual_generators[s], sub.rays[i]) == 0
    # pairwise disjoint interiors, probed at relative interior points
    points = {
        c: vector_sum([sub.rays[i] for i in c], n) for c in sub.maximal
    }
    for c in sub.maximal:
        for d in sub.maximal:
            if c != d and len(c) == n:
                assert not in_simplicial_cone(sub, d, points[c])
