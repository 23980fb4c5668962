"""Shellability of simplicial complexes and of barycentric boundary complexes.

The public operations work on abstract simplicial complexes (facets are
vertex sets; coordinates are never consulted):

  * ``verify_shelling`` checks a facet order by the unique-minimal-new-face
    characterization: at each step the faces not seen earlier must form an
    interval [R, F].  The restriction face R gives the facet's type |R|.
  * ``find_shelling`` searches for a shelling order by depth-first extension
    with backtracking, memoizing dead prefix sets (step validity depends only
    on the set of earlier facets, not their order).
  * ``lexicographic_shelling`` builds the recursive lexicographic order on
    the maximal chains of a face lattice, the barycentric analogue of a line
    shelling: chains are compared at the largest level where they differ,
    using per-chain-prefix shellings of polytope boundary complexes.

The polytope boundary complexes needed by the lexicographic construction are
not simplicial (e.g. the square facets of a cube), so a small recursive
verifier/searcher for polytopal shellings over the face lattice is included;
its complexes never exceed a handful of facets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cones import FaceLattice
from .errors import NoShellingFound, NotAShelling, NotPure, ShellingSearchFailed
from .subdivision import SubdivisionMap, barycentric_subdivision


@dataclass
class SimplicialComplex:
    """A pure abstract simplicial complex given by its facets."""

    facets: list[frozenset[int]]

    def __post_init__(self):
        if not self.facets:
            raise ValueError("a complex needs at least one facet")
        sizes = {len(f) for f in self.facets}
        if len(sizes) != 1:
            raise NotPure(f"facet sizes {sorted(sizes)} are mixed")
        if len(set(self.facets)) != len(self.facets):
            raise ValueError("duplicate facets")

    @property
    def facet_size(self) -> int:
        return len(self.facets[0])

    @property
    def vertices(self) -> set[int]:
        out: set[int] = set()
        for f in self.facets:
            out |= f
        return out


@dataclass
class ShellingOrder:
    """A verified shelling: facet order, per-facet types, restriction faces."""

    order: list[frozenset[int]]
    types: list[int]
    restriction: list[frozenset[int]]

    def type_histogram(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for t in self.types:
            out[t] = out.get(t, 0) + 1
        return out

    def to_json_obj(self) -> dict:
        return {
            "order": [sorted(f) for f in self.order],
            "types": list(self.types),
            "restriction_faces": [sorted(r) for r in self.restriction],
            "type_histogram": {str(k): v for k, v in sorted(self.type_histogram().items())},
        }


def complex_from_fan(sub: SubdivisionMap) -> SimplicialComplex:
    """Vertex sets of the maximal cones, with the cone point dropped."""
    return SimplicialComplex(facets=sorted(sub.maximal, key=sorted))


def _step_restriction(
    facet: frozenset[int], earlier: list[frozenset[int]]
) -> frozenset[int] | None:
    """The unique minimal new face at this step, or None if the step fails.

    A subset of ``facet`` is old when it lies in an earlier facet.  The step
    is valid when the old subsets are exactly those missing some vertex of
    the candidate restriction face R = {v : facet - v is old}, R nonempty.
    """
    restriction = frozenset(
        v for v in facet if any(facet - {v} <= e for e in earlier)
    )
    if not restriction:
        return None
    for size in range(len(facet) + 1):
        for subset in itertools.combinations(sorted(facet), size):
            s = frozenset(subset)
            old = any(s <= e for e in earlier)
            if old != (not restriction <= s):
                return None
    return restriction


def verify_shelling(
    complex: SimplicialComplex, order: list[frozenset[int]]
) -> ShellingOrder:
    """Check a facet order; raises NotAShelling at the first violating index."""
    if sorted(order, key=sorted) != sorted(complex.facets, key=sorted):
        raise ValueError("order is not a permutation of the facets")
    types = [0]
    restriction: list[frozenset[int]] = [frozenset()]
    for j in range(1, len(order)):
        r = _step_restriction(order[j], order[:j])
        if r is None:
            raise NotAShelling(j)
        types.append(len(r))
        restriction.append(r)
    return ShellingOrder(order=list(order), types=types, restriction=restriction)


def find_shelling(complex: SimplicialComplex) -> ShellingOrder:
    """Depth-first search for a shelling order; raises NoShellingFound."""
    facets = sorted(complex.facets, key=sorted)
    n = len(facets)
    dead: set[frozenset[int]] = set()

    def extend(order: list[int], used: frozenset[int]) -> list[int] | None:
        if len(order) == n:
            return list(order)
        if used in dead:
            return None
        for i in range(n):
            if i in used:
                continue
            if order and _step_restriction(facets[i], [facets[k] for k in order]) is None:
                continue
            order.append(i)
            found = extend(order, used | {i})
            if found is not None:
                return found
            order.pop()
        dead.add(used)
        return None

    found = extend([], frozenset())
    if found is None:
        raise NoShellingFound(f"no shelling exists for {n} facets")
    return verify_shelling(complex, [facets[i] for i in found])


# ---------------------------------------------------------------------------
# Polytopal shellings of boundary complexes of lattice faces (internal).
# ---------------------------------------------------------------------------


class _BoundaryShellings:
    """Shellings of C(boundary of a face), with a prescribed leading set.

    Facets of the boundary complex of a face F are the lattice faces covered
    by F.  A shelling step is valid when the intersection with the earlier
    facets is a nonempty union of codimension-1 faces that itself starts some
    shelling of the new facet's boundary (checked recursively; dimension-0
    boundaries accept every order).
    """

    def __init__(self, lattice: FaceLattice):
        self.lattice = lattice
        self._memo: dict[tuple[int, frozenset[int]], tuple[int, ...] | None] = {}

    def _meets_restriction(
        self, new_facet: int, earlier: list[int]
    ) -> frozenset[int] | None:
        """Maximal meet faces if they are codim-1 in ``new_facet``, else None."""
        lat = self.lattice
        meets = {lat.meet(new_facet, e) for e in earlier}
        meets.discard(lat.zero_id)
        if not meets:
            return None
        maximal = [
            m for m in meets if not any(m != m2 and lat.leq(m, m2) for m2 in meets)
        ]
        want = lat.dim(new_facet) - 1
        if any(lat.dim(m) != want for m in maximal):
            return None
        return frozenset(maximal)

    def step_ok(self, new_facet: int, earlier: list[int]) -> bool:
        if not earlier:
            return self.shelling_with_prefix(new_facet, frozenset()) is not None
        prefix = self._meets_restriction(new_facet, earlier)
        if prefix is None:
            return False
        return self.shelling_with_prefix(new_facet, prefix) is not None

    def shelling_with_prefix(
        self, fid: int, prefix: frozenset[int]
    ) -> tuple[int, ...] | None:
        """A shelling of C(boundary of fid) whose leading set is ``prefix``."""
        lat = self.lattice
        key = (fid, prefix)
        if key in self._memo:
            return self._memo[key]
        facets = lat.facets_of(fid)
        if lat.dim(fid) <= 1:
            raise ShellingSearchFailed("boundary shelling of a ray is undefined")
        if lat.dim(fid) == 2:
            # boundary is two points: every order works
            order = tuple(sorted(prefix)) + tuple(sorted(set(facets) - prefix))
            self._memo[key] = order
            return order

        def extend(order: list[int], used: frozenset[int]) -> tuple[int, ...] | None:
            if len(order) == len(facets):
                return tuple(order)
            for cand in facets:
                if cand in used:
                    continue
                if len(order) < len(prefix) and cand not in prefix:
                    continue
                if order and not self.step_ok(cand, order):
                    continue
                order.append(cand)
                found = extend(order, used | {cand})
                if found is not None:
                    return found
                order.pop()
            return None

        result = extend([], frozenset())
        self._memo[key] = result
        return result


def lexicographic_shelling(
    lattice: FaceLattice, sub: SubdivisionMap | None = None
) -> ShellingOrder:
    """The recursive lexicographic shelling of the barycentric complex.

    Maximal simplices correspond to maximal chains of nonzero faces; they are
    compared at the largest level where they differ, via orders on the facets
    of each face determined chain-prefix by chain-prefix from boundary
    shellings.  The returned order is verified, and each facet's type is
    additionally checked against the number of its earlier codim-1 neighbors.
    """
    if sub is None:
        sub = barycentric_subdivision(lattice)
    complex = complex_from_fan(sub)
    n = lattice.rank
    if n == 0:
        return verify_shelling(complex, list(complex.facets))

    face_ray = {fid: ri for ri, fid in enumerate(sub.ray_face)}
    boundaries = _BoundaryShellings(lattice)
    order_memo: dict[tuple[int, ...], list[int]] = {}

    def facet_order(chain: tuple[int, ...]) -> list[int]:
        """Shelling order on the facets of chain[-1], given the chain above it."""
        if chain in order_memo:
            return order_memo[chain]
        fid = chain[-1]
        if len(chain) == 1:
            prefix: frozenset[int] = frozenset()
        else:
            parent = facet_order(chain[:-1])
            pos = parent.index(fid)
            if pos == 0:
                prefix = frozenset()
            else:
                prefix = boundaries._meets_restriction(fid, parent[:pos])
                if prefix is None:
                    raise ShellingSearchFailed(
                        f"parent order is not a shelling at face {fid}"
                    )
        found = boundaries.shelling_with_prefix(fid, prefix)
        if found is None:
            raise ShellingSearchFailed(f"no boundary shelling for face {fid}")
        order_memo[chain] = list(found)
        return order_memo[chain]

    chains: list[tuple[int, ...]] = []

    def walk(chain: tuple[int, ...]):
        if lattice.dim(chain[-1]) == 1:
            chains.append(chain)
            return
        for nxt in facet_order(chain):
            walk(chain + (nxt,))

    walk((lattice.top_id,))

    def key_of(chain: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(
            facet_order(chain[: i + 1]).index(chain[i + 1])
            for i in range(len(chain) - 1)
        )

    keys = {chain: key_of(chain) for chain in chains}
    chains.sort(key=lambda c: keys[c])

    def simplex_of(chain: tuple[int, ...]) -> frozenset[int]:
        return frozenset(face_ray[fid] for fid in chain)

    order = [simplex_of(c) for c in chains]
    result = verify_shelling(complex, order)

    # claimed types: count earlier neighbors obtained by swapping one level
    for idx, chain in enumerate(chains):
        swaps = 0
        # chain = (sigma, dim n-1 face, ..., ray); level j swaps chain[j]
        for j in range(1, len(chain)):
            hi = chain[j - 1]
            lo = lattice.zero_id if j == len(chain) - 1 else chain[j + 1]
            middles = [
                m
                for m in lattice.strictly_between(lo, hi)
                if lattice.dim(m) == lattice.dim(chain[j])
            ]
            assert len(middles) == 2, "face-lattice intervals of length 2 are diamonds"
            other = middles[0] if middles[1] == chain[j] else middles[1]
            swapped = chain[:j] + (other,) + chain[j + 1 :]
            if keys[swapped] < keys[chain]:
                swaps += 1
        if swaps != result.types[idx]:
            raise ShellingSearchFailed(
                f"type mismatch at facet {idx}: verified {result.types[idx]}, "
                f"neighbor count {swaps}"
            )
    return result
