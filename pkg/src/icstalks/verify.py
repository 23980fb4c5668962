"""The one-shot invariant suite: every cross-check the package can run.

Each check is independent: a failure is recorded in the report and the rest
of the suite keeps going.  Shared artifacts (lattice, subdivisions, solved
tables, generating functions) are built lazily once per cone and reused.

One check is expected to fail by design of the mathematics itself: the
center multiplicity D_sigma is *not* independent of the subdivision (the
barycentric subdivision has more exceptional geometry over the torus-fixed
point than the interior-ray one), so the equality of the two pipelines'
D_sigma holds only in the dimensions where they coincide over the fixed
point (0, 1, and 3 for this corpus).  The check is kept and reported
honestly; the stalk polynomials themselves agree everywhere, and that
agreement is checked separately.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cones import FaceLattice, pick_degree
from .corpus import CORPUS, ConeSpec
from .decomposition import (
    DecompositionResult,
    lowest_degree_normalized,
    solve_decomposition,
)
from .derham import (
    chi_y_specialize,
    check_main_identity,
    derham_from_stalks,
    stalk_chi_y,
)
from .differentials import (
    build_degree_complex,
    cohomology_dims,
    omega_closed_form,
    omega_from_fiber_poincare,
    omega_oracle,
)
from .golden import golden_derham, golden_multiplicities, golden_stalks
from .polynomials import BiLaurentPolynomial, LaurentPolynomial
from .shelling import lexicographic_shelling
from .subdivision import (
    MultiplicityTable,
    SubdivisionMap,
    barycentric_subdivision,
    chain_count_oracle,
    interior_ray_subdivision,
    multiplicity_table,
    validate_subdivision,
)


@dataclass
class CheckResult:
    name: str
    cone: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f" ({self.detail})" if self.detail and not self.passed else ""
        return f"[{status}] {self.cone}: {self.name}{suffix}"


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def by_name(self, name: str) -> list[CheckResult]:
        return [c for c in self.checks if c.name == name]

    def to_json_obj(self) -> dict:
        return {
            "passed": self.passed,
            "counts": {
                "total": len(self.checks),
                "failed": len(self.failures()),
            },
            "checks": [
                {
                    "name": c.name,
                    "cone": c.cone,
                    "passed": c.passed,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


class ConeContext:
    """Lazily built artifacts for one corpus cone."""

    def __init__(self, spec: ConeSpec):
        self.spec = spec
        self._cache: dict[str, object] = {}

    def _get(self, key: str, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    @property
    def lattice(self) -> FaceLattice:
        return self._get("lattice", self.spec.lattice)

    @property
    def barycentric(self) -> SubdivisionMap:
        return self._get("barycentric", lambda: barycentric_subdivision(self.lattice))

    @property
    def interior(self) -> SubdivisionMap:
        return self._get("interior", lambda: interior_ray_subdivision(self.lattice))

    @property
    def d_barycentric(self) -> MultiplicityTable:
        return self._get("d_barycentric", lambda: multiplicity_table(self.barycentric))

    @property
    def d_interior(self) -> MultiplicityTable:
        return self._get("d_interior", lambda: multiplicity_table(self.interior))

    @property
    def dec_barycentric(self) -> DecompositionResult:
        return self._get(
            "dec_barycentric", lambda: solve_decomposition(self.lattice, self.d_barycentric)
        )

    @property
    def dec_interior(self) -> DecompositionResult:
        return self._get(
            "dec_interior", lambda: solve_decomposition(self.lattice, self.d_interior)
        )

    def omega_oracle_map(self) -> dict[int, BiLaurentPolynomial]:
        return self._get(
            "omega_oracle",
            lambda: {
                f.id: omega_oracle(self.barycentric, f.id) for f in self.lattice.faces
            },
        )

    def omega_closed_map(self) -> dict[int, BiLaurentPolynomial]:
        return self._get(
            "omega_closed",
            lambda: {
                f.id: omega_closed_form(self.d_barycentric, f.id)
                for f in self.lattice.faces
            },
        )


def _run(report: Report, name: str, spec_name: str, fn) -> None:
    start = time.perf_counter()
    try:
        detail = fn()
        report.checks.append(
            CheckResult(
                name=name,
                cone=spec_name,
                passed=True,
                detail=detail or "",
                seconds=time.perf_counter() - start,
            )
        )
    except Exception as exc:  # noqa: BLE001 - a failed check must not abort the suite
        report.checks.append(
            CheckResult(
                name=name,
                cone=spec_name,
                passed=False,
                detail=f"{type(exc).__name__}: {exc}",
                seconds=time.perf_counter() - start,
            )
        )


def check_face_lattice(ctx: ConeContext) -> str:
    lat = ctx.lattice
    if ctx.spec.expected_face_counts:
        counts = tuple(len(lat.faces_of_dim(d)) for d in range(lat.rank + 1))
        assert counts == ctx.spec.expected_face_counts, counts
    if lat.rank == 4:
        v = len(lat.faces_of_dim(1))
        e = len(lat.faces_of_dim(2))
        f = len(lat.faces_of_dim(3))
        assert v - e + f == 2, "Euler identity fails"
        nk_sum = sum(len(lat.faces[fid].rays) for fid in lat.faces_of_dim(3))
        assert nk_sum == 2 * e
    return f"{len(lat.faces)} faces"


def check_subdivision_validity(ctx: ConeContext) -> str:
    validate_subdivision(ctx.barycentric)
    validate_subdivision(ctx.interior)
    return (
        f"barycentric {len(ctx.barycentric.maximal)} maximal cones, "
        f"interior-ray {len(ctx.interior.maximal)}"
    )


def check_dcount_chaincount(ctx: ConeContext) -> str:
    lat = ctx.lattice
    d = ctx.d_barycentric
    pairs = 0
    for f in lat.faces:
        for l in range(lat.rank + 1):
            assert d.get(l, f.id) == chain_count_oracle(lat, f.id, l), (f.id, l)
            pairs += 1
    return f"{pairs} counts agree"


def check_fiber_duality(ctx: ConeContext) -> str:
    # barycentric fibers have dimension dim(face) - 1, so they satisfy
    # Poincare duality at that dimension; interior-ray fibers over low faces
    # are points and are excluded
    dec = ctx.dec_barycentric
    faces = 0
    for f in ctx.lattice.faces:
        if f.dim == 0:
            continue
        fib = dec.F[f.id]
        assert fib == fib.mirror().shift(2 * (f.dim - 1)), f.id
        faces += 1
    return f"{faces} faces, barycentric pipeline"


def check_shelling(ctx: ConeContext) -> str:
    order = lexicographic_shelling(ctx.lattice, ctx.barycentric)
    hist = order.type_histogram()
    if len(order.order) > 1:
        assert hist.get(0) == 1, "exactly one leading facet of type 0"
    return f"{len(order.order)} facets, histogram {hist}"


def check_degree_zero_exactness(ctx: ConeContext) -> str:
    lat = ctx.lattice
    deg = pick_degree(lat, lat.top_id)
    for p in range(1, lat.rank + 1):
        h = cohomology_dims(build_degree_complex(ctx.barycentric, p, deg))
        assert all(x == 0 for i, x in enumerate(h) if i != p), (p, h)
    return f"p = 1..{lat.rank}"


def check_omega_threeway(ctx: ConeContext) -> str:
    lat = ctx.lattice
    oracle = ctx.omega_oracle_map()
    closed = ctx.omega_closed_map()
    dec = ctx.dec_barycentric
    for f in lat.faces:
        fiber_form = omega_from_fiber_poincare(dec.F[f.id], lat.rank, f.dim)
        assert oracle[f.id] == closed[f.id] == fiber_form, f.id
        assert oracle[f.id].is_integer() and oracle[f.id].is_nonnegative()
    return f"{len(lat.faces)} faces"


def check_omega_degree_independence(ctx: ConeContext) -> str:
    oracle = ctx.omega_oracle_map()
    recomputed = 0
    for f in ctx.lattice.faces:
        again = omega_oracle(ctx.barycentric, f.id, verify_second_degree=True)
        assert again == oracle[f.id]
        recomputed += 1
    return f"{recomputed} faces at two degrees"


def check_decomposition_invariants(ctx: ConeContext) -> str:
    # structural invariants are validated inside solve_decomposition
    dec_b = ctx.dec_barycentric
    dec_i = ctx.dec_interior
    bad = lowest_degree_normalized(dec_b) + lowest_degree_normalized(dec_i)
    assert not bad, f"stalk polynomials without unit lowest coefficient: {bad}"
    for f in ctx.lattice.faces:
        if f.dim and len(f.rays) == f.dim:
            assert dec_b.htilde(ctx.lattice.zero_id, f.id) == LaurentPolynomial.term(
                -f.dim
            ), f"simplicial face {f.id}"
    return "palindromic, negative, parity, nonnegative, unit lowest term"


def check_stalk_subdivision_independence(ctx: ConeContext) -> str:
    dec_b = ctx.dec_barycentric
    dec_i = ctx.dec_interior
    assert set(dec_b.Htilde) == set(dec_i.Htilde)
    for key in dec_b.Htilde:
        assert dec_b.Htilde[key] == dec_i.Htilde[key], key
    return f"{len(dec_b.Htilde)} stalk polynomials identical"


def check_center_multiplicity_independence(ctx: ConeContext) -> str:
    top = ctx.lattice.top_id
    a = ctx.dec_barycentric.D[top]
    b = ctx.dec_interior.D[top]
    assert a == b, (
        f"D_sigma differs between pipelines: barycentric {a.to_text()}, "
        f"interior-ray {b.to_text()} (the multiplicity over the fixed point "
        "depends on the subdivision whenever the two pipelines differ there, "
        "which happens in dimensions 2 and 4)"
    )
    return a.to_text()


def check_main_closure(ctx: ConeContext) -> str:
    dec = ctx.dec_barycentric
    oracle = ctx.omega_oracle_map()
    closed = ctx.omega_closed_map()
    for f in ctx.lattice.faces:
        check_main_identity(dec, oracle[f.id], f.id)
        check_main_identity(dec, closed[f.id], f.id)
    return f"{len(ctx.lattice.faces)} faces, oracle and closed form"


def check_chi_y(ctx: ConeContext) -> str:
    dec = ctx.dec_barycentric
    lat = ctx.lattice
    for f in lat.faces:
        dr = derham_from_stalks(dec, lat.zero_id, f.id)
        lhs = chi_y_specialize(dr)
        rhs = stalk_chi_y(dec.htilde(lat.zero_id, f.id), f.dim, lat.rank)
        assert lhs == rhs, f.id
    return f"{len(lat.faces)} faces"


def check_golden_stalks(ctx: ConeContext) -> str:
    lat = ctx.lattice
    expected_h = golden_stalks(lat)
    expected_d = golden_multiplicities(lat)
    for dec in (ctx.dec_barycentric, ctx.dec_interior):
        for fid, poly in expected_h.items():
            assert dec.htilde(lat.zero_id, fid) == poly, ("H", fid)
    for fid, poly in expected_d.items():
        assert ctx.dec_interior.D[fid] == poly, ("D", fid, poly.to_text())
    return f"{len(expected_h)} stalk + {len(expected_d)} multiplicity values"


def check_golden_derham(ctx: ConeContext) -> str:
    lat = ctx.lattice
    expected = golden_derham(lat)
    dec = ctx.dec_barycentric
    for fid, poly in expected.items():
        got = derham_from_stalks(dec, lat.zero_id, fid)
        assert got == poly, (fid, got.to_text(), poly.to_text())
        assert got.is_integer() and got.is_nonnegative() and got.is_integral
    return f"{len(expected)} values"


CONE_CHECKS = [
    ("face-lattice", check_face_lattice),
    ("subdivision-validity", check_subdivision_validity),
    ("dcount-equals-chaincount", check_dcount_chaincount),
    ("fiber-poincare-duality", check_fiber_duality),
    ("lexicographic-shelling", check_shelling),
    ("degree-zero-exactness", check_degree_zero_exactness),
    ("omega-three-way", check_omega_threeway),
    ("omega-degree-independence", check_omega_degree_independence),
    ("decomposition-invariants", check_decomposition_invariants),
    ("stalk-subdivision-independence", check_stalk_subdivision_independence),
    ("center-multiplicity-independence", check_center_multiplicity_independence),
    ("main-theorem-closure", check_main_closure),
    ("chi-y-identity", check_chi_y),
    ("golden-stalks", check_golden_stalks),
    ("golden-derham", check_golden_derham),
]


def run_cone(spec: ConeSpec, report: Report | None = None) -> Report:
    if report is None:
        report = Report()
    ctx = ConeContext(spec)
    try:
        ctx.lattice
    except Exception as exc:  # noqa: BLE001 - report the construction error once
        report.checks.append(
            CheckResult(
                name="face-lattice",
                cone=spec.name,
                passed=False,
                detail=f"{type(exc).__name__}: {exc}",
            )
        )
        return report
    for name, fn in CONE_CHECKS:
        _run(report, name, spec.name, lambda fn=fn: fn(ctx))
    return report


def run_corpus(specs=CORPUS) -> Report:
    report = Report()
    for spec in specs:
        run_cone(spec, report)
    return report
