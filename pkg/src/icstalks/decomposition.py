"""Fiber Poincare polynomials and the stalk recursion on the face poset.

For a simplicial subdivision with multiplicity table d, the fiber over a
point of the orbit of a face tau has Poincare polynomial

    F_tau(q) = sum_l d_l(tau) (q^2 - 1)^(d_tau - l).

Writing Ft_tau = q^{-d_tau} F_tau, the stalk identity

    Ft_tau = sum_{mu <= tau} Ht_{mu,tau} * D_mu

determines the normalized stalk polynomials Ht and the multiplicities D by
induction over the poset: at each face the already-known terms are moved to
the left, and the remainder splits uniquely into a part supported in strictly
negative degrees (Ht_{0,tau}) plus a palindromic part (D_tau).  Off-diagonal
stalks Ht_{mu,tau} depend only on the interval [mu, tau] as a graded poset
and are computed there with chain-count multiplicities (the barycentric
counts of the quotient cone); the solver memoizes them per interval.

The solved table is validated after the fact: nonnegative integer
coefficients, palindromic D, strictly negative support of off-diagonal Ht,
degree supports matching the parity of the relevant face dimensions, and
closure of the stalk identity itself.  Violations surface as errors rather
than steering the computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cones import FaceLattice
from .errors import InvariantViolation, NegativeCoefficient
from .polynomials import LaurentPolynomial, Q_SQUARED_MINUS_ONE
from .subdivision import MultiplicityTable, chain_counter


def fiber_poincare(d: MultiplicityTable, tau: int) -> LaurentPolynomial:
    """Poincare polynomial of the fiber over the orbit of tau."""
    lattice = d.lattice
    d_tau = lattice.dim(tau)
    out = LaurentPolynomial.zero()
    for l in range(d_tau + 1):
        count = d.get(l, tau)
        if count:
            out = out + count * Q_SQUARED_MINUS_ONE ** (d_tau - l)
    if not (out.is_integer() and out.is_nonnegative()):
        raise NegativeCoefficient(
            f"fiber series of face {tau} has a negative coefficient: {out.to_text()}"
        )
    return out


def split_palindromic_negative(
    p: LaurentPolynomial,
) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Unique splitting p = (strictly negative part) + (palindromic part).

    The palindromic part mirrors the coefficients of p in degrees >= 0; the
    remainder is supported in degrees < 0.  The splitting always exists and
    is unique; downstream nonnegativity checks are the solver's concern.
    """
    pal_terms = {}
    for e in p.support():
        if e == 0:
            pal_terms[0] = p.coefficient(0)
        elif e > 0:
            pal_terms[e] = p.coefficient(e)
            pal_terms[-e] = p.coefficient(e)
    palindromic = LaurentPolynomial(pal_terms)
    negative = p - palindromic
    assert palindromic.is_palindromic()
    assert all(e < 0 for e in negative.support())
    return negative, palindromic


@dataclass
class DecompositionResult:
    """Solved stalk polynomials Ht_{mu,tau}, multiplicities D_tau, fibers F_tau."""

    lattice: FaceLattice
    Htilde: dict[tuple[int, int], LaurentPolynomial] = field(default_factory=dict)
    D: dict[int, LaurentPolynomial] = field(default_factory=dict)
    F: dict[int, LaurentPolynomial] = field(default_factory=dict)

    def htilde(self, mu: int, tau: int) -> LaurentPolynomial:
        return self.Htilde[(mu, tau)]

    def to_json_obj(self) -> dict:
        return {
            "F": [
                {"tau": t, "poly": self.F[t].to_json_obj(), "text": self.F[t].to_text()}
                for t in sorted(self.F)
            ],
            "Htilde": [
                {
                    "mu": m,
                    "tau": t,
                    "poly": self.Htilde[(m, t)].to_json_obj(),
                    "text": self.Htilde[(m, t)].to_text(),
                }
                for (m, t) in sorted(self.Htilde)
            ],
            "D": [
                {"tau": t, "poly": self.D[t].to_json_obj(), "text": self.D[t].to_text()}
                for t in sorted(self.D)
            ],
        }


class IntervalStalkSolver:
    """Stalk polynomials of intervals [lo, hi], with chain-count multiplicities.

    These are the stalk data of the quotient cone of hi by lo under its own
    barycentric subdivision; they depend only on the graded poset structure
    of the interval.  Memoized per (lo, hi) pair; no isomorphism detection.
    """

    def __init__(self, lattice: FaceLattice):
        self.lattice = lattice
        self.counter = chain_counter(lattice)
        self._h: dict[tuple[int, int], LaurentPolynomial] = {}
        self._d: dict[tuple[int, int], LaurentPolynomial] = {}

    def _fiber(self, lo: int, hi: int) -> LaurentPolynomial:
        length = self.lattice.dim(hi) - self.lattice.dim(lo)
        out = LaurentPolynomial.zero()
        for l in range(length + 1):
            count = self.counter.count(lo, hi, l)
            if count:
                out = out + count * Q_SQUARED_MINUS_ONE ** (length - l)
        return out

    def _solve(self, lo: int, hi: int) -> None:
        key = (lo, hi)
        if key in self._h:
            return
        if lo == hi:
            self._h[key] = LaurentPolynomial.one()
            self._d[key] = LaurentPolynomial.one()
            return
        length = self.lattice.dim(hi) - self.lattice.dim(lo)
        lhs = self._fiber(lo, hi).shift(-length)
        for mid in self.lattice.strictly_between(lo, hi):
            lhs = lhs - self.htilde(mid, hi) * self.dpal(lo, mid)
        negative, palindromic = split_palindromic_negative(lhs)
        self._h[key] = negative
        self._d[key] = palindromic

    def htilde(self, lo: int, hi: int) -> LaurentPolynomial:
        """Ht of the interval: q^0 on the diagonal, else the negative part."""
        self._solve(lo, hi)
        return self._h[(lo, hi)]

    def dpal(self, lo: int, hi: int) -> LaurentPolynomial:
        """D at the top of the interval under its barycentric multiplicities."""
        self._solve(lo, hi)
        return self._d[(lo, hi)]


def _interval_solver(lattice: FaceLattice) -> IntervalStalkSolver:
    solver = getattr(lattice, "_interval_stalks", None)
    if solver is None:
        solver = IntervalStalkSolver(lattice)
        lattice._interval_stalks = solver
    return solver


def solve_decomposition(
    lattice: FaceLattice, d: MultiplicityTable
) -> DecompositionResult:
    """Solve for every Ht_{mu,tau} and D_tau from the multiplicity table."""
    solver = _interval_solver(lattice)
    result = DecompositionResult(lattice=lattice)
    zero = lattice.zero_id
    for f in lattice.faces:
        tau = f.id
        result.F[tau] = fiber_poincare(d, tau)
        if tau == zero:
            result.Htilde[(zero, zero)] = LaurentPolynomial.one()
            result.D[zero] = LaurentPolynomial.one()
            continue
        lhs = result.F[tau].shift(-f.dim)
        for mu in lattice.strictly_between(zero, tau):
            result.Htilde[(mu, tau)] = solver.htilde(mu, tau)
            lhs = lhs - result.Htilde[(mu, tau)] * result.D[mu]
        negative, palindromic = split_palindromic_negative(lhs)
        result.Htilde[(zero, tau)] = negative
        result.D[tau] = palindromic
        result.Htilde[(tau, tau)] = LaurentPolynomial.one()
    _validate(result)
    return result


def _validate(result: DecompositionResult) -> None:
    lattice = result.lattice
    for tau, poly in result.D.items():
        if not poly.is_palindromic():
            raise InvariantViolation(tau, "non-palindromic multiplicity")
        if not (poly.is_integer() and poly.is_nonnegative()):
            raise InvariantViolation(tau, "negative or fractional multiplicity")
        if any(e % 2 != lattice.dim(tau) % 2 for e in poly.support()):
            raise InvariantViolation(tau, "multiplicity parity")
    for (mu, tau), poly in result.Htilde.items():
        if not (poly.is_integer() and poly.is_nonnegative()):
            raise InvariantViolation(tau, "negative or fractional stalk coefficient")
        if mu != tau and any(e >= 0 for e in poly.support()):
            raise InvariantViolation(tau, "stalk not strictly negative")
        gap = lattice.dim(tau) - lattice.dim(mu)
        if any((e - gap) % 2 for e in poly.support()):
            raise InvariantViolation(tau, "stalk parity")
    # closure of the stalk identity
    for f in lattice.faces:
        tau = f.id
        total = LaurentPolynomial.zero()
        for g in lattice.faces:
            mu = g.id
            if lattice.leq(mu, tau):
                total = total + result.Htilde[(mu, tau)] * result.D[mu]
        if total != result.F[tau].shift(-f.dim):
            raise InvariantViolation(tau, "stalk identity does not close")


def lowest_degree_normalized(result: DecompositionResult) -> list[int]:
    """Faces whose stalk polynomial does not have coefficient 1 at q^{-dim}.

    This holds throughout the corpus but is reported rather than enforced.
    """
    bad = []
    zero = result.lattice.zero_id
    for f in result.lattice.faces:
        if f.id == zero:
            continue
        h = result.Htilde[(zero, f.id)]
        if h.coefficient(-f.dim) != 1:
            bad.append(f.id)
    return bad
