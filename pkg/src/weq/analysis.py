"""Pair analyses built on the polynomial encoding.

Given two equations, the 2x2 determinants of their coefficient vectors
classify the common solutions whose occurrence-count space is a
hyperplane: every such solution class contributes an irreducible
pure-difference divisor of every nonzero determinant. Factoring a
determinant therefore yields the candidate hyperplanes (as length
constraints), and the degrees and minimal-monomial counts of the
determinant yield size bounds on the number of classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .encode import is_balanced, t_det
from .poly import (
    Binomial,
    BinomialFactorization,
    MultiPoly,
    binomial_factors,
    divide_by_binomial,
    format_poly,
    minimal_monomials,
)
from .words import EqSystem, Equation, LambdaVector, unknown_names

STATUS_OK = "ok"
STATUS_ALL_ZERO = "all-determinants-zero"


@dataclass(frozen=True)
class PairDeterminant:
    """A nonzero determinant for one index pair, with its factorization."""

    pair: tuple[int, int]
    determinant: MultiPoly
    factorization: BinomialFactorization


@dataclass(frozen=True)
class HyperplaneReport:
    """Hyperplane classification of rank-(n-1) common solutions.

    ``primary`` is the lexicographically first index pair with a nonzero
    determinant; ``hyperplanes`` lists the mixed-sign factor directions of
    its determinant and ``constraints`` their rendered length equalities.
    Factors with all entries of one sign cannot be met by a non-erasing
    length type and are reported in ``erasing_notes`` instead.
    """

    status: str
    primary: PairDeterminant | None
    pairs: tuple[PairDeterminant, ...]
    hyperplanes: tuple[LambdaVector, ...]
    constraints: tuple[str, ...]
    erasing_notes: tuple[str, ...]


def _erasing_note(lam: LambdaVector, names: Sequence[str]) -> str:
    support = [i for i, v in enumerate(lam.entries) if v]
    if len(support) == 1 and lam.entries[support[0]] == 1:
        nm = names[support[0]]
        return f"factor {Binomial(lam)}: only erasing solutions with |h({nm})| = 0"
    emptied = ", ".join(f"|h({names[i]})| = 0" for i in support)
    return f"factor {Binomial(lam)}: only erasing solutions with {emptied}"


def solution_hyperplanes(
    E: Equation, Ep: Equation, names: Sequence[str] | None = None
) -> HyperplaneReport:
    """Classify the possible rank-(n-1) common solutions of two equations
    by factoring the first nonzero coefficient determinant."""
    if E.n != Ep.n:
        raise ValueError("equations must share the unknown count")
    n = E.n
    names = list(names) if names is not None else unknown_names(n)
    pairs = []
    for j in range(n):
        for k in range(j + 1, n):
            det = t_det(E, Ep, j, k)
            if det:
                pairs.append(PairDeterminant((j, k), det, binomial_factors(det)))
    if not pairs:
        return HyperplaneReport(STATUS_ALL_ZERO, None, (), (), (), ())
    primary = pairs[0]
    hyperplanes = []
    notes = []
    for b, _mult in primary.factorization.factors:
        if b.lam.is_erasing_constraint():
            notes.append(_erasing_note(b.lam, names))
        else:
            hyperplanes.append(b.lam)
    constraints = tuple(lam.constraint_text(names) for lam in hyperplanes)
    return HyperplaneReport(
        STATUS_OK, primary, tuple(pairs), tuple(hyperplanes), constraints, tuple(notes)
    )


@dataclass(frozen=True)
class BoundReport:
    """Size bounds for linearly nonequivalent rank-(n-1) common solutions.

    ``sum_bound`` is the total length of the two equations;
    ``pair_bounds`` maps each index pair with a nonzero determinant to
    twice the occurrence count of the pair in the first equation;
    ``best`` is the minimum applicable bound. The ``system_*`` fields are
    set by :func:`system_bounds` only and bound the size of a strongly
    independent system instead.
    """

    sum_bound: int
    pair_bounds: tuple[tuple[tuple[int, int], int], ...]
    best: int
    status: str
    system_size_bound: int | None = None


def bounds(E: Equation, Ep: Equation) -> BoundReport:
    """Bounds for a pair of equations; identical or linearly dependent
    coefficient vectors are reported via ``status`` rather than an error."""
    if E.n != Ep.n:
        raise ValueError("equations must share the unknown count")
    n = E.n
    sum_bound = E.size + Ep.size
    pair_bounds = []
    for j in range(n):
        for k in range(j + 1, n):
            if t_det(E, Ep, j, k):
                pair_bounds.append(((j, k), 2 * (E.occurrences(j) + E.occurrences(k))))
    status = STATUS_OK if pair_bounds else STATUS_ALL_ZERO
    best = min([sum_bound] + [b for _, b in pair_bounds])
    return BoundReport(sum_bound, tuple(pair_bounds), best, status)


def system_bounds(T: EqSystem, *, has_rank_n1_solution: bool = False) -> BoundReport:
    """Size bound for a strongly independent system, from its first two
    equations: the pair bound plus 2, or plus 1 when the full system is
    declared to have a rank-(n-1) solution."""
    if len(T) < 2:
        raise ValueError("system bounds need at least two equations")
    E1, E2 = T.equations[0], T.equations[1]
    base = bounds(E1, E2)
    slack = 1 if has_rank_n1_solution else 2
    return BoundReport(
        base.sum_bound,
        base.pair_bounds,
        base.best,
        base.status,
        system_size_bound=base.best + slack,
    )


def cofactor_3vars(E1: Equation, E2: Equation) -> MultiPoly:
    """For balanced equations in three unknowns the determinant triple
    ``(t_23, t_31, t_12)`` is ``t * (X-1, Y-1, Z-1)``; returns ``t``.

    Zero when the two coefficient vectors are linearly dependent.
    """
    if E1.n != 3 or E2.n != 3:
        raise ValueError("cofactor is defined for exactly three unknowns")
    for E in (E1, E2):
        if not is_balanced(E):
            raise ValueError(f"equation {E} is not balanced")
    dets = [
        (t_det(E1, E2, 1, 2), 0),
        (t_det(E1, E2, 2, 0), 1),
        (t_det(E1, E2, 0, 1), 2),
    ]
    quotients = []
    for det, i in dets:
        if not det:
            continue
        unit = LambdaVector(tuple(1 if j == i else 0 for j in range(3)))
        q = divide_by_binomial(det, Binomial(unit))
        if q is None:
            raise RuntimeError("determinant of balanced pair not divisible by X_i - 1; this is a bug")
        quotients.append(q)
    if not quotients:
        return MultiPoly.zero(3)
    if len(quotients) != 3 or any(q != quotients[0] for q in quotients):
        raise RuntimeError("inconsistent cofactors across the determinant triple; this is a bug")
    return quotients[0]


def minimal_count_bounds(
    E: Equation, Ep: Equation, j: int, k: int
) -> tuple[int, int, int]:
    """Count the minimal monomials of the (j, k) determinant and check it
    against both proved bounds.

    Returns ``(count, upper, lower)`` where ``upper`` is twice the
    occurrence count of the pair in ``E`` and ``lower`` is one more than
    the number of distinct mixed-sign pure-difference factors.
    """
    det = t_det(E, Ep, j, k)
    if not det:
        raise ValueError(f"determinant for pair ({j}, {k}) is zero")
    count = len(minimal_monomials(det))
    upper = 2 * (E.occurrences(j) + E.occurrences(k))
    lower = len(binomial_factors(det).hyperplane_factors()) + 1
    if not lower <= count <= upper:
        raise AssertionError(
            f"minimal-monomial count {count} outside [{lower}, {upper}] "
            f"for pair ({j}, {k})"
        )
    return count, upper, lower


def pair_report_json(
    E: Equation, Ep: Equation, names: Sequence[str] | None = None
) -> dict:
    """JSON-ready report for an equation pair: primary determinant,
    factorization, hyperplane constraints and bounds."""
    names = list(names) if names is not None else unknown_names(E.n)
    hr = solution_hyperplanes(E, Ep, names)
    br = bounds(E, Ep)
    out: dict = {
        "status": hr.status,
        "bounds": {
            "sum": br.sum_bound,
            "pairs": [
                {"pair": [j + 1, k + 1], "bound": b} for (j, k), b in br.pair_bounds
            ],
            "best": br.best,
        },
    }
    if hr.primary is None:
        out.update(
            {
                "pair": None,
                "determinant": None,
                "content": None,
                "factors": [],
                "residual": None,
                "hyperplane_constraints": [],
                "erasing_notes": [],
            }
        )
        return out
    fac = hr.primary.factorization
    out.update(
        {
            "pair": [hr.primary.pair[0] + 1, hr.primary.pair[1] + 1],
            "determinant": format_poly(hr.primary.determinant),
            "content": list(fac.content),
            "sign": fac.sign,
            "factors": [
                {"lambda": list(b.lam.entries), "multiplicity": m}
                for b, m in fac.factors
            ],
            "residual": format_poly(fac.residual),
            "hyperplane_constraints": list(hr.constraints),
            "erasing_notes": list(hr.erasing_notes),
        }
    )
    return out
