"""Sparse integer polynomials and binomial factor extraction.

Multivariate polynomials over Z are stored as a map from exponent
vectors to nonzero arbitrary-precision coefficients, so two polynomials
are equal exactly when their term maps are. On top of the ring
operations this module provides:

* the substitution ``X_i -> x^(gamma_i)`` into a univariate polynomial,
* the digit polynomial of a word over a positive-integer alphabet,
* exact division by a pure difference ``X^(lam+) - X^(lam-)`` with
  coprime ``lam`` (every such difference is irreducible),
* complete extraction of the monomial content and of all irreducible
  pure-difference divisors with multiplicities,
* the minimal monomials of the support under the componentwise order.

Division uses the single rewriting rule ``X^(lam+) -> X^(lam-)``. Each
monomial ``X^e`` admits the rule exactly ``min over {i : lam_i > 0} of
floor(e_i / lam_i)`` times, so its normal form is strategy-independent
and the remainder vanishes precisely on multiples of the divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .words import LambdaVector, Word


def poly_var_names(n: int) -> list[str]:
    """Display names X, Y, Z, X4, X5, ... for ``n`` ring variables."""
    return ["X", "Y", "Z"][:n] + [f"X{i}" for i in range(4, n + 1)]


def _grlex_key(exps: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(exps), exps)


class UniPoly:
    """Element of Z[x] in sparse form: degree -> nonzero coefficient."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        for d, c in (coeffs or {}).items():
            if d < 0:
                raise ValueError("degrees must be non-negative")
            if c:
                clean[int(d)] = int(c)
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "UniPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff: int, degree: int) -> "UniPoly":
        return cls({degree: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self._coeffs == other._coeffs

    def __add__(self, other: "UniPoly") -> "UniPoly":
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            nc = out.get(d, 0) + c
            if nc:
                out[d] = nc
            else:
                out.pop(d, None)
        res = UniPoly()
        res._coeffs = out
        return res

    def __neg__(self) -> "UniPoly":
        res = UniPoly()
        res._coeffs = {d: -c for d, c in self._coeffs.items()}
        return res

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, int):
            res = UniPoly()
            if other:
                res._coeffs = {d: c * other for d, c in self._coeffs.items()}
            return res
        out: dict[int, int] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                d = d1 + d2
                nc = out.get(d, 0) + c1 * c2
                if nc:
                    out[d] = nc
                else:
                    out.pop(d, None)
        res = UniPoly()
        res._coeffs = out
        return res

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for d in sorted(self._coeffs):
            c = self._coeffs[d]
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "x" if d == 1 else f"x^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((c < 0, body))
        first_neg, first_body = parts[0]
        out = ("-" if first_neg else "") + first_body
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    __repr__ = __str__


class MultiPoly:
    """Element of Z[X_1,...,X_n] in sparse canonical form (no zero terms)."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if n < 0:
            raise ValueError("negative variable count")
        self.n = n
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for {n} variables")
            if coeff:
                clean[exps] = int(coeff)
        self._terms = clean

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c: int) -> "MultiPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def one(cls, n: int) -> "MultiPoly":
        return cls.constant(n, 1)

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], coeff: int = 1) -> "MultiPoly":
        return cls(n, {tuple(exps): coeff})

    @classmethod
    def variable(cls, n: int, i: int) -> "MultiPoly":
        if not 0 <= i < n:
            raise ValueError(f"variable index {i} out of range")
        return cls(n, {tuple(1 if j == i else 0 for j in range(n)): 1})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self._terms)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def degree(self) -> int:
        """Total degree, with -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.n == other.n
            and self._terms == other._terms
        )

    def _check_same_ring(self, other: "MultiPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(self.n, other)
        self._check_same_ring(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        res = MultiPoly(self.n)
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        res = MultiPoly(self.n)
        res._terms = {e: -c for e, c in self._terms.items()}
        return res

    def __sub__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            res = MultiPoly(self.n)
            if other:
                res._terms = {e: c * other for e, c in self._terms.items()}
            return res
        self._check_same_ring(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    out.pop(e, None)
        res = MultiPoly(self.n)
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        res = MultiPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                res = res * base
            base = base * base
            k >>= 1
        return res

    def evaluate(self, gamma: Sequence[int]) -> UniPoly:
        """Substitute ``X_i -> x^(gamma_i)``; a ring homomorphism to Z[x]."""
        gamma = tuple(gamma)
        if len(gamma) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(gamma)}")
        if any(g < 0 for g in gamma):
            raise ValueError("substitution exponents must be non-negative")
        out: dict[int, int] = {}
        for e, c in self._terms.items():
            d = sum(a * b for a, b in zip(e, gamma))
            nc = out.get(d, 0) + c
            if nc:
                out[d] = nc
            else:
                out.pop(d, None)
        res = UniPoly()
        res._coeffs = out
        return res

    def __str__(self) -> str:
        return format_poly(self)

    __repr__ = __str__


def format_poly(p: MultiPoly, names: Sequence[str] | None = None) -> str:
    """Canonical text form: terms in descending graded lexicographic order."""
    if not p:
        return "0"
    names = list(names) if names is not None else poly_var_names(p.n)
    parts = []
    for e in sorted(p._terms, key=_grlex_key, reverse=True):
        c = p._terms[e]
        vars_ = "*".join(
            nm if ei == 1 else f"{nm}^{ei}" for nm, ei in zip(names, e) if ei
        )
        mag = abs(c)
        if not vars_:
            body = str(mag)
        elif mag == 1:
            body = vars_
        else:
            body = f"{mag}*{vars_}"
        parts.append((c < 0, body))
    first_neg, first_body = parts[0]
    out = ("-" if first_neg else "") + first_body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def word_poly(w: Word) -> UniPoly:
    """Digit polynomial of a word: position i contributes (letter_i + 1) * x^i.

    Letters take the positive values 1..k, so the word length is always
    recoverable from the polynomial (no trailing-zero ambiguity).
    """
    coeffs = {i: s + 1 for i, s in enumerate(w)}
    res = UniPoly()
    res._coeffs = coeffs
    return res


@dataclass(frozen=True)
class Binomial:
    """The pure difference ``X^(lam+) - X^(lam-)``.

    ``lam`` is coprime with disjoint positive/negative parts by
    construction, which makes the difference irreducible in Z[X].
    """

    lam: LambdaVector

    @property
    def n(self) -> int:
        return self.lam.n

    def as_poly(self) -> MultiPoly:
        return MultiPoly(self.n, {self.lam.plus: 1, self.lam.minus: -1})

    def __str__(self) -> str:
        return format_poly(self.as_poly())


def divide_by_binomial(p: MultiPoly, b: Binomial) -> MultiPoly | None:
    """Exact quotient ``p / (X^(lam+) - X^(lam-))``, or None when the
    division leaves a remainder."""
    if p.n != b.n:
        raise ValueError(f"variable count mismatch: {p.n} vs {b.n}")
    lam = b.lam.entries
    plus = b.lam.plus
    pos = [(i, l) for i, l in enumerate(lam) if l > 0]
    quotient: dict[tuple[int, ...], int] = {}
    remainder: dict[tuple[int, ...], int] = {}
    for e, c in p._terms.items():
        k = min(e[i] // l for i, l in pos)
        for j in range(k):
            qe = tuple(ei - j * li - pi for ei, li, pi in zip(e, lam, plus))
            nc = quotient.get(qe, 0) + c
            if nc:
                quotient[qe] = nc
            else:
                quotient.pop(qe, None)
        nf = tuple(ei - k * li for ei, li in zip(e, lam))
        nc = remainder.get(nf, 0) + c
        if nc:
            remainder[nf] = nc
        else:
            remainder.pop(nf, None)
    if remainder:
        return None
    res = MultiPoly(p.n)
    res._terms = quotient
    return res


@dataclass(frozen=True)
class BinomialFactorization:
    """``sign * X^content * product(binomial^multiplicity) * residual``.

    The residual carries all remaining coefficients; it has no monomial
    content, no pure-difference divisor, and a positive leading
    coefficient in graded lexicographic order.
    """

    n: int
    sign: int
    content: tuple[int, ...]
    factors: tuple[tuple[Binomial, int], ...]
    residual: MultiPoly

    def expand(self) -> MultiPoly:
        """Multiply the factorization back out."""
        out = MultiPoly.monomial(self.n, self.content, self.sign)
        for b, mult in self.factors:
            out = out * b.as_poly() ** mult
        return out * self.residual

    def hyperplane_factors(self) -> tuple[LambdaVector, ...]:
        """Directions of the factors whose positive and negative parts are
        both nonzero (the ones meeting the positive orthant)."""
        return tuple(
            b.lam for b, _ in self.factors if not b.lam.is_erasing_constraint()
        )


def _content(terms: Mapping[tuple[int, ...], int], n: int) -> tuple[int, ...]:
    mins = [None] * n
    for e in terms:
        for i, v in enumerate(e):
            if mins[i] is None or v < mins[i]:
                mins[i] = v
    return tuple(m or 0 for m in mins)


def _shift_down(p: MultiPoly, mu: tuple[int, ...]) -> MultiPoly:
    res = MultiPoly(p.n)
    res._terms = {tuple(a - b for a, b in zip(e, mu)): c for e, c in p._terms.items()}
    return res


def binomial_factors(p: MultiPoly) -> BinomialFactorization:
    """Extract the monomial content and every irreducible pure-difference
    divisor of ``p`` with multiplicities.

    Candidate directions are the coprime normalizations of all pairwise
    support differences; when a pure difference divides the current
    polynomial, its exponent rewriting collapses some support pair along
    an integer multiple of the direction, so the set is exhaustive.
    """
    if not p:
        raise ValueError("the zero polynomial has no factorization")
    n = p.n
    content = _content(p._terms, n)
    cur = _shift_down(p, content)
    factors: dict[LambdaVector, int] = {}
    while True:
        support = cur.support()
        cands = sorted(
            {
                LambdaVector.from_vector(tuple(a - b for a, b in zip(e1, e2)))
                for e1, e2 in combinations(support, 2)
            },
            key=lambda lv: lv.entries,
        )
        progressed = False
        for lam in cands:
            b = Binomial(lam)
            while (q := divide_by_binomial(cur, b)) is not None:
                factors[lam] = factors.get(lam, 0) + 1
                cur = q
                progressed = True
            if progressed:
                break
        if not progressed:
            break
    extra = _content(cur._terms, n)
    if any(extra):
        content = tuple(a + b for a, b in zip(content, extra))
        cur = _shift_down(cur, extra)
    sign = 1
    lead = max(cur._terms, key=_grlex_key)
    if cur._terms[lead] < 0:
        sign = -1
        cur = -cur
    result = BinomialFactorization(
        n,
        sign,
        content,
        tuple((Binomial(lam), m) for lam, m in sorted(factors.items(), key=lambda kv: kv[0].entries)),
        cur,
    )
    if result.expand() != p:
        raise RuntimeError("factorization failed to multiply back; this is a bug")
    return result


def minimal_monomials(p: MultiPoly) -> set[tuple[int, ...]]:
    """Minimal elements of the support under the componentwise order."""
    if not p:
        raise ValueError("the zero polynomial has no minimal monomials")
    supp = p.support()
    out = set()
    for e in supp:
        if not any(
            f != e and all(fi <= ei for fi, ei in zip(f, e)) for f in supp
        ):
            out.add(e)
    return out
