"""Polynomial encoding of word equations.

An equation over n unknowns turns into a vector of n polynomials in
Z[X_1,...,X_n]: the component for unknown j collects, with sign per
side, one prefix-product monomial for every occurrence of that unknown.
Substituting a length type beta (via ``X_i -> x^(beta_i)``) yields a
homogeneous linear condition over Z[x] whose solutions are exactly the
digit polynomials of the solutions with that length type.
"""

from __future__ import annotations

from .poly import MultiPoly, UniPoly, word_poly
from .words import Equation, Morphism, Word

SVector = tuple[MultiPoly, ...]
PVector = tuple[UniPoly, ...]


def s_poly(E: Equation, j: int) -> MultiPoly:
    """Coefficient polynomial of unknown ``j``: the signed sum of
    prefix-product monomials over its occurrences (left side positive,
    right side negative; the empty prefix contributes 1)."""
    if not 0 <= j < E.n:
        raise IndexError(f"unknown index {j} out of range for n={E.n}")
    terms: dict[tuple[int, ...], int] = {}
    for side, sign in ((E.left, 1), (E.right, -1)):
        prefix = [0] * E.n
        for sym in side:
            if sym == j:
                key = tuple(prefix)
                nc = terms.get(key, 0) + sign
                if nc:
                    terms[key] = nc
                else:
                    del terms[key]
            prefix[sym] += 1
    return MultiPoly(E.n, terms)


def s_vector(E: Equation) -> SVector:
    """All coefficient polynomials ``(S_1, ..., S_n)`` in one scan."""
    acc: list[dict[tuple[int, ...], int]] = [{} for _ in range(E.n)]
    for side, sign in ((E.left, 1), (E.right, -1)):
        prefix = [0] * E.n
        for sym in side:
            key = tuple(prefix)
            terms = acc[sym]
            nc = terms.get(key, 0) + sign
            if nc:
                terms[key] = nc
            else:
                del terms[key]
            prefix[sym] += 1
    return tuple(MultiPoly(E.n, terms) for terms in acc)


def s_vector_eval(E: Equation, beta: tuple[int, ...]) -> PVector:
    """The coefficient vector specialized at a length type."""
    return tuple(p.evaluate(beta) for p in s_vector(E))


def p_vector(h: Morphism) -> PVector:
    """Digit polynomials of all images of a morphism."""
    return tuple(word_poly(im) for im in h.images)


def check_solution_poly(E: Equation, h: Morphism) -> bool:
    """Solution test through the encoding: the dot product of the
    coefficient vector at the length type of ``h`` with the digit
    polynomials of ``h`` must vanish in Z[x]."""
    if h.domain_size != E.n:
        raise ValueError(f"morphism has {h.domain_size} images, equation has {E.n} unknowns")
    beta = h.length_type()
    total = UniPoly.zero()
    for s, im in zip(s_vector(E), h.images):
        total = total + s.evaluate(beta) * word_poly(im)
    return not total


def t_det(E: Equation, Ep: Equation, j: int, k: int) -> MultiPoly:
    """2x2 determinant ``S(E)_j S(Ep)_k - S(Ep)_j S(E)_k`` of the two
    coefficient vectors; antisymmetric in (j, k)."""
    if E.n != Ep.n:
        raise ValueError("equations must share the unknown count")
    for idx in (j, k):
        if not 0 <= idx < E.n:
            raise IndexError(f"unknown index {idx} out of range for n={E.n}")
    return s_poly(E, j) * s_poly(Ep, k) - s_poly(Ep, j) * s_poly(E, k)


def balanced_residual(E: Equation) -> MultiPoly:
    """Dot product of the coefficient vector with ``(X_1-1, ..., X_n-1)``.

    Telescoping leaves the difference of the two full side prefix
    products, so the result is zero exactly for balanced equations.
    """
    n = E.n
    out = MultiPoly.zero(n)
    for j, s in enumerate(s_vector(E)):
        out = out + s * (MultiPoly.variable(n, j) - MultiPoly.one(n))
    return out


def is_balanced(E: Equation) -> bool:
    """Whether every unknown occurs equally often on both sides."""
    return all(E.left.count(j) == E.right.count(j) for j in E.unknowns())


def delta_k(E: Equation, k: int) -> Equation:
    """The equation over n-1 unknowns obtained by erasing unknown ``k``
    everywhere and shifting higher indices down."""
    if not 0 <= k < E.n:
        raise IndexError(f"unknown index {k} out of range for n={E.n}")

    def strip(w: Word) -> Word:
        return Word(tuple(s - (s > k) for s in w if s != k))

    return Equation(strip(E.left), strip(E.right), E.n - 1)
