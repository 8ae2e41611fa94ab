import pytest
from hypothesis import given
from hypothesis import strategies as st

from weq import (
    Binomial,
    LambdaVector,
    MultiPoly,
    UniPoly,
    Word,
    binomial_factors,
    divide_by_binomial,
    format_poly,
    minimal_monomials,
    word_poly,
)
from weq.words import _integer_rank


def P(n, terms):
    return MultiPoly(n, terms)


def random_poly(rng, n, max_terms=5, max_exp=4, max_coeff=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(n))
        c = rng.choice([c for c in range(-max_coeff, max_coeff + 1) if c])
        terms[e] = terms.get(e, 0) + c
    return MultiPoly(n, terms)


def random_mixed_lambda(rng, n, bound=3):
    """Coprime direction with nonempty positive and negative parts."""
    while True:
        vec = [rng.randint(-bound, bound) for _ in range(n)]
        if any(v > 0 for v in vec) and any(v < 0 for v in vec):
            return LambdaVector.from_vector(vec)


def positive_kernel_point(lam: LambdaVector) -> tuple[int, ...]:
    """A strictly positive integer point on the hyperplane of ``lam``."""
    a = sum(v for v in lam.entries if v > 0)
    b = -sum(v for v in lam.entries if v < 0)
    assert a > 0 and b > 0
    return tuple(b if v > 0 else a if v < 0 else 1 for v in lam.entries)


def nonneg_kernel_basis(lam: LambdaVector) -> list[tuple[int, ...]]:
    """n-1 linearly independent non-negative points on the hyperplane."""
    n = lam.n
    p = next(i for i, v in enumerate(lam.entries) if v)
    raw = []
    for i in range(n):
        if i == p:
            continue
        vec = [0] * n
        vec[i] = lam.entries[p]
        vec[p] = -lam.entries[i]
        raw.append(vec)
    v = positive_kernel_point(lam)
    c = 1 + max(abs(x) for vec in raw for x in vec)
    while True:
        basis = [tuple(x + c * vi for x, vi in zip(vec, v)) for vec in raw]
        if all(x >= 0 for b in basis for x in b) and _integer_rank(basis) == n - 1:
            return basis
        c += 1


class TestArithmetic:
    def test_difference_of_squares(self):
        x, y = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
        assert (x - y) * (x + y) == x * x - y * y

    def test_additive_inverse(self, rng):
        p = random_poly(rng, 3)
        assert not (p + (-p))

    def test_worked_determinant_expansion(self):
        x, y, z = (MultiPoly.variable(3, i) for i in range(3))
        lhs = x * (x * x * y - z) * (x - 1)
        rhs = P(3, {(4, 1, 0): 1, (3, 1, 0): -1, (2, 0, 1): -1, (1, 0, 1): 1})
        assert lhs == rhs

    def test_ring_mismatch(self):
        with pytest.raises(ValueError):
            MultiPoly.variable(2, 0) * MultiPoly.variable(3, 0)

    @given(st.integers(0, 6), st.integers(0, 6))
    def test_power_matches_repeated_product(self, a, b):
        x, y = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
        p = x + 2 * y - 1
        q = MultiPoly.one(2)
        for _ in range(a):
            q = q * p
        assert p**a == q


class TestEvaluate:
    def test_monomial_rule(self, rng):
        for _ in range(100):
            n = rng.randint(1, 4)
            alpha = tuple(rng.randint(0, 5) for _ in range(n))
            gamma = tuple(rng.randint(0, 5) for _ in range(n))
            got = MultiPoly.monomial(n, alpha).evaluate(gamma)
            want = UniPoly.monomial(1, sum(a * g for a, g in zip(alpha, gamma)))
            assert got == want

    def test_line_substitution(self):
        p = P(3, {(0, 0, 0): 1, (1, 1, 0): 1, (0, 0, 1): -1, (1, 1, 1): -1})
        assert p.evaluate((1, 1, 1)) == UniPoly({0: 1, 2: 1, 1: -1, 3: -1})

    def test_zero_vector_sums_coefficients(self, rng):
        p = random_poly(rng, 3)
        total = sum(p.terms.values())
        assert p.evaluate((0, 0, 0)) == UniPoly.constant(total)

    def test_homomorphism(self, rng):
        for _ in range(100):
            n = rng.randint(1, 3)
            p, q = random_poly(rng, n), random_poly(rng, n)
            gamma = tuple(rng.randint(0, 4) for _ in range(n))
            assert (p * q).evaluate(gamma) == p.evaluate(gamma) * q.evaluate(gamma)
            assert (p + q).evaluate(gamma) == p.evaluate(gamma) + q.evaluate(gamma)


class TestWordPoly:
    def test_two_letters(self):
        assert word_poly(Word.from_letters("ab")) == UniPoly({0: 1, 1: 2})

    def test_empty_word(self):
        assert word_poly(Word(())) == UniPoly.zero()

    def test_three_letters(self):
        assert word_poly(Word.from_letters("aba")) == UniPoly({0: 1, 1: 2, 2: 1})

    def test_length_recoverable(self, rng):
        for _ in range(50):
            w = Word(tuple(rng.randrange(3) for _ in range(rng.randint(0, 6))))
            assert word_poly(w).degree() == len(w) - 1


class TestDivision:
    def test_difference_of_squares(self):
        p = P(2, {(2, 0): 1, (0, 2): -1})
        q = divide_by_binomial(p, Binomial(LambdaVector((1, -1))))
        assert q == P(2, {(1, 0): 1, (0, 1): 1})

    def test_worked_example_quotient(self):
        p = P(3, {(4, 1, 0): 1, (3, 1, 0): -1, (2, 0, 1): -1, (1, 0, 1): 1})
        q = divide_by_binomial(p, Binomial(LambdaVector((2, 1, -1))))
        assert q == P(3, {(2, 0, 0): 1, (1, 0, 0): -1})

    def test_not_divisible(self):
        p = P(3, {(2, 1, 0): 1, (0, 0, 0): -1})
        assert divide_by_binomial(p, Binomial(LambdaVector((2, 1, -1)))) is None

    def test_exactness_fuzz(self, rng):
        for _ in range(200):
            n = rng.randint(2, 4)
            lam = random_mixed_lambda(rng, n)
            b = Binomial(lam)
            q = random_poly(rng, n)
            p = b.as_poly() * q
            got = divide_by_binomial(p, b)
            if p:
                assert got is not None and got * b.as_poly() == p
            # a remainder-free division of a perturbed polynomial must
            # still multiply back exactly
            p2 = p + MultiPoly.monomial(n, tuple(rng.randint(0, 3) for _ in range(n)))
            got2 = divide_by_binomial(p2, b)
            if got2 is not None:
                assert got2 * b.as_poly() == p2

    def test_divide_zero(self):
        b = Binomial(LambdaVector((1, -1)))
        assert divide_by_binomial(MultiPoly.zero(2), b) == MultiPoly.zero(2)


class TestEvaluationIdentities:
    def test_difference_evaluation_formula(self, rng):
        # [X^a - X^b](g) == x^(b.g) * (x^((a-b).g) - 1) when (a-b).g >= 0
        for _ in range(200):
            n = rng.randint(1, 4)
            alpha = tuple(rng.randint(0, 4) for _ in range(n))
            beta = tuple(rng.randint(0, 4) for _ in range(n))
            gamma = tuple(rng.randint(0, 4) for _ in range(n))
            d = sum((a - b) * g for a, b, g in zip(alpha, beta, gamma))
            if d < 0:
                alpha, beta = beta, alpha
                d = -d
            p = MultiPoly.monomial(n, alpha) - MultiPoly.monomial(n, beta)
            bg = sum(b * g for b, g in zip(beta, gamma))
            want = UniPoly.monomial(1, bg) * (UniPoly.monomial(1, d) - UniPoly.constant(1))
            assert p.evaluate(gamma) == want

    def test_vanishing_iff_orthogonal(self, rng):
        for _ in range(200):
            n = rng.randint(1, 4)
            alpha = tuple(rng.randint(0, 4) for _ in range(n))
            beta = tuple(rng.randint(0, 4) for _ in range(n))
            gamma = tuple(rng.randint(0, 4) for _ in range(n))
            p = MultiPoly.monomial(n, alpha) - MultiPoly.monomial(n, beta)
            d = sum((a - b) * g for a, b, g in zip(alpha, beta, gamma))
            assert (not p.evaluate(gamma)) == (d == 0)

    def test_power_telescope(self, rng):
        # X^(ca) - X^(cb) == (X^a - X^b) * sum_i X^(i*a + (c-1-i)*b)
        for _ in range(100):
            n = rng.randint(1, 4)
            c = rng.randint(1, 5)
            alpha = tuple(rng.randint(0, 4) for _ in range(n))
            beta = tuple(rng.randint(0, 4) for _ in range(n))
            lhs = MultiPoly.monomial(n, tuple(c * a for a in alpha)) - MultiPoly.monomial(
                n, tuple(c * b for b in beta)
            )
            series = MultiPoly.zero(n)
            for i in range(c):
                series = series + MultiPoly.monomial(
                    n, tuple(i * a + (c - 1 - i) * b for a, b in zip(alpha, beta))
                )
            rhs = (MultiPoly.monomial(n, alpha) - MultiPoly.monomial(n, beta)) * series
            assert lhs == rhs


class TestDivisibilityVsVanishing:
    def test_binomial_difference_exact_criterion(self, rng):
        # for pure differences, vanishing at n-1 independent hyperplane
        # points decides divisibility exactly
        for _ in range(150):
            n = rng.randint(2, 4)
            lam = random_mixed_lambda(rng, n)
            basis = nonneg_kernel_basis(lam)
            b = Binomial(lam)
            mu = tuple(rng.randint(0, 2) for _ in range(n))
            m = rng.randint(1, 3)
            if rng.random() < 0.5:
                alpha = tuple(x + m * p for x, p in zip(mu, lam.plus))
                beta = tuple(x + m * q for x, q in zip(mu, lam.minus))
            else:
                alpha = tuple(rng.randint(0, 5) for _ in range(n))
                beta = tuple(rng.randint(0, 5) for _ in range(n))
            p = MultiPoly.monomial(n, alpha) - MultiPoly.monomial(n, beta)
            vanishes = all(not p.evaluate(g) for g in basis)
            divisible = divide_by_binomial(p, b) is not None if p else True
            assert vanishes == divisible

    def test_general_polynomials(self, rng):
        for _ in range(100):
            n = rng.randint(2, 4)
            lam = random_mixed_lambda(rng, n)
            b = Binomial(lam)
            basis = nonneg_kernel_basis(lam)
            pos = positive_kernel_point(lam)
            samples = list(basis) + [pos]
            for _ in range(8):
                coeffs = [rng.randint(0, 2) for _ in basis]
                samples.append(
                    tuple(sum(c * g[i] for c, g in zip(coeffs, basis)) for i in range(n))
                )
            p = random_poly(rng, n)
            if not p:
                continue
            if divide_by_binomial(p, b) is not None:
                assert all(not p.evaluate(g) for g in samples)
            else:
                # seeded: some sampled hyperplane point must witness it
                assert any(p.evaluate(g) for g in samples)


class TestBinomialFactors:
    def test_worked_determinant(self):
        p = P(3, {(4, 1, 0): 1, (3, 1, 0): -1, (2, 0, 1): -1, (1, 0, 1): 1})
        fac = binomial_factors(p)
        assert fac.sign == 1
        assert fac.content == (1, 0, 0)
        assert [(b.lam.entries, m) for b, m in fac.factors] == [
            ((1, 0, 0), 1),
            ((2, 1, -1), 1),
        ]
        assert fac.residual == MultiPoly.one(3)
        assert fac.expand() == p

    def test_difference_of_squares_residual(self):
        p = P(2, {(2, 0): 1, (0, 2): -1})
        fac = binomial_factors(p)
        assert [(b.lam.entries, m) for b, m in fac.factors] == [((1, -1), 1)]
        assert fac.residual == P(2, {(1, 0): 1, (0, 1): 1})

    def test_pure_monomial(self):
        fac = binomial_factors(P(2, {(2, 1): 3}))
        assert fac.content == (2, 1)
        assert fac.factors == ()
        assert fac.residual == MultiPoly.constant(2, 3)
        assert fac.sign == 1

    def test_negative_unit(self):
        fac = binomial_factors(P(1, {(0,): 1, (1,): -1}))  # 1 - X = -(X - 1)
        assert fac.sign == -1
        assert [(b.lam.entries, m) for b, m in fac.factors] == [((1,), 1)]
        assert fac.residual == MultiPoly.one(1)

    def test_multiplicity(self):
        x, y = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
        p = (x - y) * (x - y) * (x + y)
        fac = binomial_factors(p)
        assert [(b.lam.entries, m) for b, m in fac.factors] == [((1, -1), 2)]

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            binomial_factors(MultiPoly.zero(2))

    def test_roundtrip_fuzz(self, rng):
        for _ in range(200):
            n = rng.randint(2, 4)
            lams = []
            while len(lams) < rng.randint(1, 3):
                lam = random_mixed_lambda(rng, n)
                if lam not in lams:
                    lams.append(lam)
            p = MultiPoly.monomial(n, tuple(rng.randint(0, 2) for _ in range(n)))
            for lam in lams:
                p = p * Binomial(lam).as_poly()
            sparse = MultiPoly(
                n,
                {
                    tuple(rng.randint(0, 5) for _ in range(n)): rng.choice((-1, 1))
                    for _ in range(rng.randint(1, 4))
                },
            )
            if not sparse:
                continue
            p = p * sparse
            fac = binomial_factors(p)
            assert fac.expand() == p
            for b, _m in fac.factors:
                # canonical direction vectors are coprime with split parts
                LambdaVector(b.lam.entries)
                assert sum(x * y for x, y in zip(b.lam.plus, b.lam.minus)) == 0


class TestAgainstGeneralFactorizer:
    def test_matches_sympy_irreducible_factorization(self, rng):
        # independent completeness oracle: a general-purpose factorizer
        # must find exactly the same pure-difference factors, the same
        # monomial content, and a residual with no such factor left
        sympy = pytest.importorskip("sympy")
        import math

        def to_sympy(p, syms):
            expr = sympy.Integer(0)
            for e, c in p.terms.items():
                t = sympy.Integer(c)
                for s, ei in zip(syms, e):
                    t *= s**ei
                expr += t
            return sympy.expand(expr)

        for case in range(40):
            n = rng.randint(2, 3)
            p = MultiPoly.monomial(
                n, tuple(rng.randint(0, 2) for _ in range(n)), rng.choice((-2, -1, 1, 3))
            )
            for _ in range(rng.randint(1, 3)):
                vec = [rng.randint(-2, 2) for _ in range(n)]
                if any(vec):
                    p = p * Binomial(LambdaVector.from_vector(vec)).as_poly()
            sparse = MultiPoly(
                n,
                {
                    tuple(rng.randint(0, 3) for _ in range(n)): rng.choice((-1, 1))
                    for _ in range(rng.randint(1, 3))
                },
            )
            if not sparse:
                continue
            p = p * sparse
            fac = binomial_factors(p)
            syms = sympy.symbols(f"v0:{n}")
            coeff, sfactors = sympy.factor_list(to_sympy(p, syms))
            mine = {b.lam.entries: m for b, m in fac.factors}
            theirs = {}
            content = [0] * n
            flips = 0
            others = sympy.Integer(1)
            for f, mult in sfactors:
                terms = sympy.Poly(f, *syms).terms()
                if len(terms) == 1 and abs(terms[0][1]) == 1:
                    for i, ei in enumerate(terms[0][0]):
                        content[i] += ei * mult
                    if terms[0][1] == -1:
                        flips += mult
                    continue
                if len(terms) == 2 and sorted(int(c) for _, c in terms) == [-1, 1]:
                    pos = next(e for e, c in terms if c == 1)
                    neg = next(e for e, c in terms if c == -1)
                    delta = tuple(a - b for a, b in zip(pos, neg))
                    g = 0
                    for v in delta:
                        g = math.gcd(g, abs(v))
                    if g == 1:
                        lam = LambdaVector.from_vector(delta)
                        if next(v for v in delta if v) < 0:
                            flips += mult
                        theirs[lam.entries] = theirs.get(lam.entries, 0) + mult
                        continue
                others *= f**mult
            assert mine == theirs, (case, mine, theirs)
            assert list(fac.content) == content, (case, fac.content, content)
            lhs = to_sympy(fac.residual * fac.sign, syms)
            rhs = sympy.expand(sympy.Integer(coeff) * sympy.Integer(-1) ** flips * others)
            assert sympy.expand(lhs - rhs) == 0, case


class TestMinimalMonomials:
    def test_two_incomparable(self):
        assert minimal_monomials(P(3, {(2, 1, 0): 1, (0, 0, 1): -1})) == {
            (2, 1, 0),
            (0, 0, 1),
        }

    def test_worked_determinant(self):
        p = P(3, {(4, 1, 0): 1, (3, 1, 0): -1, (2, 0, 1): -1, (1, 0, 1): 1})
        assert minimal_monomials(p) == {(3, 1, 0), (1, 0, 1)}

    def test_constant(self):
        assert minimal_monomials(MultiPoly.constant(2, 5)) == {(0, 0)}

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            minimal_monomials(MultiPoly.zero(2))

    def test_oracle_agreement(self, rng):
        for _ in range(100):
            p = random_poly(rng, 3, max_terms=8)
            if not p:
                continue
            supp = set(p.terms)
            naive = {
                e
                for e in supp
                if not any(
                    f != e and all(fi <= ei for fi, ei in zip(f, e)) for f in supp
                )
            }
            assert minimal_monomials(p) == naive


class TestLowerBound:
    def test_factor_count_bounds_minimal_monomials(self, rng):
        # products of k distinct mixed-sign irreducible differences have
        # at least k+1 minimal monomials
        for _ in range(150):
            n = rng.randint(2, 4)
            lams = []
            while len(lams) < rng.randint(1, 3):
                lam = random_mixed_lambda(rng, n)
                if lam not in lams:
                    lams.append(lam)
            p = MultiPoly.one(n)
            for lam in lams:
                p = p * Binomial(lam).as_poly()
            sparse = MultiPoly(
                n,
                {
                    tuple(rng.randint(0, 4) for _ in range(n)): rng.choice((-1, 1))
                    for _ in range(rng.randint(1, 3))
                },
            )
            if not sparse:
                continue
            p = p * sparse
            k = len(binomial_factors(p).hyperplane_factors())
            assert len(minimal_monomials(p)) >= k + 1


class TestFormatting:
    def test_canonical_order(self):
        p = P(3, {(4, 1, 0): 1, (3, 1, 0): -1, (2, 0, 1): -1, (1, 0, 1): 1})
        assert str(p) == "X^4*Y - X^3*Y - X^2*Z + X*Z"

    def test_units_and_constants(self):
        assert str(MultiPoly.zero(2)) == "0"
        assert str(MultiPoly.constant(2, -7)) == "-7"
        assert format_poly(P(2, {(1, 1): -2, (0, 0): 1})) == "-2*X*Y + 1"

    def test_unipoly_ascending(self):
        assert str(UniPoly({0: 1, 1: 2, 3: -1})) == "1 + 2*x - x^3"
        assert str(UniPoly.zero()) == "0"
