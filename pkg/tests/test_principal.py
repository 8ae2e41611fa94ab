import random
from itertools import product

import pytest

from weq import (
    EqSystem,
    Morphism,
    Word,
    compose,
    is_solution,
    is_trivial,
    principal_decompose,
    rank,
    renaming_equivalent,
)
from weq.search import random_equation_solved_by, random_morphism

from conftest import eq, eq_n, morph


def all_divisor_candidates(g: Morphism):
    """Every (g', theta') with theta' non-erasing and compose(theta', g') == g.

    Enumerates candidate image splits directly; feasible only for tiny g.
    Used as an independence oracle for minimality.
    """
    total = sum(len(im) for im in g.images)
    # candidate letter counts for g'
    for m in range(1, total + 1):
        # images of g' over letters 0..m-1, lengths <= lengths of g images
        pools = []
        for im in g.images:
            opts = []
            for length in range(0 if not im else 1, len(im) + 1):
                opts.extend(product(range(m), repeat=length))
            pools.append(opts)
        for images in product(*pools):
            gp = Morphism(tuple(Word(w) for w in images), m)
            if set(range(m)) != gp.letters():
                continue
            # try to solve for theta': images of the m letters
            theta_imgs: list[tuple[int, ...] | None] = [None] * m
            ok = True
            for gim, im in zip(gp.images, g.images):
                # split im into len(gim) nonempty chunks consistent with known letters
                def fit(pos: int, idx: int) -> bool:
                    if idx == len(gim):
                        return pos == len(im)
                    letter = gim[idx]
                    if theta_imgs[letter] is not None:
                        chunk = theta_imgs[letter]
                        if im.symbols[pos : pos + len(chunk)] != chunk:
                            return False
                        return fit(pos + len(chunk), idx + 1)
                    for clen in range(1, len(im) - pos + 1):
                        theta_imgs[letter] = im.symbols[pos : pos + clen]
                        if fit(pos + clen, idx + 1):
                            return True
                        theta_imgs[letter] = None
                    return False

                if not fit(0, 0):
                    ok = False
                    break
            if ok and all(t is not None for t in theta_imgs):
                theta = Morphism(
                    tuple(Word(t) for t in theta_imgs), g.target_alphabet_size
                )
                if compose(theta, gp) == g:
                    yield gp, theta


def assert_principal_by_bruteforce(g: Morphism, T: EqSystem) -> None:
    """No solution divides g except through a renaming."""
    assert is_solution(g, T)
    for gp, theta in all_divisor_candidates(g):
        if is_solution(gp, T) and not theta.is_letter_renaming():
            raise AssertionError(f"{g} is divisible by the solution {gp} via {theta}")


class TestIsTrivial:
    def test_identical_sides(self):
        assert is_trivial(eq("xy", "xy"))

    def test_conjugacy_not_trivial(self):
        assert not is_trivial(eq("xz", "zy"))

    def test_one_nontrivial_member(self):
        T = EqSystem((eq_n("xy", "xy", 3), eq("xz", "zy")))
        assert not is_trivial(T)


class TestExamples:
    def test_commutation_powers(self):
        T = EqSystem((eq("xy", "yx"),))
        h = morph("abab", "ab")
        dec = principal_decompose(h, T)
        assert dec.g == morph("aa", "a")
        assert dec.theta == Morphism((Word.from_letters("ab"),), 2)
        assert compose(dec.theta, dec.g) == h
        assert_principal_by_bruteforce(dec.g, T)

    def test_trivial_system_identity(self):
        T = EqSystem((eq("xy", "xy"),))
        h = morph("ab", "ba")
        dec = principal_decompose(h, T)
        assert dec.g == morph("a", "b")
        assert dec.theta == h
        assert rank(dec.g) == 2

    def test_conjugacy_already_principal(self):
        T = EqSystem((eq("xz", "zy"),))
        h = morph("ab", "ba", "aba")
        dec = principal_decompose(h, T)
        assert renaming_equivalent(dec.g, h)
        assert dec.theta.is_letter_renaming()
        assert rank(h) == 2 == len(h.letters())
        assert_principal_by_bruteforce(dec.g, T)

    def test_rejects_non_solution(self):
        with pytest.raises(ValueError):
            principal_decompose(morph("a", "b", "a"), EqSystem((eq("xz", "zy"),)))

    def test_erasing_images_pass_through(self):
        T = EqSystem((eq("xzy", "zyx"),))
        h = Morphism((Word.from_letters("ab"), Word(), Word.from_letters("ab")), 2)
        assert is_solution(h, T)
        dec = principal_decompose(h, T)
        assert not dec.g.images[1]
        assert compose(dec.theta, dec.g) == h


def solved_system_instances(rng: random.Random, count: int):
    """Yield (system, solution) pairs whose unknowns all occur in the system."""
    made = 0
    while made < count:
        n = rng.randint(1, 4)
        k = rng.randint(1, 3)
        h = random_morphism(rng, n, k, 4)
        eqs = []
        for _ in range(rng.randint(1, 3)):
            E = random_equation_solved_by(rng, h, 5)
            if E is not None:
                eqs.append(E)
        if not eqs:
            continue
        covered = set()
        for E in eqs:
            covered |= E.unknowns()
        if covered != set(range(n)):
            continue
        T = EqSystem(tuple(eqs))
        assert is_solution(h, T)
        made += 1
        yield T, h


class TestFuzz:
    def _instances(self, rng, count):
        return solved_system_instances(rng, count)

    def test_roundtrip_and_rank_invariants(self, rng):
        for T, h in self._instances(rng, 300):
            dec = principal_decompose(h, T)
            assert compose(dec.theta, dec.g) == h
            assert is_solution(dec.g, T)
            assert rank(dec.g) == len(dec.g.letters())
            assert rank(h) <= rank(dec.g)
            if not is_trivial(T):
                assert len(dec.g.letters()) < len(T.unknowns())

    def test_idempotent_on_principal(self, rng):
        for T, h in self._instances(rng, 150):
            g = principal_decompose(h, T).g
            again = principal_decompose(g, T)
            assert again.g == g
            assert again.theta.is_letter_renaming()

    def test_deterministic_in_length_type(self, rng):
        for T, h in self._instances(rng, 150):
            dec = principal_decompose(h, T)
            # another solution with the same length type: permute target
            # letters in the substitution part
            k = dec.theta.target_alphabet_size
            if k < 2:
                continue
            perm = list(range(k))
            rng.shuffle(perm)
            theta2 = Morphism(
                tuple(Word(tuple(perm[s] for s in im)) for im in dec.theta.images), k
            )
            h2 = compose(theta2, dec.g)
            assert is_solution(h2, T)
            assert h2.length_type() == h.length_type()
            dec2 = principal_decompose(h2, T)
            assert dec2.g == dec.g
            assert dec2.theta.length_type() == dec.theta.length_type()
