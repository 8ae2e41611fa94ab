"""Words over indexed alphabets, morphisms between them, and equations.

Letters are small non-negative integers indexing an alphabet; display
names exist only at the text-format boundary. Everything in this module
is an immutable value and every operation is a pure function, so
instances can be shared freely across threads.

Letter-count linear algebra (the occurrence-count rows of a morphism,
their rank over the rationals, hyperplane normals) is exact: ranks use
fraction-free integer elimination, kernels use rational elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union


def unknown_names(n: int) -> list[str]:
    """Default display names x, y, z, x4, x5, ... for ``n`` unknowns."""
    return ["x", "y", "z"][:n] + [f"x{i}" for i in range(4, n + 1)]


@dataclass(frozen=True)
class Word:
    """Finite sequence of letters of an indexed alphabet; may be empty."""

    symbols: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if any(not isinstance(s, int) or s < 0 for s in self.symbols):
            raise ValueError(f"letters must be non-negative integers: {self.symbols!r}")

    @classmethod
    def of(cls, *symbols: int) -> "Word":
        return cls(tuple(symbols))

    @classmethod
    def from_letters(cls, text: str) -> "Word":
        """Build a word from lowercase letters, mapping a->0, b->1, ..."""
        syms = []
        for ch in text:
            if not ("a" <= ch <= "z"):
                raise ValueError(f"expected a lowercase letter, got {ch!r}")
            syms.append(ord(ch) - ord("a"))
        return cls(tuple(syms))

    def letters(self) -> frozenset[int]:
        return frozenset(self.symbols)

    def count(self, symbol: int) -> int:
        return self.symbols.count(symbol)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __bool__(self) -> bool:
        return bool(self.symbols)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.symbols + other.symbols)

    def __str__(self) -> str:
        if any(s >= 26 for s in self.symbols):
            return "".join(f"<{s}>" for s in self.symbols)
        return "".join(chr(ord("a") + s) for s in self.symbols)


@dataclass(frozen=True)
class Equation:
    """A pair of words over the unknowns ``0..n-1``; solved by morphisms
    that map both sides to the same word."""

    left: Word
    right: Word
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("number of unknowns must be non-negative")
        for side in (self.left, self.right):
            if any(s >= self.n for s in side):
                raise ValueError(f"unknown index out of range in {side.symbols!r} (n={self.n})")

    @property
    def size(self) -> int:
        """Total length |left| + |right|."""
        return len(self.left) + len(self.right)

    def occurrences(self, j: int) -> int:
        """Number of occurrences of unknown ``j`` on both sides."""
        return self.left.count(j) + self.right.count(j)

    def unknowns(self) -> frozenset[int]:
        return self.left.letters() | self.right.letters()

    def __str__(self) -> str:
        names = unknown_names(self.n)
        sep = "" if all(len(nm) == 1 for nm in names) else " "
        fmt = lambda w: sep.join(names[s] for s in w) if w else "eps"
        return f"{fmt(self.left)} = {fmt(self.right)}"


@dataclass(frozen=True)
class EqSystem:
    """Nonempty finite list of equations sharing the same unknowns."""

    equations: tuple[Equation, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.equations, tuple):
            object.__setattr__(self, "equations", tuple(self.equations))
        if not self.equations:
            raise ValueError("a system needs at least one equation")
        n = self.equations[0].n
        if any(e.n != n for e in self.equations):
            raise ValueError("all equations of a system must share the unknown count")

    @property
    def n(self) -> int:
        return self.equations[0].n

    def unknowns(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for e in self.equations:
            out |= e.unknowns()
        return out

    def __iter__(self):
        return iter(self.equations)

    def __len__(self) -> int:
        return len(self.equations)


SystemLike = Union[EqSystem, Equation]


def as_system(T: SystemLike) -> EqSystem:
    """Wrap a single equation as a one-element system."""
    if isinstance(T, Equation):
        return EqSystem((T,))
    return T


@dataclass(frozen=True)
class Morphism:
    """Monoid morphism determined by the images of letters ``0..domain_size-1``."""

    images: tuple[Word, ...]
    target_alphabet_size: int

    def __post_init__(self) -> None:
        if not isinstance(self.images, tuple):
            object.__setattr__(self, "images", tuple(self.images))
        for im in self.images:
            if any(s >= self.target_alphabet_size for s in im):
                raise ValueError(
                    f"image {im.symbols!r} uses letters outside alphabet of size "
                    f"{self.target_alphabet_size}"
                )

    @classmethod
    def from_images(cls, *images: str, alphabet_size: int | None = None) -> "Morphism":
        """Build a morphism from letter strings, e.g. ``from_images("ab", "ba", "aba")``."""
        words = tuple(Word.from_letters(s) for s in images)
        if alphabet_size is None:
            alphabet_size = 1 + max((s for w in words for s in w), default=-1)
        return cls(words, alphabet_size)

    @property
    def domain_size(self) -> int:
        return len(self.images)

    def apply(self, w: Word) -> Word:
        out: list[int] = []
        for s in w:
            if s >= self.domain_size:
                raise ValueError(f"letter {s} outside domain of size {self.domain_size}")
            out.extend(self.images[s].symbols)
        return Word(tuple(out))

    __call__ = apply

    def length_type(self) -> tuple[int, ...]:
        """Vector of image lengths."""
        return tuple(len(im) for im in self.images)

    def letters(self) -> frozenset[int]:
        """Target letters actually occurring in some image."""
        out: frozenset[int] = frozenset()
        for im in self.images:
            out |= im.letters()
        return out

    def is_erasing(self) -> bool:
        return any(not im for im in self.images)

    def is_letter_renaming(self) -> bool:
        """True when every image is a single letter and no two images coincide."""
        if any(len(im) != 1 for im in self.images):
            return False
        seen = [im.symbols[0] for im in self.images]
        return len(seen) == len(set(seen))

    def __str__(self) -> str:
        names = unknown_names(self.domain_size)
        return ", ".join(
            f"{nm} -> {im if im else 'eps'}" for nm, im in zip(names, self.images)
        )


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """The morphism ``outer . inner`` (apply ``inner`` first)."""
    images = tuple(outer.apply(im) for im in inner.images)
    return Morphism(images, outer.target_alphabet_size)


def is_solution(h: Morphism, T: SystemLike) -> bool:
    """Whether ``h`` maps both sides of every equation to the same word."""
    system = as_system(T)
    if h.domain_size != system.n:
        raise ValueError(
            f"morphism has {h.domain_size} images but the system uses {system.n} unknowns"
        )
    return all(h.apply(e.left) == h.apply(e.right) for e in system)


def gamma_matrix(h: Morphism) -> tuple[tuple[int, ...], ...]:
    """Occurrence-count matrix: row per target letter, column per domain letter.

    Entry (i, j) counts occurrences of target letter i in the image of
    domain letter j.
    """
    k, n = h.target_alphabet_size, h.domain_size
    rows = [[0] * n for _ in range(k)]
    for j, im in enumerate(h.images):
        for s in im:
            rows[s][j] += 1
    return tuple(tuple(r) for r in rows)


def _integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rank + 1, len(m)):
            for c in range(col + 1, ncols):
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = m[rank][col]
        rank += 1
    return rank


def rank(h: Morphism) -> int:
    """Dimension over Q of the row space of the occurrence-count matrix."""
    return _integer_rank(gamma_matrix(h))


def linear_equivalent(h: Morphism, g: Morphism) -> bool:
    """Whether the two occurrence-count row spaces coincide over Q."""
    if h.domain_size != g.domain_size:
        raise ValueError("morphisms must share the number of domain letters")
    a = gamma_matrix(h)
    b = gamma_matrix(g)
    ra, rb = _integer_rank(a), _integer_rank(b)
    return ra == rb == _integer_rank(a + b)


def _kernel_vector(rows: Sequence[Sequence[int]], n: int) -> list[Fraction] | None:
    """Basis vector of the nullspace when it is one-dimensional, else None."""
    m = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [v / inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    if len(pivots) != n - 1:
        return None
    free = next(c for c in range(n) if c not in pivots)
    v = [Fraction(0)] * n
    v[free] = Fraction(1)
    for row, pc in zip(m, pivots):
        v[pc] = -row[free]
    return v


@dataclass(frozen=True)
class LambdaVector:
    """Integer hyperplane normal with coprime entries.

    Canonical form: entries share no common factor and the first nonzero
    entry is positive. ``plus`` and ``minus`` give the componentwise
    split ``entries = plus - minus`` with disjoint supports.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        g = 0
        for v in self.entries:
            g = gcd(g, abs(v))
        if g == 0:
            raise ValueError("the zero vector is not a direction")
        if g != 1:
            raise ValueError(f"entries {self.entries!r} are not coprime")
        first = next(v for v in self.entries if v != 0)
        if first < 0:
            raise ValueError(f"canonical sign requires a positive first nonzero entry: {self.entries!r}")

    @classmethod
    def from_vector(cls, entries: Iterable[int]) -> "LambdaVector":
        """Normalize an arbitrary nonzero integer vector to canonical form."""
        vec = tuple(int(v) for v in entries)
        g = 0
        for v in vec:
            g = gcd(g, abs(v))
        if g == 0:
            raise ValueError("the zero vector is not a direction")
        vec = tuple(v // g for v in vec)
        if next(v for v in vec if v != 0) < 0:
            vec = tuple(-v for v in vec)
        return cls(vec)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def plus(self) -> tuple[int, ...]:
        return tuple(max(v, 0) for v in self.entries)

    @property
    def minus(self) -> tuple[int, ...]:
        return tuple(max(-v, 0) for v in self.entries)

    def dot(self, other: Sequence[int]) -> int:
        if len(other) != self.n:
            raise ValueError("dimension mismatch")
        return sum(a * b for a, b in zip(self.entries, other))

    def is_erasing_constraint(self) -> bool:
        """True when the hyperplane meets the non-negative orthant only at
        vectors that vanish on the support (all entries non-negative)."""
        return all(v >= 0 for v in self.entries)

    def constraint_text(self, names: Sequence[str] | None = None) -> str:
        """Render as a length constraint, e.g. ``2|h(x)| + |h(y)| = |h(z)|``."""
        names = list(names) if names is not None else unknown_names(self.n)

        def side(part: tuple[int, ...]) -> str:
            terms = []
            for c, nm in zip(part, names):
                if c:
                    terms.append(f"{'' if c == 1 else c}|h({nm})|")
            return " + ".join(terms) if terms else "0"

        return f"{side(self.plus)} = {side(self.minus)}"

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.entries) + ")"


def gamma_normal(h: Morphism) -> LambdaVector:
    """Canonical integer normal of the occurrence-count row space.

    Defined exactly when that space is a hyperplane, i.e. rank(h) equals
    domain_size - 1; raises ValueError otherwise.
    """
    n = h.domain_size
    v = _kernel_vector(gamma_matrix(h), n)
    if v is None:
        raise ValueError(f"morphism has rank != {n - 1}; its row space is not a hyperplane")
    denom = 1
    for x in v:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    return LambdaVector.from_vector(int(x * denom) for x in v)


def theta_alpha(alpha: Sequence[int], k: int) -> Morphism:
    """Power endomorphism of a k-letter alphabet: letter i maps to its
    alpha[i]-th power."""
    alpha = tuple(alpha)
    if len(alpha) != k:
        raise ValueError(f"expected {k} exponents, got {len(alpha)}")
    if any(a < 0 for a in alpha):
        raise ValueError("exponents must be non-negative")
    return Morphism(tuple(Word((i,) * a) for i, a in enumerate(alpha)), k)


def canonical_letters(h: Morphism) -> Morphism:
    """Rename target letters to 0, 1, 2, ... by first occurrence across the
    images (in image order), dropping unused letters."""
    order: list[int] = []
    seen: set[int] = set()
    for im in h.images:
        for s in im:
            if s not in seen:
                seen.add(s)
                order.append(s)
    remap = {old: new for new, old in enumerate(order)}
    images = tuple(Word(tuple(remap[s] for s in im)) for im in h.images)
    return Morphism(images, len(order))


def renaming_equivalent(h: Morphism, g: Morphism) -> bool:
    """Whether the morphisms agree up to a bijective renaming of the target
    letters that occur."""
    if h.domain_size != g.domain_size:
        return False
    return canonical_letters(h) == canonical_letters(g)
