"""Brute-force enumeration of solutions at desk scale.

Exhaustively tests every morphism within a total-image-length budget by
direct word comparison, catalogs the solutions by rank and groups the
rank-(n-1) ones into linear-equivalence classes via their hyperplane
normals. Also hosts the seeded fuzz generators used to cross-check the
polynomial encoding against the word-level definitions.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterator

from .analysis import STATUS_OK, BoundReport, bounds
from .encode import check_solution_poly
from .words import (
    EqSystem,
    Equation,
    LambdaVector,
    Morphism,
    SystemLike,
    Word,
    as_system,
    gamma_normal,
    is_solution,
    rank,
)


class SearchSpaceError(ValueError):
    """The configured enumeration would exceed the candidate budget."""


@dataclass(frozen=True)
class SearchConfig:
    """Finite search space: all morphisms with total image length at most
    ``max_total_image_length`` over ``alphabet_size`` letters."""

    max_total_image_length: int
    alphabet_size: int = 2
    allow_erasing: bool = True
    max_candidates: int = 100_000_000


@dataclass(frozen=True)
class SolutionClass:
    """One linear-equivalence class of rank-(n-1) solutions."""

    normal: LambdaVector
    members: tuple[Morphism, ...]

    def is_erasing_class(self) -> bool:
        return self.normal.is_erasing_constraint()


@dataclass(frozen=True)
class SolutionCatalog:
    """All solutions found within a search space, in enumeration order
    (total image length, then length type, then images lexicographically)."""

    n: int
    config: SearchConfig
    solutions: tuple[Morphism, ...]
    by_rank: dict[int, tuple[Morphism, ...]]
    classes: tuple[SolutionClass, ...]

    def rank_counts(self) -> dict[int, int]:
        return {r: len(ms) for r, ms in sorted(self.by_rank.items())}

    def class_id(self, h: Morphism) -> int:
        """Index of the class containing ``h``, or -1 when its rank is not n-1."""
        for i, cls in enumerate(self.classes):
            if h in cls.members:
                return i
        return -1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "max_total_image_length": self.config.max_total_image_length,
            "alphabet_size": self.config.alphabet_size,
            "solution_count": len(self.solutions),
            "rank_counts": {str(r): c for r, c in self.rank_counts().items()},
            "classes": [
                {
                    "normal": list(cls.normal.entries),
                    "constraint": cls.normal.constraint_text(),
                    "size": len(cls.members),
                    "example": [str(im) for im in cls.members[0].images],
                }
                for cls in self.classes
            ],
            "solutions": [
                {
                    "images": [str(im) for im in h.images],
                    "rank": rank(h),
                    "class": self.class_id(h),
                }
                for h in self.solutions
            ],
        }

    def csv_rows(self) -> list[tuple[str, int, int]]:
        """Rows (length type, rank, class id) for every solution."""
        return [
            (" ".join(str(v) for v in h.length_type()), rank(h), self.class_id(h))
            for h in self.solutions
        ]


def _compositions(total: int, parts: int, minimum: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= minimum:
            yield (total,)
        return
    for head in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - head, parts - 1, minimum):
            yield (head,) + rest


def search_space_size(n: int, cfg: SearchConfig) -> int:
    """Exact number of candidate morphisms the configuration spans."""
    minimum = 0 if cfg.allow_erasing else 1
    total = 0
    for s in range(cfg.max_total_image_length + 1):
        shifted = s - minimum * n
        if shifted < 0:
            continue
        total += comb(shifted + n - 1, n - 1) * cfg.alphabet_size**s
    return total


def _feasible_length_types(T: EqSystem, cfg: SearchConfig) -> list[tuple[int, ...]]:
    """Length types within budget whose images could balance every
    equation's side lengths."""
    n = T.n
    diffs = [
        tuple(e.left.count(j) - e.right.count(j) for j in range(n)) for e in T
    ]
    minimum = 0 if cfg.allow_erasing else 1
    out = []
    for s in range(cfg.max_total_image_length + 1):
        for lt in _compositions(s, n, minimum):
            if all(sum(d * l for d, l in zip(diff, lt)) == 0 for diff in diffs):
                out.append(lt)
    return out


def _words_of_length(k: int, length: int) -> list[bytes]:
    return [bytes(p) for p in product(range(k), repeat=length)]


def _solutions_for_length_type(
    args: tuple[tuple[tuple[tuple[int, ...], tuple[int, ...]], ...], int, tuple[int, ...]],
) -> list[tuple[bytes, ...]]:
    sides, k, lt = args
    pools = [_words_of_length(k, l) for l in lt]
    found = []
    for images in product(*pools):
        ok = True
        for u, v in sides:
            if b"".join(images[s] for s in u) != b"".join(images[s] for s in v):
                ok = False
                break
        if ok:
            found.append(images)
    return found


def enumerate_solutions(
    T: SystemLike, cfg: SearchConfig, workers: int = 1
) -> SolutionCatalog:
    """Catalog every solution of ``T`` within the configured space.

    With ``workers > 1`` length types are scanned in parallel processes
    and merged back in the serial order, so the catalog is identical.
    """
    system = as_system(T)
    n = system.n
    size = search_space_size(n, cfg)
    if size > cfg.max_candidates:
        raise SearchSpaceError(
            f"search space of {size} morphisms exceeds the budget of {cfg.max_candidates}"
        )
    sides = tuple((e.left.symbols, e.right.symbols) for e in system)
    lts = _feasible_length_types(system, cfg)
    tasks = [(sides, cfg.alphabet_size, lt) for lt in lts]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solutions_for_length_type, tasks))
    else:
        results = [_solutions_for_length_type(t) for t in tasks]

    solutions: list[Morphism] = []
    for images_list in results:
        for images in images_list:
            solutions.append(
                Morphism(tuple(Word(tuple(b)) for b in images), cfg.alphabet_size)
            )

    by_rank: dict[int, list[Morphism]] = {}
    classes: dict[tuple[int, ...], list[Morphism]] = {}
    for h in solutions:
        r = rank(h)
        by_rank.setdefault(r, []).append(h)
        if r == n - 1:
            lam = gamma_normal(h)
            classes.setdefault(lam.entries, []).append(h)
    return SolutionCatalog(
        n=n,
        config=cfg,
        solutions=tuple(solutions),
        by_rank={r: tuple(ms) for r, ms in by_rank.items()},
        classes=tuple(
            SolutionClass(LambdaVector(entries), tuple(ms))
            for entries, ms in sorted(classes.items())
        ),
    )


@dataclass(frozen=True)
class BoundCheckReport:
    """Outcome of checking the class-count bounds on one equation pair."""

    status: str  # ok | identical-equations | no-nonzero-determinant | commutation-like
    ok: bool
    class_count: int | None = None
    erasing_class_count: int = 0
    bound_report: BoundReport | None = None
    counterexample: dict | None = None


def verify_bounds(
    E: Equation, Ep: Equation, cfg: SearchConfig, workers: int = 1
) -> BoundCheckReport:
    """Exhaustively count linear-equivalence classes of rank-(n-1) common
    solutions and compare against the proved bounds.

    Pairs that cannot be independent are skipped with a status: identical
    equations, pairs with no nonzero determinant, and pairs whose search
    finds two or more erasing classes (that forces both equations to be
    equivalent to the commutation equation).
    """
    if E == Ep:
        return BoundCheckReport("identical-equations", True)
    breport = bounds(E, Ep)
    if breport.status != STATUS_OK:
        return BoundCheckReport("no-nonzero-determinant", True, bound_report=breport)
    catalog = enumerate_solutions(EqSystem((E, Ep)), cfg, workers=workers)
    erasing = sum(1 for cls in catalog.classes if cls.is_erasing_class())
    if erasing >= 2:
        return BoundCheckReport(
            "commutation-like", True, len(catalog.classes), erasing, breport
        )
    m = len(catalog.classes)
    limit = min(breport.sum_bound, breport.best)
    ok = m <= limit
    counterexample = None
    if not ok:
        counterexample = {
            "equations": [str(E), str(Ep)],
            "limit": limit,
            "classes": [
                {
                    "normal": list(cls.normal.entries),
                    "example": [str(im) for im in cls.members[0].images],
                }
                for cls in catalog.classes
            ],
        }
    return BoundCheckReport(STATUS_OK, ok, m, erasing, breport, counterexample)


# ---------------------------------------------------------------------------
# Seeded fuzz generators and the encoding cross-check.


def random_word(rng: random.Random, n: int, max_len: int, min_len: int = 0) -> Word:
    return Word(tuple(rng.randrange(n) for _ in range(rng.randint(min_len, max_len))))


def random_equation(rng: random.Random, n: int, max_size: int) -> Equation:
    lu = rng.randint(0, max_size)
    lv = rng.randint(0, max_size - lu)
    return Equation(random_word(rng, n, lu, lu), random_word(rng, n, lv, lv), n)


def random_morphism(
    rng: random.Random,
    n: int,
    k: int,
    max_image_len: int,
    allow_empty: bool = True,
) -> Morphism:
    lo = 0 if allow_empty else 1
    return Morphism(
        tuple(random_word(rng, k, max_image_len, lo) for _ in range(n)),
        k,
    )


def _preimages(h: Morphism, target: Word, max_len: int, cap: int) -> list[Word]:
    """Words over the domain that ``h`` maps onto ``target`` (bounded DFS)."""
    out: list[Word] = []
    target_syms = target.symbols

    def extend(pos: int, acc: list[int]) -> None:
        if len(out) >= cap:
            return
        if pos == len(target_syms):
            out.append(Word(tuple(acc)))
            return
        if len(acc) >= max_len:
            return
        for j in range(h.domain_size):
            im = h.images[j].symbols
            if im and target_syms[pos : pos + len(im)] == im:
                acc.append(j)
                extend(pos + len(im), acc)
                acc.pop()

    extend(0, [])
    return out


def random_equation_solved_by(
    rng: random.Random, h: Morphism, max_side: int
) -> Equation | None:
    """A random equation that ``h`` solves, or None when the drawn left
    side admits no alternative spelling within the length budget."""
    n = h.domain_size
    u = random_word(rng, n, max_side, 1)
    target = h.apply(u)
    vs = _preimages(h, target, max_side, cap=64)
    # unknowns with empty images may be sprinkled anywhere
    empties = [j for j in range(n) if not h.images[j]]
    if empties and vs:
        padded = []
        for v in vs[:8]:
            syms = list(v.symbols)
            for _ in range(rng.randint(0, 2)):
                syms.insert(rng.randint(0, len(syms)), rng.choice(empties))
            padded.append(Word(tuple(syms)))
        vs = vs + padded
    if not vs:
        return None
    return Equation(u, rng.choice(vs), n)


def random_solution_instance(
    rng: random.Random,
    n: int,
    k: int,
    max_image_len: int,
    max_side: int,
) -> tuple[Equation, Morphism]:
    """An (equation, morphism) pair where the morphism is a solution."""
    while True:
        h = random_morphism(rng, n, k, max_image_len)
        E = random_equation_solved_by(rng, h, max_side)
        if E is not None:
            return E, h


@dataclass(frozen=True)
class EncodingFuzzReport:
    """Agreement statistics between the word-level and polynomial-level
    solution tests."""

    cases: int
    positives: int
    discrepancies: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def verify_encoding(
    cases: int,
    seed: int = 0,
    *,
    max_unknowns: int = 4,
    max_eq_size: int = 10,
    alphabet_size: int = 3,
    max_image_len: int = 6,
) -> EncodingFuzzReport:
    """Fuzz the polynomial solution test against the direct word test.

    Half of the cases are random (equation, morphism) pairs; the other
    half are constructed so the morphism solves the equation, keeping
    both truth values well represented.
    """
    rng = random.Random(seed)
    positives = 0
    discrepancies = []
    for i in range(cases):
        n = rng.randint(1, max_unknowns)
        k = rng.randint(1, alphabet_size)
        if i % 2 == 0:
            E = random_equation(rng, n, max_eq_size)
            h = random_morphism(rng, n, k, max_image_len)
        else:
            E, h = random_solution_instance(rng, n, k, max_image_len, max_eq_size // 2)
        word_level = is_solution(h, E)
        poly_level = check_solution_poly(E, h)
        if word_level:
            positives += 1
        if word_level != poly_level:
            discrepancies.append(
                {
                    "equation": str(E),
                    "morphism": str(h),
                    "word_level": word_level,
                    "poly_level": poly_level,
                }
            )
    return EncodingFuzzReport(cases, positives, tuple(discrepancies))
