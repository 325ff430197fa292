"""Linear codes over Z_2m: spans, kernels, duality, distances, canonical forms.

Codes are additive subgroups of Z_2m^n carried by a generator matrix, a
check matrix, or both.  All enumeration is exact and budget-guarded; the
structural identities used here are the usual ones for the perfect pairing
on Z_2m^n: the annihilator of a row span is the kernel of the matrix, and
annihilators are involutive, so a check matrix for a code is a generator
matrix for its dual and vice versa.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .ring import (
    DEFAULT_BUDGET,
    STAR,
    BudgetExceededError,
    Modulus,
    RingWord,
    unit_inverse,
    word_weight,
    wt_diamond,
    wt_star,
)

#: Sentinel minimum distance of the zero code (no nonzero codeword).
INFINITE_DISTANCE = float("inf")


@dataclass(frozen=True)
class ZMatrix:
    """A rectangular matrix over Z_2m with eagerly reduced entries."""

    modulus: Modulus
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.rows, tuple):
            object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if not self.rows:
            raise ValueError("matrix needs at least one row")
        n = len(self.rows[0])
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ValueError("matrix rows must be nonempty and of equal length")
        two_m = self.modulus.two_m
        if any(not (0 <= x < two_m) for r in self.rows for x in r):
            object.__setattr__(
                self, "rows", tuple(tuple(x % two_m for x in r) for r in self.rows)
            )

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[j] for r in self.rows) for j in range(self.n)]

    def syndrome(self, symbols) -> tuple[int, ...]:
        """self * symbols^T over Z_2m."""
        two_m = self.modulus.two_m
        return tuple(sum(a * b for a, b in zip(r, symbols)) % two_m for r in self.rows)


def _word_order(symbols, two_m: int) -> int:
    g = two_m
    for x in symbols:
        g = gcd(g, x)
    return two_m // g


def span_words(generators: ZMatrix, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All distinct words in the additive span of the generator rows."""
    two_m = generators.modulus.two_m
    n = generators.n
    words: set[tuple[int, ...]] = {(0,) * n}
    for g in generators.rows:
        order = _word_order(g, two_m)
        if order == 1:
            continue
        if len(words) * order > budget:
            raise BudgetExceededError(
                f"span may reach {len(words) * order} words (budget {budget})"
            )
        words = {
            tuple((w[i] + t * g[i]) % two_m for i in range(n))
            for w in words
            for t in range(order)
        }
    return sorted(words)


def _independent_generators(words, modulus: Modulus) -> list[tuple[int, ...]]:
    """Greedy reduction of a subgroup's word list to a small generating set."""
    two_m = modulus.two_m
    gens: list[tuple[int, ...]] = []
    seen = None
    for w in words:
        if not any(w):
            continue
        if seen is None:
            n = len(w)
            seen = {(0,) * n}
        if w in seen:
            continue
        gens.append(w)
        order = _word_order(w, two_m)
        seen = {
            tuple((s[i] + t * w[i]) % two_m for i in range(len(w)))
            for s in seen
            for t in range(order)
        }
    return gens


def _kernel_scan(check: ZMatrix, budget: int) -> list[tuple[int, ...]]:
    two_m = check.modulus.two_m
    n = check.n
    if two_m**n > budget:
        raise BudgetExceededError(
            f"kernel scan needs {two_m}^{n} words (budget {budget})"
        )
    s = check.n_rows
    cols = check.columns()
    # per-coordinate syndrome contributions, indexed by symbol value
    contrib = [
        [tuple((v * c[i]) % two_m for i in range(s)) for v in range(two_m)]
        for c in cols
    ]
    out: list[tuple[int, ...]] = []
    word = [0] * n

    def rec(j: int, syn: tuple[int, ...]) -> None:
        if j == n:
            if not any(syn):
                out.append(tuple(word))
            return
        for v in range(two_m):
            add = contrib[j][v]
            word[j] = v
            rec(j + 1, tuple((syn[i] + add[i]) % two_m for i in range(s)))

    rec(0, (0,) * s)
    return out


def syndrome_image_size(check: ZMatrix, budget: int = DEFAULT_BUDGET) -> int:
    """Size of the subgroup of Z_2m^s generated by the columns of ``check``.

    The kernel of the matrix then has exactly (2m)^n / result elements,
    which certifies code cardinality without enumerating the kernel.
    """
    two_m = check.modulus.two_m
    s = check.n_rows
    group: set[tuple[int, ...]] = {(0,) * s}
    for col in check.columns():
        order = _word_order(col, two_m)
        if order == 1:
            continue
        if len(group) * order > budget:
            raise BudgetExceededError("syndrome image exceeds budget")
        group = {
            tuple((g[i] + t * col[i]) % two_m for i in range(s))
            for g in group
            for t in range(order)
        }
    return len(group)


class LinearZCode:
    """A linear code over Z_2m, given by generator rows and/or check rows."""

    def __init__(
        self,
        modulus: Modulus,
        length: int,
        *,
        generators: ZMatrix | None = None,
        check: ZMatrix | None = None,
        budget: int = DEFAULT_BUDGET,
    ) -> None:
        if generators is None and check is None:
            raise ValueError("a code needs generator rows or check rows")
        for mat, name in ((generators, "generator"), (check, "check")):
            if mat is not None:
                if mat.modulus != modulus:
                    raise ValueError(f"{name} matrix modulus mismatch")
                if mat.n != length:
                    raise ValueError(f"{name} matrix width {mat.n} != length {length}")
        self.modulus = modulus
        self.length = length
        self.generators = generators
        self.check = check
        self.budget = budget
        self._words: tuple[tuple[int, ...], ...] | None = None
        self._word_set: frozenset | None = None

    @classmethod
    def from_rows(cls, modulus: Modulus, rows, **kw) -> "LinearZCode":
        mat = ZMatrix(modulus, tuple(tuple(r) for r in rows))
        return cls(modulus, mat.n, generators=mat, **kw)

    def words(self) -> tuple[tuple[int, ...], ...]:
        """The full, sorted codeword list (enumerated once and cached)."""
        if self._words is None:
            if self.generators is not None:
                self._words = tuple(span_words(self.generators, self.budget))
            else:
                self._words = tuple(_kernel_scan(self.check, self.budget))
        return self._words

    def word_set(self) -> frozenset:
        if self._word_set is None:
            self._word_set = frozenset(self.words())
        return self._word_set

    def cardinality(self) -> int:
        if self._words is not None:
            return len(self._words)
        if self.check is not None:
            img = syndrome_image_size(self.check, self.budget)
            return self.modulus.two_m**self.length // img
        return len(self.words())

    def contains(self, symbols) -> bool:
        symbols = tuple(symbols)
        if self.check is not None:
            return not any(self.check.syndrome(symbols))
        return symbols in self.word_set()

    def __repr__(self) -> str:
        size = len(self._words) if self._words is not None else "?"
        return f"LinearZCode({self.modulus}, n={self.length}, |C|={size})"


def kernel(check: ZMatrix, budget: int = DEFAULT_BUDGET) -> LinearZCode:
    """The code {h : check * h^T = 0}, with a reduced generator set attached."""
    sols = _kernel_scan(check, budget)
    gens = _independent_generators(sols, check.modulus)
    if not gens:
        gens = [(0,) * check.n]
    code = LinearZCode(
        check.modulus,
        check.n,
        generators=ZMatrix(check.modulus, tuple(gens)),
        check=check,
        budget=budget,
    )
    code._words = tuple(sorted(sols))
    return code


def dual(code: LinearZCode, budget: int | None = None) -> LinearZCode:
    """The dual code under the standard inner product mod 2m.

    When ``code`` carries check rows they become the dual's generators
    directly; otherwise the dual is found by exhaustive kernel scan of the
    generator matrix.  Either way |code| * |dual| = (2m)^n.
    """
    budget = code.budget if budget is None else budget
    if code.check is not None:
        return LinearZCode(
            code.modulus,
            code.length,
            generators=code.check,
            check=code.generators,
            budget=budget,
        )
    return kernel(code.generators, budget)


def _bounded_weight_search(
    check: ZMatrix, metric: str, radius: int
) -> tuple[int | float, tuple[int, ...] | None]:
    """Minimum weight of a nonzero kernel word among words of weight <= radius.

    Returns (weight, word) for the best word found, or (radius + 1, None)
    when no nonzero kernel word of weight <= radius exists, certifying
    min distance >= radius + 1.
    """
    mod = check.modulus
    two_m = mod.two_m
    n = check.n
    s = check.n_rows
    cols = check.columns()
    wt = (lambda v: wt_star(v, mod)) if metric == STAR else (lambda v: wt_diamond(v, mod))
    nonzero = sorted(range(1, two_m), key=wt)
    best: list = [radius + 1, None]
    word = [0] * n

    def rec(j0: int, syn: tuple[int, ...], used: int) -> None:
        if not any(syn) and used > 0:
            w = word_weight(word, mod, metric)
            if w < best[0]:
                best[0] = w
                best[1] = tuple(word)
        for j in range(j0, n):
            for v in nonzero:
                wv = wt(v)
                if used + wv > radius:
                    continue
                word[j] = v
                rec(
                    j + 1,
                    tuple((syn[i] + v * cols[j][i]) % two_m for i in range(s)),
                    used + wv,
                )
            word[j] = 0

    rec(0, (0,) * s, 0)
    return best[0], best[1]


def min_distance(
    code: LinearZCode, metric: str, *, bounded_radius: int | None = None
) -> int | float:
    """Minimum weight of a nonzero codeword (equals minimum distance).

    With ``bounded_radius=r`` set, only words of weight <= r are searched
    against the code's check rows and min(true distance, r + 1) is
    returned; this certifies "distance >= r + 1" without enumeration.
    The zero code yields the INFINITE_DISTANCE sentinel.
    """
    if bounded_radius is not None:
        if code.check is None:
            raise ValueError("bounded search needs check rows")
        found, _ = _bounded_weight_search(code.check, metric, bounded_radius)
        return found
    best: int | float = INFINITE_DISTANCE
    for w in code.words():
        if any(w):
            d = word_weight(w, code.modulus, metric)
            if d < best:
                best = d
    return best


def apply_permutation(symbols, perm) -> tuple[int, ...]:
    """Reorder a word: result[j] = symbols[perm[j]]."""
    return tuple(symbols[p] for p in perm)


def _check_perm(perm, n: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
    return perm


def apply_monomial(z, perm, code: LinearZCode) -> LinearZCode:
    """The code {z o pi(c) : c in code} for a unit scale z and permutation.

    Cardinality and both minimum distances are invariant under this map.
    """
    mod = code.modulus
    two_m = mod.two_m
    n = code.length
    zs = tuple(z.symbols if isinstance(z, RingWord) else z)
    if len(zs) != n:
        raise ValueError(f"scale word length {len(zs)} != code length {n}")
    if any(gcd(v, two_m) != 1 for v in zs):
        raise ValueError(f"scale word must consist of units mod {two_m}: {zs}")
    perm = _check_perm(perm, n)

    generators = None
    if code.generators is not None:
        rows = tuple(
            tuple((zs[j] * r[perm[j]]) % two_m for j in range(n))
            for r in code.generators.rows
        )
        generators = ZMatrix(mod, rows)
    check = None
    if code.check is not None:
        # y is in the image iff pi^-1(z^-1 o y) passes the old check, which
        # rearranges to new column j = z_j^-1 * old column perm[j].
        zinv = [unit_inverse(v, mod) for v in zs]
        old_cols = code.check.columns()
        new_rows = tuple(
            tuple((zinv[j] * old_cols[perm[j]][i]) % two_m for j in range(n))
            for i in range(code.check.n_rows)
        )
        check = ZMatrix(mod, new_rows)
    return LinearZCode(mod, n, generators=generators, check=check, budget=code.budget)


def _val2(x: int, k: int) -> int:
    if x == 0:
        return k
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


def row_canonical(code: LinearZCode) -> tuple[ZMatrix | None, tuple[int, ...]]:
    """Echelon basis of a code over Z_2^k, rows sorted by decreasing order.

    Pivots are chosen by minimum 2-adic valuation (ties: leftmost column),
    scaled by a unit inverse to an exact power of two, and the pivot column
    is cleared below and reduced above.  Valuations never drop below the
    current pivot's during elimination, so rows come out in increasing
    valuation order, i.e. decreasing additive order.  The returned order
    multiset is basis-independent and its product equals |code|.

    The zero code yields (None, ()).
    """
    mod = code.modulus
    k = mod.k
    if k is None:
        raise ValueError("row canonical form needs a power-of-two modulus")
    two_m = mod.two_m
    if code.generators is not None:
        source = code.generators.rows
    else:
        source = code.words()
    n = code.length
    work = [list(r) for r in source if any(r)]
    out: list[list[int]] = []
    pivots: list[tuple[int, int]] = []  # (column, valuation) per emitted row
    while work:
        best = None
        for ri, r in enumerate(work):
            for ci, x in enumerate(r):
                if x:
                    key = (_val2(x, k), ci, ri)
                    if best is None or key < best:
                        best = key
        v, ci, ri = best
        piv = work.pop(ri)
        inv = pow(piv[ci] >> v, -1, two_m)
        piv = [(x * inv) % two_m for x in piv]
        for r in itertools.chain(work, out):
            if r[ci]:
                q = r[ci] >> v
                if q:
                    for i in range(n):
                        r[i] = (r[i] - q * piv[i]) % two_m
        out.append(piv)
        pivots.append((ci, v))
        work = [r for r in work if any(r)]
    if not out:
        return None, ()
    orders = tuple(two_m >> v for _, v in pivots)
    return ZMatrix(mod, tuple(tuple(r) for r in out)), orders
