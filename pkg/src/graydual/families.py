"""Structured check/generator matrices over Z_2^k and the two fixed Z_24 examples.

For a profile I = (i_1, ..., i_k) with sum j*i_j = r, the matrix B_I has
as columns all elements of {1} x (2^(k-1) Z_2^k)^(i_1) x ... x (Z_2^k)^(i_k)
in lexicographic order (rows read top-to-bottom as most significant first),
giving n = 2^r columns.  Read as a check matrix it defines a code whose
odd-sum neighbors are uniquely covered; read as a generator matrix it
spans an (n, n 2^k, n 2^(k-2)) code in the homogeneous metric.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ring import DEFAULT_BUDGET, Modulus
from .linear import LinearZCode, ZMatrix, syndrome_image_size

#: Above this many columns the cardinality self-check is skipped.
_ASSERT_LIMIT = 1 << 12


@dataclass(frozen=True)
class TypeProfile:
    """The tuple (i_1, ..., i_k) of row counts per additive order 2^j."""

    k: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if not isinstance(self.counts, tuple):
            object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) != self.k:
            raise ValueError(
                f"profile needs exactly {self.k} entries, got {len(self.counts)}"
            )
        if any(c < 0 for c in self.counts):
            raise ValueError(f"profile entries must be nonnegative: {self.counts}")

    @property
    def r(self) -> int:
        return sum(j * c for j, c in enumerate(self.counts, start=1))

    @property
    def n(self) -> int:
        return 1 << self.r

    def modulus(self) -> Modulus:
        return Modulus(1 << self.k)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "TypeProfile":
        counts = tuple(int(t) for t in text.replace(" ", "").split(","))
        return cls(len(counts) if k is None else k, counts)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.counts)


def build_bi(profile: TypeProfile) -> ZMatrix:
    """The matrix with lexicographically ordered product-set columns."""
    if profile.r > 16:
        raise ValueError(f"profile weight {profile.r} too large (max 16)")
    k = profile.k
    factors: list[list[int]] = [[1]]
    for j, count in enumerate(profile.counts, start=1):
        step = 1 << (k - j)
        values = list(range(0, 1 << k, step))
        factors.extend([values] * count)
    cols = sorted(itertools.product(*factors))
    rows = tuple(tuple(col[i] for col in cols) for i in range(len(factors)))
    return ZMatrix(profile.modulus(), rows)


def code_hi(profile: TypeProfile, budget: int = DEFAULT_BUDGET) -> LinearZCode:
    """The kernel code of B_I, carried by its check matrix.

    Cardinality 2^(kn) / (n 2^k) is certified through the syndrome image
    (which must have exactly n 2^k elements) whenever n is small enough for
    the closure to be cheap.
    """
    bi = build_bi(profile)
    mod = profile.modulus()
    n = profile.n
    if n <= _ASSERT_LIMIT:
        image = syndrome_image_size(bi, budget)
        expected = n << profile.k
        if image != expected:
            raise AssertionError(
                f"syndrome image has {image} elements, expected {expected}"
            )
    return LinearZCode(mod, n, check=bi, budget=budget)


def code_di(profile: TypeProfile, budget: int = DEFAULT_BUDGET) -> LinearZCode:
    """The row span of B_I; an (n, n 2^k, n 2^(k-2)) code in the star metric."""
    bi = build_bi(profile)
    code = LinearZCode(profile.modulus(), profile.n, generators=bi, budget=budget)
    expected = profile.n << profile.k
    if expected <= _ASSERT_LIMIT and profile.n <= _ASSERT_LIMIT:
        if len(code.words()) != expected:
            raise AssertionError(
                f"span has {len(code.words())} words, expected {expected}"
            )
    return code


def z24_examples() -> tuple[ZMatrix, ZMatrix]:
    """The two fixed check matrices over Z_24 (3 x 8 and 2 x 6)."""
    z24 = Modulus(24)
    bprime = ZMatrix(
        z24,
        (
            (1, 1, 1, 1, 1, 1, 1, 1),
            (0, 0, 0, 0, 12, 12, 12, 12),
            (0, 6, 12, 18, 0, 6, 12, 18),
        ),
    )
    bdprime = ZMatrix(
        z24,
        (
            (1, 1, 1, 1, 1, 1),
            (0, 4, 8, 12, 16, 20),
        ),
    )
    return bprime, bdprime
