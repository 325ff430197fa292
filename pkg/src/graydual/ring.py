"""Exact arithmetic, weights, and metrics on Z_2m and on words over it.

Two weight functions live here.  The homogeneous weight (``wt_star``) takes
0 at 0, m at m and m/2 everywhere else; it is the weight that makes the
block Gray map an isometry into binary Hamming space.  The coarse weight
(``wt_diamond``) only distinguishes zero / odd / even-nonzero symbols and
takes values 0, 1, 2; it governs distances of set-valued (partition-based)
binary images.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

#: Default cap on the number of words any enumeration may materialize.
DEFAULT_BUDGET = 1 << 26

#: Largest supported ring size 2m.
MAX_RING_SIZE = 1 << 16

STAR = "star"
DIAMOND = "diamond"
METRICS = (STAR, DIAMOND)


class BudgetExceededError(RuntimeError):
    """An enumeration or materialization would exceed the configured budget."""


def _is_power_of_two(x: int) -> bool:
    return x > 0 and (x & (x - 1)) == 0


@dataclass(frozen=True)
class Modulus:
    """The ring Z_2m, identified by its even size ``two_m`` (at least 4)."""

    two_m: int

    def __post_init__(self) -> None:
        if not isinstance(self.two_m, int) or self.two_m < 4 or self.two_m % 2:
            raise ValueError(f"ring size must be an even integer >= 4, got {self.two_m!r}")
        if self.two_m > MAX_RING_SIZE:
            raise ValueError(f"ring size capped at {MAX_RING_SIZE}, got {self.two_m}")

    @property
    def m(self) -> int:
        return self.two_m // 2

    @property
    def k(self) -> int | None:
        """The exponent k with 2m = 2^k, or None when 2m is not a power of two."""
        return self.two_m.bit_length() - 1 if _is_power_of_two(self.two_m) else None

    @property
    def is_power_of_two(self) -> bool:
        return _is_power_of_two(self.two_m)

    def units(self) -> tuple[int, ...]:
        """All residues invertible mod 2m."""
        return tuple(x for x in range(1, self.two_m) if gcd(x, self.two_m) == 1)

    def reduce(self, x: int) -> int:
        return x % self.two_m

    def __str__(self) -> str:
        return f"Z_{self.two_m}"


@dataclass(frozen=True)
class RingWord:
    """A fixed-length word of residues mod 2m, stored eagerly reduced."""

    modulus: Modulus
    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("ring words must have length >= 1")
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        two_m = self.modulus.two_m
        if any(not (0 <= s < two_m) for s in self.symbols):
            raise ValueError(f"symbols must lie in [0, {two_m}): {self.symbols}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    @classmethod
    def zero(cls, modulus: Modulus, n: int) -> "RingWord":
        return cls(modulus, (0,) * n)

    @classmethod
    def all_ones(cls, modulus: Modulus, n: int) -> "RingWord":
        return cls(modulus, (1,) * n)

    @classmethod
    def unit_vector(cls, modulus: Modulus, n: int, i: int) -> "RingWord":
        """The word with a 1 in position i and zeroes elsewhere."""
        if not 0 <= i < n:
            raise ValueError(f"position {i} out of range for length {n}")
        return cls(modulus, tuple(1 if j == i else 0 for j in range(n)))


def wt_star(x: int, mod: Modulus, *, doubled: bool = False) -> int:
    """Homogeneous weight of a residue: 0 at 0, m at m, m/2 otherwise.

    When m is odd the "otherwise" branch is half-integral; pass
    ``doubled=True`` to get 2*wt_star(x), which is always an integer.
    Every even-m ring (all built-in use cases) returns plain values.
    """
    two_m = mod.two_m
    if not 0 <= x < two_m:
        raise ValueError(f"residue {x} out of range for {mod}")
    m = mod.m
    if x == 0:
        w2 = 0
    elif x == m:
        w2 = 2 * m
    else:
        w2 = m
    if doubled:
        return w2
    if w2 % 2:
        raise ValueError(
            f"wt_star({x}) is half-integral over {mod} (m odd); use doubled=True"
        )
    return w2 // 2


def wt_diamond(x: int, mod: Modulus) -> int:
    """Coarse weight of a residue: 0 at 0, 1 on odd, 2 on even nonzero."""
    if not 0 <= x < mod.two_m:
        raise ValueError(f"residue {x} out of range for {mod}")
    if x == 0:
        return 0
    return 1 if x % 2 else 2


def word_weight(symbols, mod: Modulus, metric: str) -> int:
    """Sum of per-symbol weights of a raw symbol sequence."""
    if metric == STAR:
        return sum(wt_star(x, mod) for x in symbols)
    if metric == DIAMOND:
        return sum(wt_diamond(x, mod) for x in symbols)
    raise ValueError(f"unknown metric {metric!r}; expected one of {METRICS}")


def dist(u: RingWord, v: RingWord, metric: str) -> int:
    """Distance between two words: the weight of their difference."""
    if u.modulus != v.modulus:
        raise ValueError(f"modulus mismatch: {u.modulus} vs {v.modulus}")
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    two_m = u.modulus.two_m
    diff = tuple((b - a) % two_m for a, b in zip(u.symbols, v.symbols))
    return word_weight(diff, u.modulus, metric)


def unit_inverse(x: int, mod: Modulus) -> int:
    """Multiplicative inverse of a unit mod 2m."""
    if gcd(x, mod.two_m) != 1:
        raise ValueError(f"{x} is not a unit mod {mod.two_m}")
    return pow(x, -1, mod.two_m)


def additive_order(x: int, mod: Modulus) -> int:
    """Smallest t >= 1 with t*x = 0 mod 2m; equals 2m / gcd(x, 2m)."""
    if not 0 <= x < mod.two_m:
        raise ValueError(f"residue {x} out of range for {mod}")
    return mod.two_m // gcd(x, mod.two_m)
