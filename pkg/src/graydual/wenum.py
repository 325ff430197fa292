"""Exact weight-enumerator polynomials and their transforms.

All coefficients are unbounded Python ints; nothing here is floating
point.  Three transforms are provided: the binary MacWilliams transform
W(X+Y, X-Y)/divisor, the substitution that turns a symmetrized enumerator
of a dual code over Z_2^k into the Hamming enumerator of the pointwise
binary image, and the substitution that turns a symmetrized enumerator
into the Hamming enumerator of the product-map binary image.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .linear import LinearZCode, ZMatrix
from .gray import BinaryCode

CASE_CONTAINS_ZERO = "contains_zero"
CASE_ODD_WEIGHT = "odd_weight"
CASE_EVEN_NO_ZERO = "even_no_zero"


@dataclass(frozen=True)
class HammingWE:
    """Homogeneous two-variable enumerator; coeffs[w] counts words of weight w."""

    length: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.length + 1:
            raise ValueError(
                f"need {self.length + 1} coefficients, got {len(self.coeffs)}"
            )

    def mass(self) -> int:
        return sum(self.coeffs)


@dataclass
class SymmetrizedWE:
    """Three-variable enumerator over symbol categories zero / odd / even-nonzero.

    coeffs maps (n_zero, n_odd, n_even_nonzero) with the three entries
    summing to the code length.
    """

    length: int
    coeffs: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for key, c in self.coeffs.items():
            if sum(key) != self.length:
                raise ValueError(f"category counts {key} do not sum to {self.length}")
            if c < 0:
                raise ValueError("negative multiplicity")

    def mass(self) -> int:
        return sum(self.coeffs.values())


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_pow(a: list[int], e: int) -> list[int]:
    out = [1]
    base = list(a)
    while e:
        if e & 1:
            out = _poly_mul(out, base)
        e >>= 1
        if e:
            base = _poly_mul(base, base)
    return out


def hamming_we(code: BinaryCode) -> HammingWE:
    """Exact weight histogram of a binary code."""
    coeffs = [0] * (code.length + 1)
    for w in code.words:
        coeffs[w.bit_count()] += 1
    return HammingWE(code.length, tuple(coeffs))


def _categorize(symbols) -> tuple[int, int, int]:
    n0 = n1 = 0
    for v in symbols:
        if v == 0:
            n0 += 1
        elif v % 2:
            n1 += 1
    return n0, n1, len(symbols) - n0 - n1


def symmetrized_we(code: LinearZCode) -> SymmetrizedWE:
    """Symbol-category histogram of a ring code, by enumeration."""
    coeffs: dict[tuple[int, int, int], int] = {}
    for w in code.words():
        key = _categorize(w)
        coeffs[key] = coeffs.get(key, 0) + 1
    return SymmetrizedWE(code.length, coeffs)


def symmetrized_we_from_check(check: ZMatrix) -> SymmetrizedWE:
    """Symbol-category histogram of a kernel code without enumerating it.

    Dynamic program over coordinates: states are (partial syndrome,
    category counts so far) with exact multiplicities; only states whose
    syndrome lies in the column-generated subgroup ever appear, so the
    state count stays near 2r * (n+1)^2 even when the kernel itself is far
    beyond enumeration range.
    """
    two_m = check.modulus.two_m
    s = check.n_rows
    n = check.n
    cols = check.columns()
    zero = (0,) * s
    states: dict[tuple, int] = {(zero, 0, 0, 0): 1}
    for j in range(n):
        contrib = [tuple((v * cols[j][i]) % two_m for i in range(s)) for v in range(two_m)]
        new: dict[tuple, int] = {}
        for (syn, n0, n1, n2), cnt in states.items():
            for v in range(two_m):
                add = contrib[v]
                syn2 = tuple((syn[i] + add[i]) % two_m for i in range(s))
                if v == 0:
                    key = (syn2, n0 + 1, n1, n2)
                elif v % 2:
                    key = (syn2, n0, n1 + 1, n2)
                else:
                    key = (syn2, n0, n1, n2 + 1)
                new[key] = new.get(key, 0) + cnt
        states = new
    coeffs: dict[tuple[int, int, int], int] = {}
    for (syn, n0, n1, n2), cnt in states.items():
        if syn == zero:
            key = (n0, n1, n2)
            coeffs[key] = coeffs.get(key, 0) + cnt
    return SymmetrizedWE(n, coeffs)


def macwilliams_binary(we: HammingWE, divisor: int) -> HammingWE:
    """Coefficientwise-exact evaluation of W(X+Y, X-Y) / divisor.

    Raises when the divisor does not divide every output coefficient,
    which signals a non-dual pair (or a bug upstream).
    """
    if divisor <= 0:
        raise ValueError("divisor must be positive")
    L = we.length
    out = [0] * (L + 1)
    for w, a in enumerate(we.coeffs):
        if not a:
            continue
        term = _poly_mul(
            [comb(L - w, i) for i in range(L - w + 1)],
            [comb(w, i) * (-1) ** i for i in range(w + 1)],
        )
        for j, t in enumerate(term):
            out[j] += a * t
    bad = [j for j, v in enumerate(out) if v % divisor]
    if bad:
        raise ValueError(
            f"divisor {divisor} does not divide transform coefficients at {bad}"
        )
    return HammingWE(L, tuple(v // divisor for v in out))


def ext_perfect_transform(m: int, case: str) -> HammingWE:
    """MacWilliams transform of an extended 1-perfect code of length m.

    The three cases, by which class the code is: containing the zero word
    gives X^m + Y^m + (2m-2)(XY)^(m/2); odd-weight classes give X^m - Y^m;
    even-weight classes without the zero word give X^m + Y^m - 2(XY)^(m/2).
    """
    if m < 2 or m & (m - 1):
        raise ValueError(f"length must be a power of two >= 2, got {m}")
    coeffs = [0] * (m + 1)
    coeffs[0] = 1
    if case == CASE_CONTAINS_ZERO:
        coeffs[m] = 1
        coeffs[m // 2] += 2 * m - 2
    elif case == CASE_ODD_WEIGHT:
        coeffs[m] = -1
    elif case == CASE_EVEN_NO_ZERO:
        coeffs[m] = 1
        coeffs[m // 2] -= 2
    else:
        raise ValueError(f"unknown case {case!r}")
    return HammingWE(m, tuple(coeffs))


def _substitute(
    sw: SymmetrizedWE, p0: list[int], p1: list[int], p2: list[int]
) -> list[int]:
    total: list[int] | None = None
    for (n0, n1, n2), cnt in sorted(sw.coeffs.items()):
        term = _poly_mul(_poly_pow(p0, n0), _poly_mul(_poly_pow(p1, n1), _poly_pow(p2, n2)))
        if total is None:
            total = [cnt * v for v in term]
        else:
            total = [x + cnt * y for x, y in zip(total, term)]
    return total if total is not None else []


def carlet_transform(sw: SymmetrizedWE, k: int, card_dual: int) -> HammingWE:
    """Hamming enumerator of the pointwise binary image of C, from SW of its dual.

    Substitutes X^(2^(k-1)) + Y^(2^(k-1)) + (2^k - 2)(XY)^(2^(k-2)) for the
    zero category, X^(2^(k-1)) - Y^(2^(k-1)) for the odd category, and
    X^(2^(k-1)) + Y^(2^(k-1)) - 2(XY)^(2^(k-2)) for the even-nonzero
    category, then divides by |dual| with an exact-divisibility check.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    m = 1 << (k - 1)
    p0 = list(ext_perfect_transform(m, CASE_CONTAINS_ZERO).coeffs)
    p1 = list(ext_perfect_transform(m, CASE_ODD_WEIGHT).coeffs)
    p2 = list(ext_perfect_transform(m, CASE_EVEN_NO_ZERO).coeffs)
    total = _substitute(sw, p0, p1, p2)
    L = m * sw.length
    if len(total) != L + 1:
        raise ValueError("inconsistent substitution degree")
    bad = [j for j, v in enumerate(total) if v % card_dual]
    if bad:
        raise ValueError(f"|dual| = {card_dual} does not divide coefficients at {bad}")
    return HammingWE(L, tuple(v // card_dual for v in total))


def compose_sw(
    sw: SymmetrizedWE, wh0: HammingWE, wh1: HammingWE, wh2: HammingWE
) -> HammingWE:
    """Hamming enumerator of the product-map image: SW(W_H0, W_H1, W_H2).

    The three class enumerators must share one block length m; the result
    has length m * n and total mass |C| * |class|^n.
    """
    m = wh0.length
    if wh1.length != m or wh2.length != m:
        raise ValueError("class enumerators must have equal lengths")
    total = _substitute(sw, list(wh0.coeffs), list(wh1.coeffs), list(wh2.coeffs))
    L = m * sw.length
    if len(total) != L + 1:
        raise ValueError("inconsistent substitution degree")
    if any(v < 0 for v in total):
        raise ValueError("code-derived enumerator went negative")
    return HammingWE(L, tuple(total))
