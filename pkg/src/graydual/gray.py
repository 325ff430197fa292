"""Block Gray maps: ordered Hadamard codes, perfect partitions, and images.

The point-valued map sends a residue x to the x-th word of an ordered
Hadamard code of length m, concatenating blocks coordinatewise; it is an
isometry from the homogeneous metric into binary Hamming space.  The
set-valued map sends x to the x-th class of a partition of Z_2^m into
extended 1-perfect codes and extends by Cartesian product; distances of
its images are governed by the coarse (diamond) metric, capped at 4.

Binary words are packed into ints with bit i holding coordinate i, so the
leftmost character of the printed form is coordinate 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ring import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    Modulus,
    RingWord,
)
from .linear import LinearZCode, ZMatrix


def bits_to_string(word: int, length: int) -> str:
    return "".join("1" if (word >> i) & 1 else "0" for i in range(length))


def string_to_bits(s: str) -> int:
    if s.strip("01"):
        raise ValueError(f"not a bit string: {s!r}")
    w = 0
    for i, ch in enumerate(s):
        if ch == "1":
            w |= 1 << i
    return w


@dataclass(frozen=True)
class BinaryCode:
    """An explicit set of fixed-length binary words (set semantics)."""

    length: int
    words: frozenset[int]

    def __post_init__(self) -> None:
        if not isinstance(self.words, frozenset):
            object.__setattr__(self, "words", frozenset(self.words))
        top = 1 << self.length
        if any(not (0 <= w < top) for w in self.words):
            raise ValueError(f"word out of range for length {self.length}")

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: int) -> bool:
        return word in self.words

    def bit_strings(self) -> list[str]:
        return sorted(bits_to_string(w, self.length) for w in self.words)

    @classmethod
    def from_strings(cls, strings) -> "BinaryCode":
        strings = list(strings)
        if not strings:
            raise ValueError("empty binary code")
        length = len(strings[0])
        if any(len(s) != length for s in strings):
            raise ValueError("all words must have the same length")
        return cls(length, frozenset(string_to_bits(s) for s in strings))

    def min_distance(self) -> int | float:
        words = sorted(self.words)
        best: int | float = float("inf")
        for i, a in enumerate(words):
            for b in words[i + 1 :]:
                d = (a ^ b).bit_count()
                if d < best:
                    best = d
        return best


class OrderedHadamard:
    """A Hadamard (m, 2m, m/2) code listed as a_0..a_{2m-1}.

    The listing is constrained so that a_0 is all-zero and a_{i+m} is the
    complement of a_i; together these force every non-complementary pair
    to sit at distance exactly m/2, which is what makes the induced block
    map an isometry regardless of the ordering of a_1..a_{m-1}.
    """

    def __init__(self, m: int, words) -> None:
        words = tuple(words)
        if m < 2 or m % 2:
            raise ValueError(f"Hadamard length must be even and >= 2, got {m}")
        if len(words) != 2 * m:
            raise ValueError(f"need exactly {2 * m} words, got {len(words)}")
        mask = (1 << m) - 1
        if words[0] != 0:
            raise ValueError("a_0 must be the all-zero word")
        if len(set(words)) != 2 * m:
            raise ValueError("listed words must be distinct")
        for i in range(m):
            if words[i] ^ words[i + m] != mask:
                raise ValueError(f"a_{i} and a_{i + m} must be complements")
        for i in range(2 * m):
            for j in range(i + 1, 2 * m):
                d = (words[i] ^ words[j]).bit_count()
                if d not in (m // 2, m):
                    raise ValueError(
                        f"pairwise distance {d} outside {{m/2, m}} at ({i},{j})"
                    )
        self.m = m
        self.words = words

    @property
    def two_m(self) -> int:
        return 2 * self.m

    def modulus(self) -> Modulus:
        return Modulus(self.two_m)


def sylvester_hadamard(k: int) -> OrderedHadamard:
    """The linear Hadamard code of length 2^(k-1) in inner-product order.

    Word a_i (i < m) evaluates y -> <bin(i), bin(y)> over y = 0..m-1;
    the upper half holds the complements.  For k=2 this is the classic
    listing 00, 01, 11, 10.
    """
    if not 2 <= k <= 7:
        raise ValueError(f"k must be in [2, 7], got {k}")
    m = 1 << (k - 1)
    words = []
    for i in range(m):
        w = 0
        for y in range(m):
            if (i & y).bit_count() % 2:
                w |= 1 << y
        words.append(w)
    mask = (1 << m) - 1
    words += [w ^ mask for w in words]
    return OrderedHadamard(m, words)


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def paley_hadamard12() -> OrderedHadamard:
    """A fixed (12, 24, 6) Hadamard code from quadratic residues mod 11.

    Rows of the order-12 Paley matrix (first row and column bordered, core
    entry (i, j) the Legendre symbol of j - i with +1 on the diagonal) are
    mapped +1 -> 0, -1 -> 1; the all-plus first row becomes a_0 and the 12
    complements are appended at offset 12.
    """
    p = 11
    size = p + 1
    rows = [[1] * size]
    for i in range(1, size):
        row = [-1]
        for j in range(1, size):
            v = _legendre(j - i, p)
            row.append(v if v else 1)
        rows.append(row)
    words = []
    for row in rows:
        w = 0
        for y, v in enumerate(row):
            if v == -1:
                w |= 1 << y
        words.append(w)
    mask = (1 << size) - 1
    words += [w ^ mask for w in words]
    return OrderedHadamard(size, words)


def phi(x: RingWord, hadamard: OrderedHadamard) -> int:
    """Concatenate the indexed Hadamard words; an mn-bit vector as an int."""
    if x.modulus.two_m != hadamard.two_m:
        raise ValueError(
            f"modulus {x.modulus} does not match Hadamard code over Z_{hadamard.two_m}"
        )
    return _phi_raw(x.symbols, hadamard)


def _phi_raw(symbols, hadamard: OrderedHadamard) -> int:
    m = hadamard.m
    w = 0
    for j, s in enumerate(symbols):
        w |= hadamard.words[s] << (j * m)
    return w


def _std_class_index(word: int) -> int:
    """Partition index: parity bit plus xor of set bit positions."""
    rest = 0
    x = word
    while x:
        rest ^= (x & -x).bit_length() - 1
        x &= x - 1
    return 2 * rest + (word.bit_count() & 1)


class PerfectPartition:
    """A partition of Z_2^m into 2m extended 1-perfect (m, 2^m/2m, 4) codes.

    Classes are the cosets of the extended Hamming code of length m; the
    class of a word is read off its syndrome in O(m).  A relabeling of the
    standard indexing may be supplied as ``leaders`` (class index -> any
    word of the class) as long as index 0 keeps the all-zero word and the
    weight parity of class j stays j mod 2.

    Explicit class materialization is only available for m <= 16; larger
    partitions still support O(1) class lookup.
    """

    _MAX_EXPLICIT_M = 16

    def __init__(self, m: int, leaders: dict[int, int] | None = None) -> None:
        if m < 2 or m & (m - 1):
            raise ValueError(f"partition length must be a power of two >= 2, got {m}")
        self.m = m
        self.two_m = 2 * m
        self.class_size = (1 << m) // (2 * m)
        relabel = list(range(2 * m))
        if leaders is not None:
            if sorted(leaders) != list(range(2 * m)):
                raise ValueError("leaders must cover class indices 0..2m-1")
            relabel = [-1] * (2 * m)
            for j, w in leaders.items():
                std = _std_class_index(w)
                if relabel[std] != -1:
                    raise ValueError("two leaders fall in the same class")
                if (w.bit_count() & 1) != j % 2:
                    raise ValueError(f"leader of class {j} has wrong weight parity")
                relabel[std] = j
            if relabel[0] != 0:
                raise ValueError("class 0 must contain the all-zero word")
        self._relabel = tuple(relabel)
        self._index_of = {j: std for std, j in enumerate(relabel)}
        self._h0: tuple[int, ...] | None = None

    def class_of(self, word: int) -> int:
        if not 0 <= word < (1 << self.m):
            raise ValueError(f"word out of range for length {self.m}")
        return self._relabel[_std_class_index(word)]

    def _h0_words(self) -> tuple[int, ...]:
        if self._h0 is None:
            if self.m > self._MAX_EXPLICIT_M:
                raise BudgetExceededError(
                    f"cannot materialize classes of length {self.m}"
                )
            self._h0 = tuple(
                w for w in range(1 << self.m) if _std_class_index(w) == 0
            )
        return self._h0

    def _std_leader(self, std: int) -> int:
        if std == 0:
            return 0
        if std % 2:
            return 1 << (std >> 1)
        return 1 | (1 << (std >> 1))

    def class_words(self, j: int) -> tuple[int, ...]:
        leader = self._std_leader(self._index_of[j])
        return tuple(leader ^ w for w in self._h0_words())

    def class_code(self, j: int) -> BinaryCode:
        return BinaryCode(self.m, frozenset(self.class_words(j)))

    @property
    def classes(self) -> tuple[BinaryCode, ...]:
        return tuple(self.class_code(j) for j in range(self.two_m))

    def modulus(self) -> Modulus:
        return Modulus(self.two_m)


def standard_partition(k: int) -> PerfectPartition:
    """The default partition for Z_2^k, indexed by the syndrome scheme."""
    if not 2 <= k <= 6:
        raise ValueError(f"k must be in [2, 6], got {k}")
    return PerfectPartition(1 << (k - 1))


def phi_cap(
    x: RingWord, partition: PerfectPartition, budget: int = DEFAULT_BUDGET
) -> BinaryCode:
    """The Cartesian-product image of a single word: one class per block."""
    if x.modulus.two_m != partition.two_m:
        raise ValueError(
            f"modulus {x.modulus} does not match partition over Z_{partition.two_m}"
        )
    n = len(x)
    if partition.class_size**n > budget:
        raise BudgetExceededError(
            f"product image has {partition.class_size}^{n} words (budget {budget})"
        )
    m = partition.m
    block_lists = [partition.class_words(s) for s in x.symbols]
    out = set()
    for blocks in itertools.product(*block_lists):
        w = 0
        for j, b in enumerate(blocks):
            w |= b << (j * m)
        out.add(w)
    return BinaryCode(m * n, frozenset(out))


def image_phi(
    code: LinearZCode, hadamard: OrderedHadamard, budget: int = DEFAULT_BUDGET
) -> BinaryCode:
    """The pointwise image of a code; cardinality is preserved."""
    if code.modulus.two_m != hadamard.two_m:
        raise ValueError("modulus mismatch between code and Hadamard code")
    if code.cardinality() > budget:
        raise BudgetExceededError("image exceeds budget")
    words = frozenset(_phi_raw(w, hadamard) for w in code.words())
    assert len(words) == len(code.words()), "block map must be injective"
    return BinaryCode(hadamard.m * code.length, words)


def iter_image_phi_cap(code: LinearZCode, partition: PerfectPartition):
    """Yield the product-image words lazily, one at a time.

    The per-coordinate classes of distinct codewords are disjoint somewhere,
    so no deduplication is needed: the stream has exactly
    |code| * (2^m / 2m)^n words.  Use this (or the membership test) when the
    image is too large to materialize.
    """
    if code.modulus.two_m != partition.two_m:
        raise ValueError("modulus mismatch between code and partition")
    m = partition.m
    for x in code.words():
        block_lists = [partition.class_words(s) for s in x]
        for blocks in itertools.product(*block_lists):
            w = 0
            for j, b in enumerate(blocks):
                w |= b << (j * m)
            yield w


def image_phi_cap(
    code: LinearZCode, partition: PerfectPartition, budget: int = DEFAULT_BUDGET
) -> BinaryCode:
    """The union of product images over all codewords.

    Distinct codewords contribute disjoint products (their blocks come from
    different classes in some coordinate), so the result has exactly
    |code| * (2^m / 2m)^n words; this is asserted.
    """
    if code.modulus.two_m != partition.two_m:
        raise ValueError("modulus mismatch between code and partition")
    n = code.length
    m = partition.m
    expected = code.cardinality() * partition.class_size**n
    if expected > budget:
        raise BudgetExceededError(
            f"product image has {expected} words (budget {budget}); "
            "iterate with iter_image_phi_cap or test membership with "
            "member_of_phi_cap_image instead"
        )
    out = set()
    for x in code.words():
        block_lists = [partition.class_words(s) for s in x]
        for blocks in itertools.product(*block_lists):
            w = 0
            for j, b in enumerate(blocks):
                w |= b << (j * m)
            out.add(w)
    assert len(out) == expected, "per-coordinate classes must be disjoint"
    return BinaryCode(m * n, frozenset(out))


def member_of_phi_cap_image(
    word: int, length: int, check: ZMatrix, partition: PerfectPartition
) -> bool:
    """Membership test for the product image of a kernel code.

    Splits the word into m-bit blocks, reads each block's class index, and
    accepts iff the resulting ring word passes the check rows.  Runs in
    O(n m + n s) without materializing the image.
    """
    m = partition.m
    n = check.n
    if length != m * n:
        raise ValueError(f"word length {length} != {m} * {n}")
    if check.modulus.two_m != partition.two_m:
        raise ValueError("modulus mismatch between check matrix and partition")
    mask = (1 << m) - 1
    symbols = tuple(partition.class_of((word >> (j * m)) & mask) for j in range(n))
    return not any(check.syndrome(symbols))
