import itertools
import random

import pytest

from graydual.ring import STAR, BudgetExceededError, Modulus, RingWord, dist
from graydual.linear import LinearZCode, min_distance
from graydual.gray import (
    BinaryCode,
    OrderedHadamard,
    PerfectPartition,
    bits_to_string,
    image_phi,
    image_phi_cap,
    member_of_phi_cap_image,
    paley_hadamard12,
    phi,
    phi_cap,
    standard_partition,
    string_to_bits,
    sylvester_hadamard,
)
from graydual.families import TypeProfile, build_bi, code_di, code_hi
from graydual.wenum import hamming_we
from oracles import min_pairwise_distance

Z4 = Modulus(4)
Z8 = Modulus(8)


def test_bit_packing_round_trip():
    for s in ("0", "1", "0110", "111000111"):
        assert bits_to_string(string_to_bits(s), len(s)) == s
    with pytest.raises(ValueError):
        string_to_bits("012")


def test_sylvester_classic_listing():
    a = sylvester_hadamard(2)
    assert [bits_to_string(w, 2) for w in a.words] == ["00", "01", "11", "10"]


def test_sylvester_k3():
    a = sylvester_hadamard(3)
    assert a.words[0] == 0
    assert bits_to_string(a.words[4], 4) == "1111"
    # nonzero linear functions on two variables are balanced
    assert [bin(a.words[i]).count("1") for i in (1, 2, 3)] == [2, 2, 2]
    with pytest.raises(ValueError):
        sylvester_hadamard(8)
    with pytest.raises(ValueError):
        sylvester_hadamard(1)


def test_ordered_hadamard_invariants_rejected():
    a = sylvester_hadamard(2)
    words = list(a.words)
    words[0], words[1] = words[1], words[0]
    with pytest.raises(ValueError):
        OrderedHadamard(2, words)


def test_paley_code():
    a = paley_hadamard12()
    assert a.m == 12 and len(a.words) == 24
    assert a.words[0] == 0
    dists = {
        bin(x ^ y).count("1")
        for x, y in itertools.combinations(a.words, 2)
    }
    assert dists == {6, 12}
    # deterministic across constructions
    assert paley_hadamard12().words == a.words


def test_phi_examples():
    a2 = sylvester_hadamard(2)
    assert phi(RingWord(Z4, (0, 0, 0)), a2) == 0
    assert bits_to_string(phi(RingWord(Z4, (2,)), a2), 2) == "11"
    assert bits_to_string(phi(RingWord(Z4, (1, 3)), a2), 4) == "0110"
    with pytest.raises(ValueError):
        phi(RingWord(Z8, (1,)), a2)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_standard_partition_invariants(k):
    p = standard_partition(k)
    m = p.m
    assert m == 1 << (k - 1)
    total = 0
    seen = set()
    for j in range(2 * m):
        words = p.class_words(j)
        assert len(words) == (1 << m) // (2 * m)
        for w in words:
            assert w.bit_count() % 2 == j % 2
            assert p.class_of(w) == j
        if len(words) > 1:
            assert min_pairwise_distance(words) >= 4
        total += len(words)
        seen.update(words)
    assert total == 1 << m and len(seen) == total
    assert p.class_of(0) == 0


def test_standard_partition_k3_reference_classes():
    p = standard_partition(3)
    assert sorted(bits_to_string(w, 4) for w in p.class_words(0)) == ["0000", "1111"]
    assert sorted(bits_to_string(w, 4) for w in p.class_words(2)) == ["0011", "1100"]
    assert sorted(bits_to_string(w, 4) for w in p.class_words(7)) == ["0001", "1110"]


def test_partition_rejects_bad_relabels():
    with pytest.raises(ValueError):
        PerfectPartition(4, leaders={j: j for j in range(8)})  # wrong parities
    good = {0: 0, 1: string_to_bits("1000"), 2: string_to_bits("1100"),
            3: string_to_bits("0100"), 4: string_to_bits("1010"),
            5: string_to_bits("0010"), 6: string_to_bits("0110"),
            7: string_to_bits("0001")}
    p = PerfectPartition(4, leaders=good)
    assert p.class_of(0) == 0
    bad = dict(good)
    bad[0], bad[4] = bad[4], bad[0]  # moves the zero word out of class 0
    with pytest.raises(ValueError):
        PerfectPartition(4, leaders=bad)


def test_phi_cap_reference_example():
    p = standard_partition(3)
    img = phi_cap(RingWord(Z8, (2, 0, 7)), p)
    assert set(img.bit_strings()) == {
        "110000000001", "110000001110", "110011110001", "110011111110",
        "001100000001", "001100001110", "001111110001", "001111111110",
    }


def test_phi_cap_basics():
    p = standard_partition(3)
    img = phi_cap(RingWord(Z8, (0, 0)), p)
    assert 0 in img.words
    assert len(phi_cap(RingWord(Z8, (3, 5)), p)) == 4
    with pytest.raises(ValueError):
        phi_cap(RingWord(Z4, (1,)), p)
    with pytest.raises(BudgetExceededError):
        phi_cap(RingWord(Z8, (0, 0, 0, 0)), p, budget=8)


def test_image_phi_reference_sets():
    a2 = sylvester_hadamard(2)
    di = code_di(TypeProfile(2, (1, 0)))
    img = image_phi(di, a2)
    assert set(img.bit_strings()) == {
        "0000", "0101", "1111", "1010", "0011", "0110", "1100", "1001",
    }
    zero = LinearZCode.from_rows(Z4, [(0, 0)])
    assert image_phi(zero, a2).words == frozenset({0})


def test_image_phi_cap_parameters():
    p = standard_partition(3)
    hi = code_hi(TypeProfile(3, (1, 0, 0)))
    img = image_phi_cap(hi, p)
    assert (img.length, len(img)) == (8, 16)
    assert min_pairwise_distance(img.words) == 4


def test_iter_image_phi_cap_matches_materialization():
    from graydual.gray import iter_image_phi_cap

    p = standard_partition(3)
    hi = code_hi(TypeProfile(3, (1, 0, 0)))
    streamed = list(iter_image_phi_cap(hi, p))
    img = image_phi_cap(hi, p)
    assert len(streamed) == len(img)  # no duplicates in the stream
    assert set(streamed) == img.words
    # streaming keeps working where materialization refuses
    with pytest.raises(BudgetExceededError):
        image_phi_cap(hi, p, budget=4)
    assert sorted(iter_image_phi_cap(hi, p)) == sorted(img.words)


def test_member_of_phi_cap_image_cross_check():
    p = standard_partition(3)
    profile = TypeProfile(3, (1, 0, 0))
    check = build_bi(profile)
    hi = code_hi(profile)
    img = image_phi_cap(hi, p)
    for w in range(1 << 8):
        assert member_of_phi_cap_image(w, 8, check, p) == (w in img.words)
    with pytest.raises(ValueError):
        member_of_phi_cap_image(0, 9, check, p)


def test_member_of_phi_cap_image_larger_instance():
    p = standard_partition(3)
    profile = TypeProfile(3, (2, 0, 0))
    check = build_bi(profile)
    img = image_phi_cap(code_hi(profile), p)
    rng = random.Random(3)
    for w in rng.sample(sorted(img.words), 50):
        assert member_of_phi_cap_image(w, 16, check, p)
        flipped = w ^ (1 << rng.randrange(16))
        assert not member_of_phi_cap_image(flipped, 16, check, p)


def test_isometry_random_pairs():
    a = sylvester_hadamard(3)
    rng = random.Random(17)
    for _ in range(10_000):
        n = rng.randint(1, 8)
        x = RingWord(Z8, tuple(rng.randrange(8) for _ in range(n)))
        y = RingWord(Z8, tuple(rng.randrange(8) for _ in range(n)))
        lhs = bin(phi(x, a) ^ phi(y, a)).count("1")
        assert lhs == dist(x, y, STAR)


@pytest.mark.parametrize(
    "rows, expected_d",
    [
        (((1, 0, 0),), 1),
        (((2, 0, 0),), 2),
        (((1, 1, 1),), 3),
        (((2, 2, 0),), 4),
        (((2, 2, 2),), 6),
    ],
)
def test_phi_cap_distance_contract(rows, expected_d):
    from graydual.ring import DIAMOND

    code = LinearZCode.from_rows(Z8, rows)
    assert min_distance(code, DIAMOND) == expected_d
    p = standard_partition(3)
    img = image_phi_cap(code, p)
    assert min_pairwise_distance(img.words) == min(4, expected_d)


def test_partition_choice_invariance():
    std = standard_partition(3)
    # relabel even classes 2 <-> 4 and odd classes 1 <-> 3, keeping class 0
    swap = {0: 0, 1: 3, 2: 4, 3: 1, 4: 2, 5: 5, 6: 6, 7: 7}
    leaders = {new: std.class_words(old)[0] for old, new in swap.items()}
    relabeled = PerfectPartition(4, leaders=leaders)
    assert relabeled.class_of(0) == 0
    code = LinearZCode.from_rows(Z8, [(1, 2), (0, 4)])
    we_std = hamming_we(image_phi_cap(code, std))
    we_rel = hamming_we(image_phi_cap(code, relabeled))
    assert we_std == we_rel


def test_hadamard_choice_invariance():
    base = sylvester_hadamard(3)
    words = list(base.words)
    # swap a_1 <-> a_3 together with their complements a_5 <-> a_7
    words[1], words[3] = words[3], words[1]
    words[5], words[7] = words[7], words[5]
    reordered = OrderedHadamard(4, words)
    code = code_di(TypeProfile(3, (0, 1, 0)))
    assert hamming_we(image_phi(code, base)) == hamming_we(image_phi(code, reordered))


def test_binary_code_helpers():
    code = BinaryCode.from_strings(["00", "11"])
    assert len(code) == 2 and 3 in code
    assert code.min_distance() == 2
    with pytest.raises(ValueError):
        BinaryCode.from_strings(["0", "00"])
    with pytest.raises(ValueError):
        BinaryCode(2, frozenset({4}))
