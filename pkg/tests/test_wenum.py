import random

import pytest

from graydual.ring import Modulus
from graydual.linear import LinearZCode, ZMatrix, dual, kernel
from graydual.gray import (
    BinaryCode,
    image_phi,
    image_phi_cap,
    standard_partition,
    sylvester_hadamard,
)
from graydual.families import TypeProfile, build_bi, code_di, code_hi
from graydual.wenum import (
    CASE_CONTAINS_ZERO,
    CASE_EVEN_NO_ZERO,
    CASE_ODD_WEIGHT,
    HammingWE,
    SymmetrizedWE,
    carlet_transform,
    compose_sw,
    hamming_we,
    ext_perfect_transform,
    macwilliams_binary,
    symmetrized_we,
    symmetrized_we_from_check,
)
from oracles import gf2_dual_words, we_of_bitwords

Z4 = Modulus(4)
Z8 = Modulus(8)


def test_hamming_we_examples():
    assert hamming_we(BinaryCode.from_strings(["0000", "1111"])).coeffs == (1, 0, 0, 0, 1)

    di = code_di(TypeProfile(2, (1, 0)))
    img = image_phi(di, sylvester_hadamard(2))
    assert hamming_we(img).coeffs == (1, 0, 6, 0, 1)

    # the zero class of the length-8 partition is the extended Hamming code
    h0 = standard_partition(4).class_code(0)
    assert hamming_we(h0).coeffs == (1, 0, 0, 0, 14, 0, 0, 0, 1)


def test_hamming_we_type_validation():
    with pytest.raises(ValueError):
        HammingWE(3, (1, 0))


def test_symmetrized_we_examples():
    zero = LinearZCode.from_rows(Z8, [(0, 0, 0)])
    assert symmetrized_we(zero).coeffs == {(3, 0, 0): 1}

    hi = code_hi(TypeProfile(3, (1, 0, 0)))
    assert symmetrized_we(hi).coeffs == {(2, 0, 0): 1, (0, 0, 2): 3}

    di = code_di(TypeProfile(3, (1, 0, 0)))
    assert symmetrized_we(di).mass() == 16

    with pytest.raises(ValueError):
        SymmetrizedWE(2, {(1, 1, 1): 1})


def test_macwilliams_examples():
    assert macwilliams_binary(HammingWE(2, (1, 0, 1)), 2).coeffs == (1, 0, 1)
    assert macwilliams_binary(HammingWE(4, (1, 0, 0, 0, 1)), 2).coeffs == (1, 0, 6, 0, 1)
    assert macwilliams_binary(HammingWE(1, (1, 1)), 2).coeffs == (1, 0)
    with pytest.raises(ValueError):
        macwilliams_binary(HammingWE(2, (1, 1, 0)), 3)


def test_macwilliams_against_gf2_duals():
    rng = random.Random(5)
    for _ in range(40):
        length = rng.randint(1, 8)
        gens = [rng.randrange(1 << length) for _ in range(rng.randint(1, 3))]
        span = {0}
        for g in gens:
            span |= {c ^ g for c in span}
        dual_words = gf2_dual_words(span, length)
        lhs = macwilliams_binary(
            HammingWE(length, we_of_bitwords(dual_words, length)), len(dual_words)
        )
        assert lhs.coeffs == we_of_bitwords(span, length)


def test_ext_perfect_transforms():
    assert ext_perfect_transform(4, CASE_CONTAINS_ZERO).coeffs == (1, 0, 6, 0, 1)
    assert ext_perfect_transform(4, CASE_ODD_WEIGHT).coeffs == (1, 0, 0, 0, -1)
    assert ext_perfect_transform(4, CASE_EVEN_NO_ZERO).coeffs == (1, 0, -2, 0, 1)
    with pytest.raises(ValueError):
        ext_perfect_transform(6, CASE_CONTAINS_ZERO)
    with pytest.raises(ValueError):
        ext_perfect_transform(4, "other")


@pytest.mark.parametrize("k", [2, 3, 4])
def test_class_transform_end_to_end(k):
    partition = standard_partition(k)
    m = partition.m
    for j in range(2 * m):
        cls = partition.class_code(j)
        got = macwilliams_binary(hamming_we(cls), len(cls))
        if j == 0:
            case = CASE_CONTAINS_ZERO
        elif j % 2:
            case = CASE_ODD_WEIGHT
        else:
            case = CASE_EVEN_NO_ZERO
        assert got == ext_perfect_transform(m, case)


def test_carlet_minimal_examples():
    # zero code in Z_4^1: its dual is the whole line
    sw = SymmetrizedWE(1, {(1, 0, 0): 1, (0, 1, 0): 2, (0, 0, 1): 1})
    assert carlet_transform(sw, 2, 4).coeffs == (1, 0, 0)

    # full line: dual is the zero code
    sw = SymmetrizedWE(1, {(1, 0, 0): 1})
    assert carlet_transform(sw, 2, 1).coeffs == (1, 2, 1)

    # the order-2 subgroup {0, 2} is self-dual in Z_4^1
    sw = SymmetrizedWE(1, {(1, 0, 0): 1, (0, 0, 1): 1})
    assert carlet_transform(sw, 2, 2).coeffs == (1, 0, 1)


def test_carlet_against_direct_images():
    rng = random.Random(23)
    hadamard = sylvester_hadamard(3)
    for _ in range(30):
        n = rng.randint(1, 3)
        rows = tuple(
            tuple(rng.randrange(8) for _ in range(n)) for _ in range(rng.randint(1, 3))
        )
        code = LinearZCode.from_rows(Z8, rows)
        cd = dual(code)
        got = carlet_transform(symmetrized_we(cd), 3, cd.cardinality())
        assert got == hamming_we(image_phi(code, hadamard))
        assert got.mass() == code.cardinality()


def test_compose_sw_basics():
    p = standard_partition(3)
    wh = [hamming_we(p.class_code(j)) for j in range(3)]

    sw = SymmetrizedWE(2, {(2, 0, 0): 1})
    got = compose_sw(sw, *wh)
    direct = [0] * 9
    for a in p.class_words(0):
        for b in p.class_words(0):
            direct[bin(a).count("1") + bin(b).count("1")] += 1
    assert got.coeffs == tuple(direct)

    sw = SymmetrizedWE(1, {(0, 1, 0): 1})
    assert compose_sw(sw, *wh) == wh[1]

    with pytest.raises(ValueError):
        compose_sw(sw, wh[0], wh[1], hamming_we(standard_partition(2).class_code(0)))


def test_compose_sw_matches_materialized_product_image():
    p = standard_partition(3)
    wh = [hamming_we(p.class_code(j)) for j in range(3)]
    for counts in ((1, 0, 0), (2, 0, 0), (0, 1, 0)):
        hi = code_hi(TypeProfile(3, counts))
        got = compose_sw(symmetrized_we(hi), *wh)
        want = hamming_we(image_phi_cap(hi, p))
        assert got == want
        assert got.mass() == hi.cardinality() * p.class_size**hi.length


def test_symmetrized_dp_matches_enumeration():
    rng = random.Random(31)
    for mod in (Z4, Z8):
        for _ in range(25):
            n = rng.randint(1, 4)
            rows = tuple(
                tuple(rng.randrange(mod.two_m) for _ in range(n))
                for _ in range(rng.randint(1, 3))
            )
            check = ZMatrix(mod, rows)
            by_dp = symmetrized_we_from_check(check)
            by_enum = symmetrized_we(kernel(check))
            assert by_dp.coeffs == by_enum.coeffs


def test_duality_pipeline_with_dp():
    # same right-hand side computed at n = 8 via the syndrome DP
    profile = TypeProfile(3, (1, 1, 0))
    p = standard_partition(3)
    wh = [hamming_we(p.class_code(j)) for j in range(3)]
    sw = symmetrized_we_from_check(build_bi(profile))
    w_cap = compose_sw(sw, *wh)
    cap_card = sw.mass() * p.class_size**profile.n
    assert w_cap.mass() == cap_card
    rhs = macwilliams_binary(w_cap, cap_card)
    lhs = hamming_we(image_phi(code_di(profile), sylvester_hadamard(3)))
    assert lhs == rhs
