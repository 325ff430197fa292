import itertools

import pytest

from graydual.ring import STAR, Modulus
from graydual.linear import dual, min_distance, syndrome_image_size
from graydual.families import TypeProfile, build_bi, code_di, code_hi, z24_examples
from graydual.checks import one_prime_perfect_definition
from graydual.demo import profiles_with_weight
from oracles import brute_kernel, brute_span

REFERENCE_MATRICES = {
    (2, 1, 0): (
        "1111111111111111",
        "0000000044444444",
        "0000444400004444",
        "0246024602460246",
    ),
    (0, 1, 1): (
        "11111111111111111111111111111111",
        "00000000222222224444444466666666",
        "01234567012345670123456701234567",
    ),
    (1, 1, 1): (
        "1111111111111111111111111111111111111111111111111111111111111111",
        "0000000000000000000000000000000044444444444444444444444444444444",
        "0000000022222222444444446666666600000000222222224444444466666666",
        "0123456701234567012345670123456701234567012345670123456701234567",
    ),
}


def digit_rows(matrix):
    return tuple("".join(str(x) for x in row) for row in matrix.rows)


def test_type_profile_basics():
    p = TypeProfile(3, (2, 1, 0))
    assert p.r == 4 and p.n == 16
    assert str(p) == "2,1,0"
    assert TypeProfile.parse("2,1,0").counts == (2, 1, 0)
    with pytest.raises(ValueError):
        TypeProfile(1, (0,))
    with pytest.raises(ValueError):
        TypeProfile(3, (1, 0))
    with pytest.raises(ValueError):
        TypeProfile(3, (-1, 0, 0))
    with pytest.raises(ValueError):
        TypeProfile.parse("1,0", k=3)


@pytest.mark.parametrize("counts, expected", sorted(REFERENCE_MATRICES.items()))
def test_build_bi_reference_matrices(counts, expected):
    assert digit_rows(build_bi(TypeProfile(3, counts))) == expected


def test_build_bi_small_cases():
    assert build_bi(TypeProfile(2, (1, 0))).rows == ((1, 1), (0, 2))
    # degenerate profile: a single all-one column
    assert build_bi(TypeProfile(2, (0, 0))).rows == ((1,),)


@pytest.mark.parametrize(
    "k, counts",
    [(2, (1, 0)), (2, (0, 1)), (2, (1, 1)), (3, (1, 0, 0)), (3, (0, 1, 0)), (3, (1, 1, 0))],
)
def test_build_bi_columns_exhaust_product_set(k, counts):
    profile = TypeProfile(k, counts)
    matrix = build_bi(profile)
    factors = [[1]]
    for j, c in enumerate(counts, start=1):
        factors.extend([list(range(0, 1 << k, 1 << (k - j)))] * c)
    product = set(itertools.product(*factors))
    cols = matrix.columns()
    assert len(cols) == len(set(cols)) == profile.n
    assert set(cols) == product
    assert cols == sorted(cols)


def test_code_hi_examples():
    hi = code_hi(TypeProfile(3, (1, 0, 0)))
    assert set(hi.words()) == {(0, 0), (6, 2), (4, 4), (2, 6)}
    assert set(hi.words()) == brute_kernel([(1, 1), (0, 4)], 8)

    hi = code_hi(TypeProfile(2, (1, 0)))
    assert set(hi.words()) == {(0, 0), (2, 2)}

    assert code_hi(TypeProfile(3, (2, 0, 0))).cardinality() == 128


def test_code_di_examples():
    di = code_di(TypeProfile(2, (1, 0)))
    assert di.cardinality() == 8
    assert min_distance(di, STAR) == 2

    di = code_di(TypeProfile(3, (1, 0, 0)))
    assert di.cardinality() == 16
    assert min_distance(di, STAR) == 4
    assert dual(di).word_set() == code_hi(TypeProfile(3, (1, 0, 0))).word_set()


@pytest.mark.parametrize(
    "k, counts",
    [(2, (1, 0)), (2, (0, 1)), (2, (2, 0)), (3, (1, 0, 0)), (3, (0, 1, 0))],
)
def test_di_hi_cardinality_duality(k, counts):
    profile = TypeProfile(k, counts)
    di = code_di(profile)
    hi = code_hi(profile)
    assert di.cardinality() * hi.cardinality() == (1 << k) ** profile.n


@pytest.mark.parametrize("k", [2, 3])
def test_hi_words_have_even_sum(k):
    for r in range(3):
        for profile in profiles_with_weight(k, r):
            for w in code_hi(profile).words():
                assert sum(w) % 2 == 0


@pytest.mark.parametrize("k", [2, 3])
def test_hi_is_one_prime_perfect_small(k):
    rmax = 3 if k == 2 else 2
    for r in range(rmax + 1):
        for profile in profiles_with_weight(k, r):
            report = one_prime_perfect_definition(code_hi(profile))
            assert report.verdict, (profile.counts, report.details)


def test_degenerate_profile():
    profile = TypeProfile(3, (0, 0, 0))
    assert build_bi(profile).rows == ((1,),)
    assert code_hi(profile).words() == ((0,),)
    assert code_di(profile).cardinality() == 8


def test_z24_examples_frozen():
    bprime, bdprime = z24_examples()
    assert bprime.modulus == Modulus(24)
    assert bprime.rows[0] == (1, 1, 1, 1, 1, 1, 1, 1)
    assert bprime.rows[1] == (0, 0, 0, 0, 12, 12, 12, 12)
    assert bprime.rows[2] == (0, 6, 12, 18, 0, 6, 12, 18)
    assert bdprime.rows[0] == (1, 1, 1, 1, 1, 1)
    assert bdprime.rows[1] == (0, 4, 8, 12, 16, 20)
    assert syndrome_image_size(bprime) == 192
    assert syndrome_image_size(bdprime) == 144


def test_z24_bprime_span_parameters():
    bprime, bdprime = z24_examples()
    span_p = brute_span(bprime.rows, 24)
    assert len(span_p) == 192
    span_d = brute_span(bdprime.rows, 24)
    assert len(span_d) == 144


def test_profiles_with_weight():
    assert [p.counts for p in profiles_with_weight(2, 3)] == [(1, 1), (3, 0)]
    assert [p.counts for p in profiles_with_weight(3, 0)] == [(0, 0, 0)]
