"""End-to-end reproduction of the built-in reference claims.

Each step prints one line per claim with the computed value and PASS or
FAIL.  The claims are asserted exactly as stated, including two claims
about the second Z_24 example that exact computation refutes; those print
FAIL together with the computed witness, by design.
"""

from __future__ import annotations

import random
import time

from .ring import DIAMOND, STAR, Modulus, RingWord
from .linear import LinearZCode, ZMatrix, apply_monomial, dual
from .gray import (
    image_phi,
    image_phi_cap,
    paley_hadamard12,
    phi_cap,
    standard_partition,
    sylvester_hadamard,
)
from .families import TypeProfile, build_bi, code_di, code_hi, z24_examples
from .wenum import (
    CASE_CONTAINS_ZERO,
    CASE_EVEN_NO_ZERO,
    CASE_ODD_WEIGHT,
    carlet_transform,
    hamming_we,
    ext_perfect_transform,
    macwilliams_binary,
    symmetrized_we,
)
from .checks import (
    canonicalize,
    hadamard_classification_census,
    is_extended_one_perfect,
    is_hadamard,
    isometry_census,
    one_prime_perfect_criterion,
    one_prime_perfect_definition,
    verify_duality,
)

DEFAULT_SEED = 20240810

#: The three reference matrices for k = 3, as printed digit rows.
BI_REFERENCE = {
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

#: The eight words of the product image of (2 0 7), k = 3.
PHI_CAP_207 = frozenset(
    {
        "110000000001",
        "110000001110",
        "110011110001",
        "110011111110",
        "001100000001",
        "001100001110",
        "001111110001",
        "001111111110",
    }
)


def _digit_rows(matrix: ZMatrix) -> tuple[str, ...]:
    return tuple("".join(str(x) for x in row) for row in matrix.rows)


def profiles_with_weight(k: int, r: int) -> list[TypeProfile]:
    """All profiles (i_1 .. i_k) of weight sum j*i_j = r, lexicographic."""
    out: list[TypeProfile] = []

    def rec(prefix: list[int], j: int, rem: int) -> None:
        if j == k:
            if rem == 0:
                out.append(TypeProfile(k, tuple(prefix)))
            return
        weight = j + 1
        for c in range(rem // weight + 1):
            rec(prefix + [c], j + 1, rem - c * weight)

    rec([], 0, r)
    return out


def random_code(rng: random.Random, two_m: int, n: int) -> LinearZCode:
    mod = Modulus(two_m)
    rows = tuple(
        tuple(rng.randrange(two_m) for _ in range(n))
        for _ in range(rng.randint(1, 3))
    )
    return LinearZCode(mod, n, generators=ZMatrix(mod, rows))


Claim = tuple[str, bool, str]


def step_bi_matrices() -> list[Claim]:
    out = []
    for counts, expected in BI_REFERENCE.items():
        got = _digit_rows(build_bi(TypeProfile(3, counts)))
        out.append(
            (f"matrix k=3 profile {','.join(map(str, counts))} byte-exact",
             got == expected,
             f"{len(got[0])} columns")
        )
    return out


def step_phi_cap_example() -> list[Claim]:
    partition = standard_partition(3)
    img = phi_cap(RingWord(Modulus(8), (2, 0, 7)), partition)
    got = frozenset(img.bit_strings())
    return [("product image of (2 0 7) equals the listed 8 words",
             got == PHI_CAP_207, f"{len(img)} words")]


def step_duality() -> list[Claim]:
    out = []
    cases = [(2, (1, 0)), (3, (1, 0, 0)), (3, (2, 0, 0)), (3, (0, 1, 0)), (3, (1, 1, 0))]
    for k, counts in cases:
        report = verify_duality(TypeProfile(k, counts))
        out.append(
            (f"MacWilliams duality k={k} profile {','.join(map(str, counts))}",
             report.verdict,
             f"sw via {report.details['sw_method']}")
        )
    return out


def step_class_transforms() -> list[Claim]:
    out = []
    for k in (3, 4):
        partition = standard_partition(k)
        m = partition.m
        ok = True
        for j in range(partition.two_m):
            cls = partition.class_code(j)
            got = macwilliams_binary(hamming_we(cls), len(cls))
            case = (
                CASE_CONTAINS_ZERO if j == 0
                else CASE_ODD_WEIGHT if j % 2
                else CASE_EVEN_NO_ZERO
            )
            if got != ext_perfect_transform(m, case):
                ok = False
        out.append((f"closed transform of every partition class, k={k}", ok,
                    f"{partition.two_m} classes, coefficient {2 * m - 2} at weight {m // 2}"))
    return out


def step_carlet(seed: int) -> list[Claim]:
    rng = random.Random(seed)
    hadamard = sylvester_hadamard(3)
    failures = 0
    trials = 100
    for _ in range(trials):
        n = rng.randint(1, 3)
        code = random_code(rng, 8, n)
        cd = dual(code)
        got = carlet_transform(symmetrized_we(cd), 3, cd.cardinality())
        want = hamming_we(image_phi(code, hadamard))
        if got != want:
            failures += 1
    return [("substitution transform matches direct image enumerator",
             failures == 0, f"{trials} random codes over Z_8, n <= 3")]


def step_perfect_sweep() -> list[Claim]:
    out = []
    ok = True
    count = 0
    for k in range(2, 17):
        r = 0
        while k * (1 << r) <= 16:
            for profile in profiles_with_weight(k, r):
                report = one_prime_perfect_definition(code_hi(profile))
                count += 1
                if not report.verdict:
                    ok = False
            r += 1
    out.append((f"kernel codes pass the direct perfectness test (kn <= 16)",
                ok, f"{count} profiles"))
    partition = standard_partition(3)
    for counts in ((1, 0, 0), (2, 0, 0)):
        profile = TypeProfile(3, counts)
        hi = code_hi(profile)
        img = image_phi_cap(hi, partition)
        report = is_extended_one_perfect(img)
        out.append(
            (f"product image of kernel code k=3 profile {','.join(map(str, counts))} "
             f"is ({img.length},{len(img)},4)",
             report.verdict, f"parameters {report.parameters}")
        )
    return out


def step_z24() -> list[Claim]:
    out = []
    bprime, bdprime = z24_examples()
    for name, mat, image_size in (("first", bprime, 192), ("second", bdprime, 144)):
        report = one_prime_perfect_criterion(mat)
        ok = report.verdict and report.details["syndrome_image"] == image_size
        detail = f"syndrome image {report.details['syndrome_image']}"
        if report.witnesses:
            detail += f", low-weight kernel word {report.witnesses[0]}"
        out.append((f"{name} Z_24 check matrix is 1'-perfect (image {image_size})",
                    ok, detail))
    hadamard = paley_hadamard12()
    for name, mat, want in (("first", bprime, (96, 192, 48)), ("second", bdprime, (72, 144, 30))):
        code = LinearZCode(Modulus(24), mat.n, generators=mat)
        img = image_phi(code, hadamard)
        dmin = img.min_distance()
        got = (img.length, len(img), dmin)
        out.append((f"{name} Z_24 span maps to a {want} binary code",
                    got == want, f"computed {got}"))
    return out


def step_hadamard_images() -> list[Claim]:
    out = []
    cases = [(2, (1, 2)), (3, (1, 2, 3, 4))]
    for k, rs in cases:
        hadamard = sylvester_hadamard(k)
        ok = True
        strict = True
        count = 0
        for r in rs:
            for profile in profiles_with_weight(k, r):
                img = image_phi(code_di(profile), hadamard)
                report = is_hadamard(img)
                count += 1
                ok = ok and report.verdict
                strict = strict and report.details["true_hadamard"]
        out.append(
            (f"span-code images are Hadamard with distances in {{L/2, L}}, k={k}",
             ok and strict, f"{count} profiles")
        )
    return out


def step_classification(seed: int) -> list[Claim]:
    rng = random.Random(seed)
    out = []
    ok = True
    trips = 0
    for k in (2, 3):
        mod = Modulus(1 << k)
        units = mod.units()
        for r in range(4):
            for profile in profiles_with_weight(k, r):
                di = code_di(profile)
                n = profile.n
                for _ in range(50):
                    z = tuple(rng.choice(units) for _ in range(n))
                    perm = list(range(n))
                    rng.shuffle(perm)
                    scrambled = apply_monomial(z, tuple(perm), di)
                    got_profile, z2, perm2 = canonicalize(scrambled)
                    back = apply_monomial(z2, perm2, code_di(got_profile))
                    if (got_profile.counts != profile.counts
                            or back.word_set() != scrambled.word_set()):
                        ok = False
                    trips += 1
    out.append(("scrambled span codes canonicalize back to their profile",
                ok, f"{trips} round trips"))
    census = hadamard_classification_census(Modulus(4), 2)
    unique = census.details.get("profiles") == [(1, 0)]
    out.append(("every Hadamard-parameter code in Z_4^2 reduces to profile 1,0",
                census.verdict and unique,
                f"{census.details.get('codes_found')} codes found"))
    return out


def step_isometries() -> list[Claim]:
    out = []
    for two_m in (4, 8):
        mod = Modulus(two_m)
        expected = 2 * len(mod.units()) ** 2
        for metric in (STAR, DIAMOND):
            found = isometry_census(2, mod, metric)
            out.append(
                (f"linear isometries of (Z_{two_m}^2, {metric}) are the monomial maps",
                 len(found) == expected, f"{len(found)} maps, expected {expected}")
            )
    return out


STEPS = (
    ("reference matrices", lambda seed: step_bi_matrices()),
    ("product-map example", lambda seed: step_phi_cap_example()),
    ("MacWilliams duality", lambda seed: step_duality()),
    ("class transforms", lambda seed: step_class_transforms()),
    ("substitution transform", lambda seed: step_carlet(seed)),
    ("perfectness", lambda seed: step_perfect_sweep()),
    ("Z_24 examples", lambda seed: step_z24()),
    ("Hadamard images", lambda seed: step_hadamard_images()),
    ("classification", lambda seed: step_classification(seed)),
    ("isometries", lambda seed: step_isometries()),
)


def run_demo(seed: int = DEFAULT_SEED, out=None) -> int:
    """Run all steps, print one PASS/FAIL line per claim, return a shell code."""
    import sys

    stream = sys.stdout if out is None else out
    failures = 0
    total = 0
    t_start = time.time()
    for idx, (title, fn) in enumerate(STEPS, start=1):
        t0 = time.time()
        claims = fn(seed)
        dt = time.time() - t0
        print(f"[{idx:2}] {title} ({dt:.1f}s)", file=stream)
        for label, ok, detail in claims:
            total += 1
            if not ok:
                failures += 1
            status = "PASS" if ok else "FAIL"
            print(f"     {status}  {label} -- {detail}", file=stream)
    dt = time.time() - t_start
    print(f"{total - failures}/{total} claims pass ({dt:.1f}s total)", file=stream)
    return 1 if failures else 0
