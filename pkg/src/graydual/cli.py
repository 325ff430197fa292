"""Command-line front end.

Exit codes: 0 for success (and for a true verdict), 1 for a false
verdict, 2 for infeasible or invalid instances (budget, bad parameters),
3 for file I/O and parse errors.  The enumeration budget can be
overridden with the GRAYDUAL_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys

from .ring import DEFAULT_BUDGET, BudgetExceededError
from .linear import LinearZCode, kernel
from .gray import image_phi, image_phi_cap, paley_hadamard12, standard_partition, sylvester_hadamard
from .families import TypeProfile, build_bi, z24_examples
from .checks import (
    canonicalize,
    is_extended_one_perfect,
    is_hadamard,
    one_prime_perfect_criterion,
    one_prime_perfect_definition,
    verify_duality,
)
from .demo import DEFAULT_SEED, run_demo
from . import formats
from .linear import apply_monomial
from .families import code_di


def _budget() -> int:
    raw = os.environ.get("GRAYDUAL_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"GRAYDUAL_BUDGET must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError("GRAYDUAL_BUDGET must be positive")
    return value


def _profile_from_args(args) -> TypeProfile:
    if args.profile is None:
        raise ValueError("--profile is required for this target")
    profile = TypeProfile.parse(args.profile, k=args.k)
    return profile


def _load_code(path: str, budget: int) -> LinearZCode:
    matrix, role = formats.load_zcode(formats.read_text(path))
    if role == formats.ROLE_GEN:
        return LinearZCode(matrix.modulus, matrix.n, generators=matrix, budget=budget)
    return LinearZCode(matrix.modulus, matrix.n, check=matrix, budget=budget)


def cmd_build(args) -> int:
    target = args.target
    if target in ("bi", "hi", "di"):
        profile = _profile_from_args(args)
        matrix = build_bi(profile)
        default_role = formats.ROLE_GEN if target == "di" else formats.ROLE_CHECK
    elif target in ("z24-bprime", "z24-bdprime"):
        bprime, bdprime = z24_examples()
        matrix = bprime if target == "z24-bprime" else bdprime
        default_role = formats.ROLE_CHECK
    else:  # unreachable; argparse restricts choices
        raise ValueError(f"unknown build target {target!r}")
    role = args.role or default_role
    formats.write_text(args.out, formats.dump_zcode(matrix, role))
    print(f"wrote {args.out} ({matrix.n_rows} x {matrix.n} over Z_{matrix.modulus.two_m}, role={role})")
    return 0


def cmd_map(args) -> int:
    budget = min(_budget(), args.max_words) if args.max_words else _budget()
    code = _load_code(args.input, budget)
    mod = code.modulus
    if args.map == "phi":
        if args.hadamard == "paley12":
            if mod.two_m != 24:
                raise ValueError("paley12 needs a Z_24 code")
            hadamard = paley_hadamard12()
        else:
            if mod.k is None:
                raise ValueError(
                    f"sylvester map needs a power-of-two ring, got Z_{mod.two_m}; "
                    "pass --hadamard paley12 for Z_24"
                )
            hadamard = sylvester_hadamard(mod.k)
        image = image_phi(code, hadamard, budget)
    else:
        if mod.k is None:
            raise ValueError(f"product map needs a power-of-two ring, got Z_{mod.two_m}")
        partition = standard_partition(mod.k)
        image = image_phi_cap(code, partition, budget)
    formats.write_text(args.out, formats.dump_bincode(image))
    print(f"wrote {args.out} ({len(image)} words of length {image.length})")
    return 0


def _print_report(report) -> int:
    print(str(report))
    return 0 if report.verdict else 1


def cmd_verify_perfect1p(args) -> int:
    budget = _budget()
    matrix, role = formats.load_zcode(formats.read_text(args.check))
    if role != formats.ROLE_CHECK:
        raise ValueError("perfect1p expects a role=check file")
    method = args.method
    if method == "auto":
        space = matrix.modulus.two_m**matrix.n
        method = "definition" if space <= (1 << 16) else "criterion"
    if method == "definition":
        code = kernel(matrix, budget)
        report = one_prime_perfect_definition(code, budget)
    else:
        report = one_prime_perfect_criterion(matrix, budget)
    return _print_report(report)


def cmd_verify_ext_perfect(args) -> int:
    code = formats.load_bincode(formats.read_text(args.input))
    return _print_report(is_extended_one_perfect(code, _budget()))


def cmd_verify_hadamard(args) -> int:
    code = formats.load_bincode(formats.read_text(args.input))
    return _print_report(is_hadamard(code))


def cmd_verify_duality(args) -> int:
    profile = _profile_from_args(args)
    return _print_report(verify_duality(profile, _budget()))


def cmd_verify_canon(args) -> int:
    budget = _budget()
    matrix, role = formats.load_zcode(formats.read_text(args.input))
    if role != formats.ROLE_GEN:
        raise ValueError("canon expects a role=gen file")
    code = LinearZCode(matrix.modulus, matrix.n, generators=matrix, budget=budget)
    profile, z, perm = canonicalize(code)
    back = apply_monomial(z, perm, code_di(profile, budget))
    verdict = back.word_set() == code.word_set()
    print(f"profile: {profile}")
    print(f"scale: {' '.join(str(v) for v in z)}")
    print(f"permutation: {' '.join(str(p) for p in perm)}")
    print(f"verdict: {'true' if verdict else 'false'}")
    return 0 if verdict else 1


def cmd_demo(args) -> int:
    return run_demo(seed=args.seed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graydual",
        description="Build ring codes, map them to binary codes, and verify "
        "their parameters and dualities exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="write a structured matrix to a ring-code file")
    p_build.add_argument("target", choices=["bi", "hi", "di", "z24-bprime", "z24-bdprime"])
    p_build.add_argument("--k", type=int, default=None, help="ring exponent (2m = 2^k)")
    p_build.add_argument("--profile", default=None, help="comma-separated row counts i1,...,ik")
    p_build.add_argument("--role", choices=[formats.ROLE_GEN, formats.ROLE_CHECK], default=None)
    p_build.add_argument("--out", required=True)
    p_build.set_defaults(func=cmd_build)

    p_map = sub.add_parser("map", help="apply a Gray map to the code in a ring-code file")
    p_map.add_argument("map", choices=["phi", "cap"])
    p_map.add_argument("--in", dest="input", required=True)
    p_map.add_argument("--out", required=True)
    p_map.add_argument("--hadamard", choices=["sylvester", "paley12"], default="sylvester")
    p_map.add_argument("--max-words", type=int, default=None)
    p_map.set_defaults(func=cmd_map)

    p_verify = sub.add_parser("verify", help="run a verification and report a verdict")
    v_sub = p_verify.add_subparsers(dest="verification", required=True)

    p_p1 = v_sub.add_parser("perfect1p", help="1'-perfect test for a check matrix")
    p_p1.add_argument("--check", required=True)
    p_p1.add_argument("--method", choices=["auto", "definition", "criterion"], default="auto")
    p_p1.set_defaults(func=cmd_verify_perfect1p)

    p_ep = v_sub.add_parser("ext-perfect", help="extended 1-perfect parameter test")
    p_ep.add_argument("--in", dest="input", required=True)
    p_ep.set_defaults(func=cmd_verify_ext_perfect)

    p_h = v_sub.add_parser("hadamard", help="Hadamard parameter test")
    p_h.add_argument("--in", dest="input", required=True)
    p_h.set_defaults(func=cmd_verify_hadamard)

    p_d = v_sub.add_parser("duality", help="formal-duality check for one profile")
    p_d.add_argument("--k", type=int, required=True)
    p_d.add_argument("--profile", required=True)
    p_d.set_defaults(func=cmd_verify_duality)

    p_c = v_sub.add_parser("canon", help="canonicalize a Hadamard-parameter code")
    p_c.add_argument("--in", dest="input", required=True)
    p_c.set_defaults(func=cmd_verify_canon)

    p_demo = sub.add_parser("demo", help="reproduce the built-in reference claims")
    p_demo.add_argument("what", choices=["paper"])
    p_demo.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_demo.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except formats.FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
