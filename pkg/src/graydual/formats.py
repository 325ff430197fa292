"""Line-oriented ASCII formats for ring codes, binary codes, and enumerators.

Three headers: ``ZCODE mod=<2m> n=<n> role=<gen|check>`` followed by one
row of space-separated residues per line; ``BINCODE L=<length>`` followed
by one 0/1 string per line; ``WEF L=<length>`` followed by ``<w> <coeff>``
lines for the nonzero coefficients in ascending weight.  Everything an
instance of these writers produces parses back to an identical value.
"""

from __future__ import annotations

from pathlib import Path

from .ring import Modulus
from .linear import ZMatrix
from .gray import BinaryCode, string_to_bits
from .wenum import HammingWE

ROLE_GEN = "gen"
ROLE_CHECK = "check"


class FormatError(ValueError):
    """Malformed header or body in one of the text formats."""


def _header_fields(line: str, tag: str, keys: tuple[str, ...]) -> list[str]:
    parts = line.split()
    if not parts or parts[0] != tag:
        raise FormatError(f"expected {tag} header, got {line!r}")
    if len(parts) != 1 + len(keys):
        raise FormatError(f"{tag} header needs fields {keys}: {line!r}")
    values = []
    for part, key in zip(parts[1:], keys):
        prefix = key + "="
        if not part.startswith(prefix):
            raise FormatError(f"expected {prefix}... in {tag} header, got {part!r}")
        values.append(part[len(prefix) :])
    return values


def dump_zcode(matrix: ZMatrix, role: str) -> str:
    if role not in (ROLE_GEN, ROLE_CHECK):
        raise FormatError(f"role must be gen or check, got {role!r}")
    lines = [f"ZCODE mod={matrix.modulus.two_m} n={matrix.n} role={role}"]
    lines += [" ".join(str(x) for x in row) for row in matrix.rows]
    return "\n".join(lines) + "\n"


def load_zcode(text: str) -> tuple[ZMatrix, str]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty ring-code file")
    mod_s, n_s, role = _header_fields(lines[0], "ZCODE", ("mod", "n", "role"))
    if role not in (ROLE_GEN, ROLE_CHECK):
        raise FormatError(f"role must be gen or check, got {role!r}")
    try:
        two_m, n = int(mod_s), int(n_s)
    except ValueError as exc:
        raise FormatError(f"bad ZCODE header numbers: {lines[0]!r}") from exc
    try:
        mod = Modulus(two_m)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    rows = []
    for ln in lines[1:]:
        try:
            row = tuple(int(t) for t in ln.split())
        except ValueError as exc:
            raise FormatError(f"bad row: {ln!r}") from exc
        if len(row) != n:
            raise FormatError(f"row has {len(row)} entries, header says n={n}")
        if any(not (0 <= x < two_m) for x in row):
            raise FormatError(f"entry out of range in row: {ln!r}")
        rows.append(row)
    if not rows:
        raise FormatError("ring-code file has no rows")
    return ZMatrix(mod, tuple(rows)), role


def dump_bincode(code: BinaryCode) -> str:
    lines = [f"BINCODE L={code.length}"]
    lines += code.bit_strings()
    return "\n".join(lines) + "\n"


def load_bincode(text: str) -> BinaryCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty binary-code file")
    (length_s,) = _header_fields(lines[0], "BINCODE", ("L",))
    try:
        length = int(length_s)
    except ValueError as exc:
        raise FormatError(f"bad BINCODE header: {lines[0]!r}") from exc
    words = set()
    for ln in lines[1:]:
        if len(ln) != length or ln.strip("01"):
            raise FormatError(f"bad {length}-bit word: {ln!r}")
        words.add(string_to_bits(ln))
    if not words:
        raise FormatError("binary-code file has no words")
    return BinaryCode(length, frozenset(words))


def dump_wef(we: HammingWE) -> str:
    lines = [f"WEF L={we.length}"]
    lines += [f"{w} {c}" for w, c in enumerate(we.coeffs) if c]
    return "\n".join(lines) + "\n"


def load_wef(text: str) -> HammingWE:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty enumerator file")
    (length_s,) = _header_fields(lines[0], "WEF", ("L",))
    try:
        length = int(length_s)
    except ValueError as exc:
        raise FormatError(f"bad WEF header: {lines[0]!r}") from exc
    coeffs = [0] * (length + 1)
    last = -1
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad WEF line: {ln!r}")
        try:
            w, c = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"bad WEF line: {ln!r}") from exc
        if not 0 <= w <= length:
            raise FormatError(f"weight {w} out of range 0..{length}")
        if w <= last:
            raise FormatError("WEF weights must be strictly ascending")
        last = w
        coeffs[w] = c
    return HammingWE(length, tuple(coeffs))


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="ascii")


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="ascii")
