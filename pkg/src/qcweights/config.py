"""Parser for the line-oriented ``.qcc`` code description format.

Example::

    # [1, g(x)] over the coset {3, 6}
    code q=2 m=9 l=2
    constituent coset=3
    row 1 | g

Row entries are ``0``, ``g`` (the generator polynomial of the block's coset)
or a polynomial such as ``1 + 2*x^3 + x``.  Integer coefficients are reduced
mod p; for non-prime q a coefficient may also be ``w^k``, the k-th power of
the canonical primitive element of F_q.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .code import GEN, ConstituentSpec, Entry, QccSpec
from .errors import ConfigSyntaxError, InvalidInputError
from .fields import build_field, prime_power
from .numth import coset_of

_KEYVAL = re.compile(r"([A-Za-z_]+)=(\S*)$")
_TERM = re.compile(
    r"""^(?:
        (?P<c1>w\^\d+|\d+)\s*\*\s*x(?:\^(?P<e1>\d+))?   # coeff*x^e
      | x(?:\^(?P<e2>\d+))?                             # x^e
      | (?P<c3>w\^\d+|\d+)                              # coeff
    )$""",
    re.VERBOSE,
)


@dataclass
class ParsedConfig:
    spec: QccSpec
    warnings: list[str] = field(default_factory=list)
    representatives: tuple[int, ...] = ()


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _keyvals(tokens: list[tuple[int, str]], lineno: int, allowed: tuple[str, ...]) -> dict[str, int]:
    out: dict[str, int] = {}
    for col, tok in tokens:
        m = _KEYVAL.match(tok)
        if not m:
            raise ConfigSyntaxError(f"expected key=value, got {tok!r}", lineno, col)
        key, val = m.group(1), m.group(2)
        if key not in allowed:
            raise ConfigSyntaxError(f"unknown keyword {key!r} (expected {', '.join(allowed)})", lineno, col)
        if key in out:
            raise ConfigSyntaxError(f"duplicate keyword {key!r}", lineno, col)
        if not re.fullmatch(r"-?\d+", val):
            raise ConfigSyntaxError(f"{key} needs an integer value, got {val!r}", lineno, col + len(key) + 1)
        out[key] = int(val)
    missing = [k for k in allowed if k not in out]
    if missing:
        raise ConfigSyntaxError(f"missing {', '.join(missing)}", lineno, 1)
    return out


def _tokens(line: str) -> list[tuple[int, str]]:
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


class _EntryParser:
    def __init__(self, q: int, m: int):
        self.q, self.m = q, m
        self.p, self.e = prime_power(q)
        self.field = build_field(self.p, self.e)

    def coefficient(self, text: str, lineno: int, col: int) -> int:
        if text.startswith("w^"):
            if self.e == 1:
                raise ConfigSyntaxError(f"'w^k' coefficients need a non-prime q (q={self.q})", lineno, col)
            k = int(text[2:])
            if not 0 <= k < self.q - 1:
                raise ConfigSyntaxError(f"coefficient out of range: exponent {k} not in 0..{self.q - 2}", lineno, col)
            return self.field.pow(self.field.tables.omega, k)
        return self.field.from_int(int(text))

    def entry(self, text: str, lineno: int, col: int) -> Entry:
        s = text.strip()
        if not s:
            raise ConfigSyntaxError("empty row entry", lineno, col)
        if s in ("g", "G"):
            return GEN
        coeffs = [0] * self.m
        offset = col + (len(text) - len(text.lstrip()))
        for raw in s.split("+"):
            term = raw.strip()
            tcol = offset + (len(raw) - len(raw.lstrip()))
            offset += len(raw) + 1
            mt = _TERM.match(term.replace(" ", ""))
            if not mt:
                raise ConfigSyntaxError(f"cannot parse term {term!r}", lineno, tcol)
            coeff_txt = mt.group("c1") or mt.group("c3")
            if mt.group("c3") is not None:
                exp = 0
            else:
                e_txt = mt.group("e1") if mt.group("c1") is not None else mt.group("e2")
                exp = 1 if e_txt is None else int(e_txt)
            if exp >= self.m:
                raise ConfigSyntaxError(f"exponent {exp} must be below m={self.m}", lineno, tcol)
            c = 1 if coeff_txt is None else self.coefficient(coeff_txt, lineno, tcol)
            coeffs[exp] = self.field.add(coeffs[exp], c)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)


def parse_config(text: str) -> ParsedConfig:
    """Parse a ``.qcc`` description into a validated :class:`QccSpec`."""
    header: dict[str, int] | None = None
    parser: _EntryParser | None = None
    blocks: list[tuple[int, int, list[tuple[Entry, ...]]]] = []  # (rep, line, rows)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        toks = _tokens(line)
        if not toks:
            continue
        col, kw = toks[0]
        if header is None:
            if kw != "code":
                raise ConfigSyntaxError(f"expected 'code q=.. m=.. l=..', got {kw!r}", lineno, col)
            header = _keyvals(toks[1:], lineno, ("q", "m", "l"))
            q, m, l = header["q"], header["m"], header["l"]
            try:
                prime_power(q)
            except InvalidInputError as exc:
                raise ConfigSyntaxError(str(exc), lineno, col) from None
            if m < 1:
                raise ConfigSyntaxError(f"m={m} must be positive", lineno, col)
            if math.gcd(m, q) != 1:
                raise ConfigSyntaxError(f"gcd(m,q) must be 1 (got m={m}, q={q})", lineno, col)
            if l < 2:
                raise ConfigSyntaxError(f"index l={l} must be at least 2", lineno, col)
            parser = _EntryParser(q, m)
            continue
        if kw == "code":
            raise ConfigSyntaxError("duplicate 'code' line", lineno, col)
        if kw == "constituent":
            rep = _keyvals(toks[1:], lineno, ("coset",))["coset"]
            if not 0 <= rep < header["m"]:
                raise ConfigSyntaxError(f"coset representative {rep} outside 0..{header['m'] - 1}", lineno, col)
            for prev_rep, prev_line, _ in blocks:
                if coset_of(header["q"], header["m"], prev_rep) == coset_of(header["q"], header["m"], rep):
                    raise ConfigSyntaxError(
                        f"coset of {rep} already used by the constituent on line {prev_line}", lineno, col
                    )
            blocks.append((rep, lineno, []))
            continue
        if kw == "row":
            if not blocks:
                raise ConfigSyntaxError("'row' before any 'constituent'", lineno, col)
            body_start = col + 3
            body = line[body_start - 1:]
            cells, pos = [], body_start
            for piece in body.split("|"):
                cells.append(parser.entry(piece, lineno, pos))
                pos += len(piece) + 1
            if len(cells) != header["l"]:
                raise ConfigSyntaxError(f"row has {len(cells)} entries, expected l={header['l']}", lineno, col)
            blocks[-1][2].append(tuple(cells))
            continue
        raise ConfigSyntaxError(f"unknown keyword {kw!r}", lineno, col)
    if header is None:
        raise ConfigSyntaxError("missing 'code' line", 1, 1)
    for rep, lineno, rows in blocks:
        if not rows:
            raise ConfigSyntaxError(f"constituent coset={rep} has no rows", lineno, 1)
    spec = QccSpec(
        header["q"], header["m"], header["l"],
        tuple(ConstituentSpec(rep, tuple(rows)) for rep, _, rows in blocks),
    )
    warnings = [] if blocks else ["no constituents: this is the zero code"]
    return ParsedConfig(spec, warnings, tuple(rep for rep, _, _ in blocks))
