"""Text syntax for domains and points.

Domain grammar (whitespace-insensitive, factors may nest):

    disk
    ball:<n>
    polydisk:<n>
    punctured-disk
    annulus:<r>                      0 < r < 1
    ellipsoid:<p1,p2,...>            exponents >= 1/2
    product(<spec>,<spec>,...)
    <name>                           looked up in a constants table

Points are comma-separated complex coordinates written with a trailing
``i`` for the imaginary part: ``0.5``, ``0.1+0.2i``, ``-0.3i``.
"""

from __future__ import annotations

import math
from typing import Mapping

from .domains import (
    Domain,
    DomainError,
    annulus,
    ellipsoid,
    named_factor,
    polydisk,
    product,
    punctured_disk,
    unit_ball,
    unit_disk,
)


class ParseError(ValueError):
    """Malformed domain or point text."""


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on sep, ignoring separators inside parentheses."""
    parts: list[str] = []
    depth = 0
    cur: list[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced ')' in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced '(' in {text!r}")
    parts.append("".join(cur))
    return parts


def _parse_int(text: str, what: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}") from None
    return n


def _parse_float(text: str, what: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise ParseError(f"{what} must be a number, got {text!r}") from None
    return x


def parse_domain(
    text: str, constants: Mapping[str, float] | None = None
) -> Domain:
    """Parse the domain grammar; named factors resolve via ``constants``."""
    s = text.strip()
    if not s:
        raise ParseError("empty domain spec")
    try:
        if s == "disk":
            return unit_disk()
        if s == "punctured-disk":
            return punctured_disk()
        if s.startswith("product(") and s.endswith(")"):
            inner = s[len("product(") : -1]
            parts = split_top_level(inner)
            if parts == [""]:
                raise ParseError("product needs at least one factor")
            return product(*(parse_domain(p, constants) for p in parts))
        if ":" in s:
            head, _, arg = s.partition(":")
            head, arg = head.strip(), arg.strip()
            if head == "ball":
                return unit_ball(_parse_int(arg, "ball dimension"))
            if head == "polydisk":
                return polydisk(_parse_int(arg, "polydisk dimension"))
            if head == "annulus":
                return annulus(_parse_float(arg, "annulus inner radius"))
            if head == "ellipsoid":
                exps = [
                    _parse_float(p, "ellipsoid exponent") for p in arg.split(",") if p.strip()
                ]
                if not exps:
                    raise ParseError("ellipsoid needs at least one exponent")
                return ellipsoid(exps)
            raise ParseError(f"unknown domain keyword {head!r}")
    except DomainError as exc:
        raise ParseError(str(exc)) from None
    if constants and s in constants:
        try:
            return named_factor(s, constants[s])
        except DomainError as exc:
            raise ParseError(str(exc)) from None
    hint = " (no constants table loaded)" if not constants else ""
    raise ParseError(f"unknown domain {s!r}{hint}")


def parse_point(text: str) -> tuple[complex, ...]:
    """Parse comma-separated complex coordinates."""
    s = text.strip()
    if not s:
        raise ParseError("empty point")
    coords: list[complex] = []
    for tok in s.split(","):
        tok = tok.strip().replace(" ", "")
        if not tok:
            raise ParseError(f"empty coordinate in {text!r}")
        try:
            c = complex(tok.replace("i", "j"))
        except ValueError:
            raise ParseError(f"bad coordinate {tok!r}") from None
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise ParseError(f"non-finite coordinate {tok!r}")
        coords.append(c)
    return tuple(coords)
