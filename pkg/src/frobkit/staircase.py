"""Monomial ideal combinatorics: bracket powers, colengths, Hilbert-Kunz data.

Ideals live in k[x_1, ..., x_d] (equivalently its completion at the
origin); a monomial ideal is stored as its antichain of minimal exponent
vectors.  Colengths are counted by inclusion-exclusion over shifted
orthants clipped to the box cut out by the pure-power generators, so the
cost depends on the generator combinatorics and not on the size of the
exponents.  That is what makes ``colength(bracket_power(I, p**40))`` cheap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterable, Sequence

from .errors import (
    EmptyIdeal,
    NotContained,
    NotParameterIdeal,
    NotZeroDimensional,
)

Exponent = tuple[int, ...]


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _join(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _antichain(gens: Iterable[Exponent]) -> tuple[Exponent, ...]:
    # sorting by total degree means a divisor is always seen before its multiples
    kept: list[Exponent] = []
    for g in sorted(set(gens), key=lambda v: (sum(v), v)):
        if not any(_divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    dim: int
    generators: tuple[Exponent, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        for g in self.generators:
            if len(g) != self.dim or any(c < 0 for c in g):
                raise ValueError(f"bad exponent {g} for dimension {self.dim}")

    def pure_power(self, axis: int) -> int | None:
        """Smallest a with x_axis**a in the ideal, or None."""
        best = None
        for g in self.generators:
            if all(c == 0 for k, c in enumerate(g) if k != axis):
                best = g[axis] if best is None else min(best, g[axis])
        return best

    @property
    def zero_dimensional(self) -> bool:
        return all(self.pure_power(j) is not None for j in range(self.dim))

    def box(self) -> Exponent:
        if not self.zero_dimensional:
            raise NotZeroDimensional(f"{self} has no pure power on some axis")
        return tuple(self.pure_power(j) for j in range(self.dim))

    def contains(self, m: Sequence[int]) -> bool:
        m = tuple(m)
        return any(_divides(g, m) for g in self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class HKPoint:
    e: int
    q: int
    colength: int


def minimalize(gens: Iterable[Sequence[int]], d: int) -> MonomialIdeal:
    gens = [tuple(int(c) for c in g) for g in gens]
    if not gens:
        raise EmptyIdeal("a monomial ideal needs at least one generator")
    for g in gens:
        if len(g) != d:
            raise ValueError(f"exponent {g} does not have length {d}")
    return MonomialIdeal(d, _antichain(gens))


def bracket_power(ideal: MonomialIdeal, q: int) -> MonomialIdeal:
    if q < 1:
        raise ValueError("q must be positive")
    # scaling preserves the antichain property, no re-minimalization needed
    return MonomialIdeal(ideal.dim, tuple(tuple(q * c for c in g) for g in ideal.generators))


def _union_volume(gens: tuple[Exponent, ...], box: Exponent) -> int:
    """Volume of the union of orthants g + R^d_{>=0}, g in gens, inside [0, box)."""

    @lru_cache(maxsize=None)
    def vol(gs: tuple[Exponent, ...]) -> int:
        if not gs:
            return 0
        g, rest = gs[0], gs[1:]
        own = prod(b - c for b, c in zip(box, g))
        overlaps = (_join(g, h) for h in rest)
        inner = _antichain(m for m in overlaps if all(c < b for c, b in zip(m, box)))
        return own + vol(rest) - vol(inner)

    inside = _antichain(g for g in gens if all(c < b for c, b in zip(g, box)))
    return vol(inside)


def colength(ideal: MonomialIdeal) -> int:
    """Number of standard monomials, i.e. the length of R/I."""
    box = ideal.box()
    return prod(box) - _union_volume(ideal.generators, box)


def hk_function(ideal: MonomialIdeal, p: int, e_range: Iterable[int]) -> list[HKPoint]:
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    ideal.box()
    out = []
    for e in e_range:
        q = p**e
        out.append(HKPoint(e, q, colength(bracket_power(ideal, q))))
    return out


def hk_exact(ideal: MonomialIdeal) -> Fraction:
    """Exact Hilbert-Kunz multiplicity of a monomial ideal.

    The staircase complement is a union of unit cubes anchored at the
    standard monomials, and bracket powers scale it by q in every
    direction, so the limit equals its (integer) volume.
    """
    box = ideal.box()
    return Fraction(prod(box) - _union_volume(ideal.generators, box))


def relative_hk(small: MonomialIdeal, large: MonomialIdeal) -> Fraction:
    """e_HK(small) - e_HK(large) for monomial ideals small <= large."""
    if small.dim != large.dim:
        raise ValueError("ideals live in different dimensions")
    for g in small.generators:
        if not large.contains(g):
            raise NotContained(f"generator {format_monomial(g)} of {small} is not in {large}")
    return hk_exact(small) - hk_exact(large)


def standard_monomials(ideal: MonomialIdeal) -> list[Exponent]:
    box = ideal.box()
    return [m for m in product(*(range(b) for b in box)) if not ideal.contains(m)]


def socle_monomials(ideal: MonomialIdeal) -> set[Exponent]:
    d = ideal.dim
    out = set()
    for m in standard_monomials(ideal):
        shifted = (tuple(c + (k == j) for k, c in enumerate(m)) for j in range(d))
        if all(ideal.contains(s) for s in shifted):
            out.add(m)
    return out


def r_estimate(ideal: MonomialIdeal) -> Fraction:
    """Smallest relative HK gap of a monomial s.o.p. against its socle monomials.

    This only ranges over monomial socle representatives of one parameter
    ideal, so it is an upper bound for the infimum defining r_R(R).
    """
    ideal.box()
    for g in ideal.generators:
        if sum(1 for c in g if c) > 1:
            raise NotParameterIdeal(f"{format_monomial(g)} is not a pure power")
    gaps = [
        relative_hk(ideal, minimalize(ideal.generators + (delta,), ideal.dim))
        for delta in socle_monomials(ideal)
    ]
    return min(gaps)


# -- monomial grammar -------------------------------------------------------

class MonomialSyntaxError(ValueError):
    pass


_FACTOR = re.compile(r"\s*(x\d+|[xyz])\s*(?:\^\s*(\d+))?\s*")
_LETTERS = "xyz"


def _parse_monomial(token: str) -> dict[str, int]:
    text = token.strip()
    if text == "1":
        return {}
    if not text:
        raise MonomialSyntaxError(f"empty monomial in {token!r}")
    powers: dict[str, int] = {}
    pos = 0
    expect_factor = True
    while pos < len(text):
        if not expect_factor and text[pos] == "*":
            pos += 1
            expect_factor = True
            continue
        m = _FACTOR.match(text, pos)
        if m is None or m.end() == pos:
            raise MonomialSyntaxError(f"cannot parse {text[pos:]!r} in monomial {text!r}")
        var, exp = m.group(1), m.group(2)
        powers[var] = powers.get(var, 0) + (int(exp) if exp is not None else 1)
        pos = m.end()
        expect_factor = False
    if expect_factor:
        raise MonomialSyntaxError(f"dangling '*' in monomial {text!r}")
    return powers


def parse_monomials(text: str) -> tuple[list[dict[str, int]], int]:
    """Parse 'x^2,x*y,y^2' into power dictionaries plus the inferred dimension."""
    parsed = [_parse_monomial(tok) for tok in text.split(",")]
    names = {v for mono in parsed for v in mono}
    indexed = {v for v in names if len(v) > 1}
    if indexed and indexed != names:
        bad = sorted(names - indexed)[0]
        raise MonomialSyntaxError(f"variable {bad!r} mixes x,y,z naming with x1..xd naming")
    if indexed:
        for v in indexed:
            if int(v[1:]) < 1:
                raise MonomialSyntaxError(f"variable {v!r}: indices start at 1")
        d = max(int(v[1:]) for v in indexed)
    else:
        d = max((_LETTERS.index(v) + 1 for v in names), default=1)
    return parsed, d


def _axis(var: str) -> int:
    return int(var[1:]) - 1 if len(var) > 1 else _LETTERS.index(var)


def parse_ideal(text: str, dim: int | None = None) -> MonomialIdeal:
    parsed, d = parse_monomials(text)
    if dim is not None:
        if dim < d:
            raise MonomialSyntaxError(f"ideal {text!r} uses {d} variables but dim={dim}")
        d = dim
    gens = []
    for mono in parsed:
        v = [0] * d
        for var, a in mono.items():
            v[_axis(var)] += a
        gens.append(tuple(v))
    return minimalize(gens, d)


def format_monomial(g: Sequence[int]) -> str:
    names = _LETTERS if len(g) <= 3 else [f"x{i + 1}" for i in range(len(g))]
    parts = []
    for var, a in zip(names, g):
        if a == 1:
            parts.append(var)
        elif a > 1:
            parts.append(f"{var}^{a}")
    return "*".join(parts) or "1"
