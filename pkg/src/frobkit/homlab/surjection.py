"""Randomized surjectivity oracle for F-surjective numbers over Veronese rings.

A map from a sum of copies of I_i onto I_l^m is surjective iff it is
surjective modulo the maximal ideal.  Modulo m the generators of I_i are
the binary forms of degree i; a homomorphism I_i -> I_l with i <= l acts
on them as multiplication by a form of degree l - i, and for i > l it
lands in m*I_l and contributes nothing.  Surjectivity therefore reduces
to the rank of one matrix assembled from random forms.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from ..veronese import FrobDecomposition, lower_bound, upper_bound
from .field import GF, rank, sampling_field

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurjectionProblem:
    sources: tuple[int, ...]  # multiplicity of I_i among the sources, i = 0..n-1
    target_class: int
    copies: int
    p: int
    field_size: int = 101
    seed: int = 0

    def __post_init__(self):
        if self.copies < 0:
            raise ValueError("number of target copies must be nonnegative")
        if self.field_size < 2:
            raise ValueError("field size must be at least 2")
        if not 0 <= self.target_class < max(len(self.sources), 1):
            raise ValueError("target class out of range")

    @classmethod
    def from_decomposition(cls, dec: FrobDecomposition, copies: int, **kw) -> "SurjectionProblem":
        return cls(tuple(dec.mult), dec.l, copies, dec.p, **kw)

    @property
    def field(self) -> GF:
        return sampling_field(self.p, self.field_size)

    def source_copies(self) -> list[int]:
        """Class of every source copy that can reach the generators of I_l."""
        return [i for i, a in enumerate(self.sources) if i <= self.target_class for _ in range(a)]


def generic_block_map(
    P: SurjectionProblem,
    trial: int = 0,
    forms: Mapping[tuple[int, int], Sequence[int]] | None = None,
) -> np.ndarray:
    """Matrix of the reduced map, rows (target copy, degree-l monomial), cols (source copy, degree-i monomial).

    ``forms`` overrides the random forms: key (source copy, target copy),
    value the l-i+1 coefficients of the multiplier; missing keys are zero.
    """
    l = P.target_class
    srcs = P.source_copies()
    F = P.field
    rng = np.random.default_rng([P.seed, trial])
    cols = sum(i + 1 for i in srcs)
    M = np.zeros((P.copies * (l + 1), cols), dtype=np.int64)
    col = 0
    for s, i in enumerate(srcs):
        for j in range(P.copies):
            if forms is None:
                coeffs = F.random(rng, l - i + 1)
            else:
                coeffs = F.array(forms.get((s, j), [0] * (l - i + 1)))
            # x^(i-u) y^u * x^(l-i-v) y^v lands on row u + v
            for u in range(i + 1):
                M[j * (l + 1) + u : j * (l + 1) + u + l - i + 1, col + u] = coeffs
        col += i + 1
    return M


def is_surjective_generic(P: SurjectionProblem, trials: int = 20) -> bool:
    """True iff some trial's random block map has full row rank.

    A False answer means no witness was found in ``trials`` samples.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    need = P.copies * (P.target_class + 1)
    if need == 0:
        return True
    if sum(i + 1 for i in P.source_copies()) < need:
        return False
    for t in range(trials):
        if rank(P.field, generic_block_map(P, t)) == need:
            return True
    return False


def bq_oracle(
    dec: FrobDecomposition,
    l: int | None = None,
    field_size: int = 101,
    trials: int = 20,
    seed: int = 0,
) -> int:
    """Largest m with a generic surjection onto I_l^m, searched upward from the certified lower bound."""
    if l is None:
        l = dec.l
    if l != dec.l:
        raise ValueError(f"decomposition is for class {dec.l}, not {l}")
    lo, hi = lower_bound(dec.mult, l), upper_bound(dec.mult, l)

    def witnessed(m: int) -> bool:
        P = SurjectionProblem(tuple(dec.mult), l, m, dec.p, field_size, seed + m)
        return is_surjective_generic(P, trials)

    if not witnessed(lo):
        log.warning("no generic witness for the certified lower bound %d (n=%d l=%d q=%d)",
                    lo, dec.n, l, dec.q)
    b = lo
    while b < hi and witnessed(b + 1):
        b += 1
    if b > lo:
        log.info("oracle exceeds lower bound: n=%d l=%d q=%d lower=%d oracle=%d upper=%d",
                 dec.n, l, dec.q, lo, b, hi)
    return b
