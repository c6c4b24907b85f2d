"""Frobenius pushforwards of the rank-one MCM modules over a 2-dim Veronese ring.

R is the n-th Veronese subring of k[[x, y]] and I_l (0 <= l < n) is the
module of series whose monomials have total degree congruent to l mod n;
I_0 = R.  The monomials x^a y^b with 0 <= a, b < q form a basis of
k[[x, y]] over its subring of q-th powers, so F^e_* I_l splits into one
rank-one summand per pair (a, b), and the summand attached to (a, b) is
I_i where a + b + q*i = l (mod n).  Counting pairs per residue gives the
multiplicities a_{i,l} in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class VeroneseModule:
    n: int
    l: int
    p: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"Veronese degree n={self.n} must be at least 2")
        if not 0 <= self.l < self.n:
            raise ValueError(f"class l={self.l} must lie in [0, {self.n - 1}]")
        if not _is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if gcd(self.p, self.n) != 1:
            raise ValueError(f"p={self.p} divides n={self.n}")


@dataclass(frozen=True)
class FrobDecomposition:
    n: int
    l: int
    p: int
    e: int
    q: int
    mult: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(self.mult)


def residue_pair_counts(q: int, n: int) -> list[int]:
    """c[r] = #{(a, b) in [0, q)^2 : a + b = r (mod n)}, without enumerating pairs."""
    k, s = divmod(q, n)
    single = [k + (t < s) for t in range(n)]
    return [sum(single[t] * single[(r - t) % n] for t in range(n)) for r in range(n)]


def decompose(V: VeroneseModule, e: int) -> FrobDecomposition:
    if e < 0:
        raise ValueError("e must be nonnegative")
    q = V.p**e
    counts = residue_pair_counts(q, V.n)
    mult = tuple(counts[(V.l - q * i) % V.n] for i in range(V.n))
    return FrobDecomposition(V.n, V.l, V.p, e, q, mult)


def decompose_brute(V: VeroneseModule, e: int) -> FrobDecomposition:
    """Grade a truncated monomial basis of I_l by root-monomial coset.

    Every monomial x^u y^v of I_l with u, v < n*q is written as
    x^a y^b * (x^s y^t)^q with a, b < q; the coset (a, b) is then labelled
    by the degree class of x^s y^t.  Each coset must get a single label.
    """
    q = V.p**e
    labels: dict[tuple[int, int], set[int]] = {}
    for u in range(V.n * q):
        for v in range(V.n * q):
            if (u + v) % V.n != V.l:
                continue
            (s, a), (t, b) = divmod(u, q), divmod(v, q)
            labels.setdefault((a, b), set()).add((s + t) % V.n)
    mult = [0] * V.n
    for cls in labels.values():
        if len(cls) != 1:
            raise AssertionError(f"coset graded inconsistently: {cls}")
        mult[cls.pop()] += 1
    return FrobDecomposition(V.n, V.l, V.p, e, q, tuple(mult))


def splitting_number(V: VeroneseModule, e: int) -> int:
    """Free rank of F^e_* I_l: copies of I_0 = R are exactly the free summands."""
    return decompose(V, e).mult[0]


def lower_bound(mult, l: int) -> int:
    """Surjections onto I_l certified by pairing I_k with I_{l-1-k}."""
    b = mult[l]
    for k in range(l):
        j = l - 1 - k
        if k < j:
            b += min(mult[k], mult[j])
        elif k == j:
            b += mult[k] // 2
    return b


def upper_bound(mult, l: int) -> int:
    """Nakayama bound: summands of class <= l supply i+1 generators each, I_l needs l+1."""
    return sum(mult[i] * (i + 1) for i in range(l + 1)) // (l + 1)


def dual_b_lower(V: VeroneseModule, e: int) -> int:
    return lower_bound(decompose(V, e).mult, V.l)


def dual_b_upper(V: VeroneseModule, e: int) -> int:
    return upper_bound(decompose(V, e).mult, V.l)


def canonical_class(n: int) -> int:
    if n < 2:
        raise ValueError("n must be at least 2")
    return n - 2
