"""Finite fields GF(p^k) acting on numpy integer arrays, plus Gaussian elimination.

Elements are encoded as integers in [0, p^k): the base-p digits of the
code are the coefficients of a polynomial in a primitive root t.  Prime
fields use plain modular arithmetic; extension fields multiply through
exp/log tables and add digit by digit.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _code(digits, p: int) -> int:
    return sum(int(c) * p**j for j, c in enumerate(digits))


def _primitive_tables(p: int, k: int) -> tuple[list[int], np.ndarray, np.ndarray]:
    """Find a monic primitive polynomial of degree k by search; return it with exp/log."""
    q = p**k
    for tail in range(p**k):
        low = _digits(tail, p, k)  # f = t^k + sum low[j] t^j
        if low[0] == 0:
            continue
        exp = np.zeros(q - 1, dtype=np.int64)
        cur = [1] + [0] * (k - 1)
        seen_one = False
        for i in range(q - 1):
            exp[i] = _code(cur, p)
            if i > 0 and exp[i] == 1:
                seen_one = True
                break
            # multiply by t and reduce with t^k = -low
            top = cur[-1]
            cur = [0] + cur[:-1]
            cur = [(c - top * f) % p for c, f in zip(cur, low)]
        if seen_one or _code(cur, p) != 1:
            continue
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        return low + [1], exp, log
    raise ValueError(f"no primitive polynomial of degree {k} over F_{p}")


class GF:
    """The finite field with p**k elements."""

    def __init__(self, p: int, k: int = 1):
        if p < 2 or k < 1:
            raise ValueError("need a prime p and degree k >= 1")
        self.p = p
        self.k = k
        self.order = p**k
        if k > 1:
            self.modulus, self._exp, self._log = _primitive_tables(p, k)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def array(self, values) -> np.ndarray:
        a = np.asarray(values, dtype=np.int64)
        if self.k == 1:
            return a % self.p
        if a.size and (a.min() < 0 or a.max() >= self.order):
            raise ValueError(f"codes out of range for {self}")
        return a

    def _digitwise(self, x, y, sign: int) -> np.ndarray:
        x, y = np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        w = 1
        for _ in range(self.k):
            out += ((x // w % self.p + sign * (y // w % self.p)) % self.p) * w
            w *= self.p
        return out

    def add(self, x, y) -> np.ndarray:
        if self.k == 1:
            return (np.asarray(x) + y) % self.p
        return self._digitwise(x, y, 1)

    def sub(self, x, y) -> np.ndarray:
        if self.k == 1:
            return (np.asarray(x) - y) % self.p
        return self._digitwise(x, y, -1)

    def neg(self, x) -> np.ndarray:
        return self.sub(np.zeros_like(np.asarray(x)), x)

    def mul(self, x, y) -> np.ndarray:
        if self.k == 1:
            return (np.asarray(x) * y) % self.p
        x, y = np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)
        lx, ly = self._log[x], self._log[y]
        prod_ = self._exp[(lx + ly) % (self.order - 1)]
        return np.where((x == 0) | (y == 0), 0, prod_)

    def inv(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroDivisionError(f"zero has no inverse in {self}")
        if self.k == 1:
            return np.vectorize(lambda v: pow(int(v), -1, self.p), otypes=[np.int64])(x)
        return self._exp[(-self._log[x]) % (self.order - 1)]

    def random(self, rng: np.random.Generator, size=None) -> np.ndarray:
        return rng.integers(0, self.order, size=size, dtype=np.int64)

    def elements(self) -> range:
        return range(self.order)


@lru_cache(maxsize=None)
def sampling_field(p: int, min_size: int) -> GF:
    """Smallest GF(p^k) with at least min_size elements."""
    k = 1
    while p**k < min_size:
        k += 1
    return GF(p, k)


def rref(F: GF, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F and the pivot columns."""
    R = F.array(A).copy()
    if R.ndim != 2:
        raise ValueError("rref needs a matrix")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = F.mul(R[r], F.inv(R[r, c]))
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if others.size:
            R[others] = F.sub(R[others], F.mul(R[others, c][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: GF, A) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F: GF, A) -> np.ndarray:
    """Basis of {v : A v = 0}, one vector per row."""
    A = F.array(A)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref(F, A)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for j, f in enumerate(free):
        basis[j, f] = 1
        for i, pc in enumerate(pivots):
            basis[j, pc] = F.neg(R[i, f])
    return basis


def matmul(F: GF, A, B) -> np.ndarray:
    A, B = F.array(A), F.array(B)
    if F.k == 1 and F.p < 2**20:
        return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = F.add(out, F.mul(A[:, j][:, None], B[j][None, :]))
    return out


def solve(F: GF, A, b) -> np.ndarray | None:
    """Some x with A x = b, or None when inconsistent."""
    A = F.array(A)
    b = F.array(b).reshape(-1, 1)
    R, pivots = rref(F, np.hstack([A, b]))
    n = A.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, n]
    return x


def inverse(F: GF, A) -> np.ndarray:
    A = F.array(A)
    n = A.shape[0]
    R, pivots = rref(F, np.hstack([A, np.eye(n, dtype=np.int64)]))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]
