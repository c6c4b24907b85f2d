"""Artinian local algebras over F_p, their finite modules, socles and Matlis duals.

An algebra of dimension D is given by structure constants ``mult[i, j, k]``
(e_i * e_j = sum_k mult[i, j, k] e_k) and a basis of its maximal ideal
(D - 1 vectors; the residue field is F_p).  A module is given by one
matrix per maximal-ideal basis vector; matrices act on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import logging

import numpy as np

from ..errors import HypothesisViolated, InvalidStructure, NoGenericScalar
from .field import GF, inverse, matmul, nullspace, rank, rref, solve

EXHAUSTIVE_LIMIT = 10**5

log = logging.getLogger(__name__)


class ArtinianAlgebra:
    def __init__(self, p: int, mult, maximal_ideal=None, validate: bool = True):
        self.F = GF(p)
        self.p = p
        self.mult = self.F.array(mult)
        if self.mult.ndim != 3 or len(set(self.mult.shape)) != 1:
            raise InvalidStructure("structure constants must form a D x D x D array")
        D = self.dim = self.mult.shape[0]
        if maximal_ideal is None:
            maximal_ideal = np.eye(D, dtype=np.int64)[1:]
        self.maximal_ideal = self.F.array(maximal_ideal).reshape(-1, D)
        if self.maximal_ideal.shape[0] != D - 1:
            raise InvalidStructure(f"maximal ideal basis needs {D - 1} vectors, got {self.maximal_ideal.shape[0]}")
        self.unit = self._find_unit()
        basis = np.vstack([self.unit[None, :], self.maximal_ideal])
        try:
            self._to_coords = inverse(self.F, basis)
        except ZeroDivisionError:
            raise InvalidStructure("unit and maximal ideal basis do not span the algebra") from None
        if validate:
            self.validate()

    def _find_unit(self) -> np.ndarray:
        D = self.dim
        # sum_i u_i mult[i, j, k] = delta_jk for all j, k
        A = self.mult.transpose(1, 2, 0).reshape(D * D, D)
        u = solve(self.F, A, np.eye(D, dtype=np.int64).reshape(-1))
        if u is None:
            raise InvalidStructure("multiplication has no unit")
        return u

    def multiply(self, a, b) -> np.ndarray:
        return np.einsum("i,j,ijk->k", self.F.array(a), self.F.array(b), self.mult) % self.p

    def left_matrix(self, a) -> np.ndarray:
        """Matrix of b -> a*b on column vectors."""
        return np.einsum("i,ijk->kj", self.F.array(a), self.mult) % self.p

    def coords(self, a) -> np.ndarray:
        """Coordinates of a in the basis (unit, maximal ideal basis)."""
        return matmul(self.F, self.F.array(a)[None, :], self._to_coords)[0]

    def validate(self) -> None:
        T, p, D = self.mult, self.p, self.dim
        if not np.array_equal(T, T.transpose(1, 0, 2)):
            raise InvalidStructure("multiplication is not commutative")
        left = np.einsum("ija,akl->ijkl", T, T) % p    # (e_i e_j) e_k
        right = np.einsum("jka,ial->ijkl", T, T) % p   # e_i (e_j e_k)
        if not np.array_equal(left, right):
            raise InvalidStructure("multiplication is not associative")
        span = rank(self.F, self.maximal_ideal)
        for x in self.maximal_ideal:
            for j in range(D):
                y = self.multiply(x, np.eye(D, dtype=np.int64)[j])
                if rank(self.F, np.vstack([self.maximal_ideal, y[None, :]])) != span:
                    raise InvalidStructure("maximal ideal basis does not span an ideal")
            if np.any(_power(self.F, self.left_matrix(x), D)):
                raise InvalidStructure("maximal ideal element is not nilpotent")


def _power(F: GF, A, k: int) -> np.ndarray:
    out = np.eye(A.shape[0], dtype=np.int64)
    for _ in range(k):
        out = matmul(F, out, A)
    return out


class FiniteModule:
    def __init__(self, algebra: ArtinianAlgebra, dim: int, action, validate: bool = True):
        self.algebra = algebra
        self.F = algebra.F
        self.dim = dim
        self.action = [self.F.array(X).reshape(dim, dim) for X in action]
        if len(self.action) != algebra.dim - 1:
            raise InvalidStructure(f"need one action matrix per maximal ideal basis vector ({algebra.dim - 1})")
        if validate:
            self.validate()

    def act(self, a) -> np.ndarray:
        """Matrix by which the algebra element a acts."""
        c = self.algebra.coords(a)
        out = (c[0] * np.eye(self.dim, dtype=np.int64)) % self.F.p
        for ci, X in zip(c[1:], self.action):
            out = (out + ci * X) % self.F.p
        return out

    def validate(self) -> None:
        A = self.algebra
        for i, x in enumerate(A.maximal_ideal):
            for j, y in enumerate(A.maximal_ideal):
                lhs = matmul(self.F, self.action[i], self.action[j])
                if not np.array_equal(lhs, self.act(A.multiply(x, y))):
                    raise InvalidStructure(f"action violates x_{i} * x_{j}")


def dual_module(M: FiniteModule) -> FiniteModule:
    """Linear dual with transposed action; for finite length this is the Matlis dual."""
    return FiniteModule(M.algebra, M.dim, [X.T.copy() for X in M.action], validate=False)


def socle_of(A: ArtinianAlgebra) -> np.ndarray:
    """Basis (rows) of the annihilator of the maximal ideal."""
    if A.dim == 1:
        return np.eye(1, dtype=np.int64)
    stacked = np.vstack([A.left_matrix(x) for x in A.maximal_ideal])
    return nullspace(A.F, stacked)


@dataclass
class SocleProblem:
    algebra: ArtinianAlgebra
    module: FiniteModule
    subspace: np.ndarray

    def __post_init__(self):
        A = self.algebra
        V = A.F.array(self.subspace).reshape(-1, A.dim)
        if V.shape[0]:
            R, piv = rref(A.F, V)
            V = R[: len(piv)]
        self.subspace = V
        for v in V:
            for x in A.maximal_ideal:
                if np.any(A.multiply(x, v)):
                    raise InvalidStructure("subspace is not contained in the socle")


@dataclass
class HypothesisCheck:
    holds: bool
    exhaustive: bool
    checked: int
    witness: np.ndarray | None = field(default=None, repr=False)

    def __bool__(self) -> bool:
        return self.holds

    @property
    def mode(self) -> str:
        return "exhaustive" if self.exhaustive else "sampled"


def projective_points(F: GF, v: int):
    """One representative per line of F^v: first nonzero coordinate equal to 1."""
    for lead in range(v):
        for tail in product(range(F.order), repeat=v - lead - 1):
            yield np.array([0] * lead + [1] + list(tail), dtype=np.int64)


def check_socle_hypothesis(S: SocleProblem, samples: int = 200, seed: int = 0) -> HypothesisCheck:
    """dim(D*M) >= dim V for every nonzero D in V."""
    F = S.algebra.F
    V = S.subspace
    v = V.shape[0]
    if v == 0:
        return HypothesisCheck(True, True, 0)
    lines = (F.order**v - 1) // (F.order - 1)
    if lines <= EXHAUSTIVE_LIMIT:
        coeffs = projective_points(F, v)
        exhaustive = True
    else:
        rng = np.random.default_rng(seed)
        basis = list(np.eye(v, dtype=np.int64))
        coeffs = basis + [c for c in F.random(rng, (samples, v)) if np.any(c)]
        exhaustive = False
    checked = 0
    for c in coeffs:
        delta = matmul(F, c[None, :], V)[0]
        checked += 1
        if rank(F, S.module.act(delta)) < v:
            return HypothesisCheck(False, exhaustive, checked, delta)
    return HypothesisCheck(True, exhaustive, checked)


def _image_rank(F: GF, acts, m) -> int:
    return rank(F, np.stack([X @ m % F.p for X in acts], axis=1))


def socle_injection(S: SocleProblem, trials: int = 20, seed: int = 0) -> np.ndarray:
    """An element m of M such that r -> r*m is injective on V.

    Grows the subspace on which m is injective one basis vector at a time;
    when the new socle direction kills m, m is replaced by m + c*m' for an
    m' whose image escapes the current span and a scalar c making the
    relevant minor nonzero.
    """
    if not check_socle_hypothesis(S, seed=seed):
        raise HypothesisViolated("some socle element D in V has dim(D*M) < dim V")
    F, M = S.algebra.F, S.module
    V = S.subspace
    v = V.shape[0]
    if v == 0:
        return np.zeros(M.dim, dtype=np.int64)
    acts = [M.act(delta) for delta in V]
    rng = np.random.default_rng(seed)
    unit_vectors = list(np.eye(M.dim, dtype=np.int64))

    m = next(u for u in unit_vectors if np.any(acts[0] @ u % F.p))
    for k in range(2, v + 1):
        if _image_rank(F, acts[:k], m) == k:
            continue
        images = np.stack([X @ m % F.p for X in acts[:k]], axis=1)
        c = nullspace(F, images)[0]
        killer = sum(ci * X for ci, X in zip(c, acts[:k])) % F.p
        span = images[:, : k - 1]
        base = rank(F, span)

        def escapes(mp) -> bool:
            return rank(F, np.column_stack([span, killer @ mp % F.p])) > base

        scalars = list(range(1, F.order)) if F.order <= 1000 else list(F.random(rng, trials) | 1)
        candidates = [u for u in unit_vectors if escapes(u)]
        candidates += [r for r in F.random(rng, (trials, M.dim)) if escapes(r)]
        found = None
        for mp in candidates:
            for s in scalars:
                trial = (m + s * mp) % F.p
                if _image_rank(F, acts[:k], trial) == k:
                    found = trial
                    break
            if found is not None:
                break
        if found is None and F.order**M.dim <= EXHAUSTIVE_LIMIT:
            log.debug("scalar step failed at k=%d over %s, searching M exhaustively", k, F)
            # small field: the scalar family may have run out, search M directly
            for coeffs in product(range(F.order), repeat=M.dim):
                trial = np.array(coeffs, dtype=np.int64)
                if _image_rank(F, acts[:k], trial) == k:
                    found = trial
                    break
        if found is None:
            raise NoGenericScalar(f"no scalar extends injectivity to dimension {k} over {F}")
        log.debug("extended injectivity to dimension %d", k)
        m = found
    if _image_rank(F, acts, m) != v:
        raise AssertionError("constructed element is not injective on V")
    return m
