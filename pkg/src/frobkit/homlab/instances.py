"""Seeded random Artinian algebras, modules and socle problems over F_p.

Algebras are monomial quotients k[x_1..x_d]/J, disguised by a random
change of basis; modules are direct sums of cyclic quotients A/J' and
Matlis duals of such, again in random coordinates.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from ..staircase import minimalize, standard_monomials
from .field import GF, inverse, matmul, rank
from .socle import ArtinianAlgebra, FiniteModule, SocleProblem, dual_module, socle_of


def random_order_ideal(rng: np.random.Generator, max_dim: int) -> list[tuple[int, ...]]:
    """Standard monomials of a random zero-dimensional monomial ideal, at most max_dim of them."""
    if rng.random() < 0.4:
        # k[x_1..x_d]/m^t: socle is all of degree t-1
        while True:
            d, t = int(rng.integers(1, 6)), int(rng.integers(2, 4))
            std = [m for m in product(range(t), repeat=d) if sum(m) < t]
            if len(std) <= max_dim:
                return sorted(std, key=lambda m: (sum(m), m))
    while True:
        d = int(rng.integers(1, 4))
        gens = [tuple(int(rng.integers(1, 4)) * (k == j) for k in range(d)) for j in range(d)]
        gens += [tuple(int(c) for c in rng.integers(0, 3, d)) for _ in range(int(rng.integers(0, 4)))]
        gens = [g for g in gens if any(g)]
        std = standard_monomials(minimalize(gens, d))
        if 1 <= len(std) <= max_dim:
            return sorted(std, key=lambda m: (sum(m), m))


def _shift_action(std, target_std, a) -> np.ndarray:
    """Multiplication by the monomial a on the span of target_std (a quotient of std)."""
    index = {m: i for i, m in enumerate(target_std)}
    X = np.zeros((len(target_std), len(target_std)), dtype=np.int64)
    for i, b in enumerate(target_std):
        c = tuple(x + y for x, y in zip(a, b))
        if c in index:
            X[index[c], i] = 1
    return X


def monomial_algebra(p: int, std) -> ArtinianAlgebra:
    index = {m: i for i, m in enumerate(std)}
    D = len(std)
    T = np.zeros((D, D, D), dtype=np.int64)
    for i, a in enumerate(std):
        for j, b in enumerate(std):
            c = tuple(x + y for x, y in zip(a, b))
            if c in index:
                T[i, j, index[c]] = 1
    return ArtinianAlgebra(p, T)


def _random_invertible(F: GF, rng, n: int) -> np.ndarray:
    while True:
        G = F.random(rng, (n, n))
        try:
            inverse(F, G)
            return G
        except ZeroDivisionError:
            continue


def _block_diag(blocks):
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=np.int64)
    i = 0
    for b in blocks:
        out[i : i + b.shape[0], i : i + b.shape[0]] = b
        i += b.shape[0]
    return out


def random_socle_problem(p: int, seed: int, max_dim: int = 6, disguise: bool = True) -> SocleProblem:
    rng = np.random.default_rng([p, seed])
    F = GF(p)
    std = random_order_ideal(rng, max_dim)
    D = len(std)
    mono = std[1:]
    members = set(std)
    s = sum(1 for m in std if all(tuple(c + (k == j) for k, c in enumerate(m)) not in members
                                  for j in range(len(m))))
    v = s if rng.random() < 0.5 else int(rng.integers(1, s + 1))

    # module summands: cyclic quotients A/J' (J' generated by J plus a few monomials), or their duals
    summands, mdim = [], 0
    for _ in range(int(rng.integers(v, v + 3))):
        extra = [m for m in mono if rng.random() < 0.15]
        quotient = [m for m in std if not any(all(x <= y for x, y in zip(g, m)) for g in extra)]
        mdim += len(quotient)
        actions = [_shift_action(std, quotient, a) for a in mono]
        if rng.random() < 0.3:
            actions = [X.T.copy() for X in actions]
        summands.append(actions)
    action = [_block_diag([s[r] for s in summands]) for r in range(D - 1)]
    mult = monomial_algebra(p, std).mult
    mideal = np.eye(D, dtype=np.int64)[1:]

    if disguise and D > 1:
        G = _random_invertible(F, rng, D)
        Ginv = inverse(F, G)
        mult = np.einsum("ia,jb,abk->ijk", G, G, mult) % p
        mult = np.stack([matmul(F, mult[i], Ginv) for i in range(D)])
        H = _random_invertible(F, rng, D - 1)
        mideal = matmul(F, H, Ginv[1:])
        action = [sum(int(H[s, r]) * action[r] for r in range(D - 1)) % p for s in range(D - 1)]
        P = _random_invertible(F, rng, mdim)
        Pinv = inverse(F, P)
        action = [matmul(F, matmul(F, P, X), Pinv) for X in action]

    A = ArtinianAlgebra(p, mult, mideal)
    M = FiniteModule(A, mdim, action)
    soc = socle_of(A)
    while True:
        C = F.random(rng, (v, s))
        if rank(F, C) == v:
            break
    V = matmul(F, C, soc)
    return SocleProblem(A, M, V)


def random_module(p: int, seed: int, max_dim: int = 6) -> FiniteModule:
    M = random_socle_problem(p, seed, max_dim).module
    return dual_module(M) if seed % 2 else M
