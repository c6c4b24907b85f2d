"""JSON file format for socle problems.

    {
      "field": 3,
      "algebra": {
        "dim": 3,
        "mult": [[[...D numbers...] x D] x D],
        "maximal_ideal": [[...D numbers...] x (D-1)]      (optional)
      },
      "module": {"dim": 2, "action": [[[...]...] x (D-1)]},
      "socle_subspace": [[...D numbers...], ...]
    }

``mult[i][j][k]`` is the coefficient of e_k in e_i * e_j.  Without
``maximal_ideal`` the algebra basis must have e_0 as unit and
e_1, ..., e_{D-1} spanning the maximal ideal.  ``action[r]`` is the
matrix (rows = output coordinates) of the r-th maximal-ideal basis
vector on the module.  All entries are integers reduced mod ``field``.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..errors import InvalidStructure
from .socle import ArtinianAlgebra, FiniteModule, SocleProblem


def problem_from_dict(doc: dict, validate: bool = True) -> SocleProblem:
    try:
        p = int(doc["field"])
        alg, mod = doc["algebra"], doc["module"]
        D = int(alg["dim"])
        mult = np.asarray(alg["mult"], dtype=np.int64)
        if mult.shape != (D, D, D):
            raise InvalidStructure(f"algebra.mult has shape {mult.shape}, expected {(D, D, D)}")
        A = ArtinianAlgebra(p, mult, alg.get("maximal_ideal"), validate=validate)
        Mdim = int(mod["dim"])
        M = FiniteModule(A, Mdim, [np.asarray(X, dtype=np.int64) for X in mod["action"]], validate=validate)
        V = np.asarray(doc.get("socle_subspace", []), dtype=np.int64).reshape(-1, D)
    except KeyError as exc:
        raise InvalidStructure(f"missing field {exc.args[0]!r}") from None
    return SocleProblem(A, M, V)


def problem_to_dict(S: SocleProblem) -> dict:
    A, M = S.algebra, S.module
    return {
        "field": A.p,
        "algebra": {
            "dim": A.dim,
            "mult": A.mult.tolist(),
            "maximal_ideal": A.maximal_ideal.tolist(),
        },
        "module": {"dim": M.dim, "action": [X.tolist() for X in M.action]},
        "socle_subspace": S.subspace.tolist(),
    }


def load_problem(path: str | Path, validate: bool = True) -> SocleProblem:
    with open(path) as fh:
        return problem_from_dict(json.load(fh), validate)


def dump_problem(S: SocleProblem, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(problem_to_dict(S), fh)
