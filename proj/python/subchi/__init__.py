"""Exact kernels for submeasures, lattice graph colorings and partial-function complexes.

Rationals are accepted as ``fractions.Fraction``, ``int`` or ``"a/b"`` strings
and returned as ``Fraction``.
"""

from fractions import Fraction
import json

from . import _subchi
from ._subchi import (
    SubchiError,
    InvalidArgument,
    Infeasible,
    ResourceLimit,
    ParseError,
    NotSimplicial,
    build_K,
    build_S,
    choose_prime,
    common_refinement,
    map_s,
    reduced_betti,
    run_cli,
    verify_map_s,
)

__all__ = [
    "SubchiError", "InvalidArgument", "Infeasible", "ResourceLimit", "ParseError", "NotSimplicial",
    "uniform", "capped", "weighted", "evaluate", "verify_axioms", "covering_number", "common_refinement",
    "chromatic_numbers", "build_K", "build_S", "barycentric", "map_s", "verify_map_s", "reduced_betti",
    "constant_C_cubed", "k_eps", "F_eps", "choose_prime", "theorem_check", "run_cli",
]


def _q(x):
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use Fraction or 'a/b'")
    return str(Fraction(x))


def _spec(mu):
    return mu if isinstance(mu, str) else json.dumps(mu)


def uniform(atoms, weight):
    return {"atoms": atoms, "kind": "uniform", "weight": _q(weight)}


def weighted(weights):
    return {"atoms": len(weights), "kind": "weighted", "weights": [_q(w) for w in weights]}


def capped(cap, weights):
    return {"atoms": len(weights), "kind": "capped", "cap": _q(cap), "weights": [_q(w) for w in weights]}


def evaluate(mu, atoms):
    return Fraction(_subchi.evaluate(_spec(mu), list(atoms)))


def verify_axioms(mu, samples=200000, seed=1):
    return _subchi.verify_axioms(_spec(mu), samples, seed)


def covering_number(mu, delta):
    return _subchi.covering_number(_spec(mu), _q(delta))


def chromatic_numbers(mu, partition, eps, box=None, quotient=None, node_limit=20_000_000):
    return _subchi.chromatic_numbers(_spec(mu), partition, _q(eps), box, quotient, node_limit)


def barycentric(text, p=None):
    return _subchi.barycentric(text, p)


def constant_C_cubed(mu_x, eps):
    return Fraction(_subchi.constant_C_cubed(_q(mu_x), _q(eps)))


def k_eps(mu, eps, d):
    return _subchi.k_eps(_spec(mu), _q(eps), d)


def F_eps(mu, eps, m):
    return _subchi.F_eps(_spec(mu), _q(eps), _q(m))


def theorem_check(family, resolution, eps, n, modulus=5, box=3, cap=1):
    return json.loads(_subchi.theorem_check(family, resolution, _q(eps), n, modulus, box, _q(cap)))
