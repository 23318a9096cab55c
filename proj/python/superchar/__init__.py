"""Super duality characters, KL coefficients and u_- homology."""

import json

from . import _superchar

__version__ = _superchar.__version__


def _w(weight):
    return weight if isinstance(weight, str) else json.dumps(weight)


def theta(parts):
    return {int(k): v for k, v in json.loads(_superchar.theta(list(parts))).items()}


def parametrizations(weight):
    return json.loads(_superchar.parametrizations(_w(weight)))


def reflect_trace(weight, n, chain="c"):
    return json.loads(_superchar.reflect_trace(_w(weight), chain, n))


def closed_form(weight, k):
    return json.loads(_superchar.closed_form(_w(weight), k))


def character(weight, type="irr", algebra="g", window=(0, 0, 2), rank=0, m=1, n=0):
    return json.loads(_superchar.character(type, algebra, _w(weight), list(window), rank, m, n))


def kl_table(weight, rank):
    return json.loads(_superchar.kl_table(_w(weight), rank))


def a_coefficient(mu, la, rank):
    return json.loads(_superchar.a_coefficient(_w(mu), _w(la), rank))


def homology(weight, rank, depth, degree=2):
    return json.loads(_superchar.homology(_w(weight), rank, depth, degree))


def vogan_check(la, mu, n, rank):
    return _superchar.vogan_check(_w(la), _w(mu), n, rank)


def verify(suite="all", seed=7):
    return json.loads(_superchar.verify(suite, seed))


def hook_schur(eta, p, q):
    return [(tuple(t["exponents"]), t["coeff"]) for t in json.loads(_superchar.hook_schur(list(eta), p, q))]
