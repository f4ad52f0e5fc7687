"""Davenport constants and Noether numbers of small finite groups.

Every function returns plain Python data decoded from the JSON the C++ core
produces. Group specs look like "Z6", "Z2xZ4" or "SD(3,2,2)".
"""

import json

from . import _zsl
from ._zsl import CapacityError, VerificationFailure, ZslError

schema_version = _zsl.schema_version

__all__ = [
    "CapacityError",
    "VerificationFailure",
    "ZslError",
    "beta",
    "crosscheck",
    "davenport",
    "dk_table",
    "eta",
    "linearity",
    "product_bound",
    "ring_beta",
    "sigma_az2",
    "sigma_zpzd",
    "support_lemma",
    "verify_all",
]


def davenport(group, k=1, budget_seconds=600.0):
    return json.loads(_zsl.davenport(group, k, budget_seconds))


def dk_table(group, k_upto=4, budget_seconds=600.0):
    return json.loads(_zsl.dk_table(group, k_upto, budget_seconds))


def eta(group, budget_seconds=600.0):
    return _zsl.eta(group, budget_seconds)


def linearity(group, k_upto=4, budget_seconds=600.0):
    return json.loads(_zsl.linearity(group, k_upto, budget_seconds))


def support_lemma(p, support):
    return json.loads(_zsl.support_lemma(p, list(support)))


def product_bound(g, h, r=1, s=1):
    return json.loads(_zsl.product_bound(g, h, r, s))


def beta(rep, k=1, budget_seconds=600.0):
    return json.loads(_zsl.beta(rep, k, budget_seconds))


def crosscheck(group, k=1):
    return json.loads(_zsl.crosscheck(group, k))


def sigma_zpzd(group):
    return json.loads(_zsl.sigma_zpzd(group))


def sigma_az2(n, e):
    return json.loads(_zsl.sigma_az2(n, e))


def ring_beta(gens, rels="", k=1, cutoff=30):
    return json.loads(_zsl.ring_beta(gens, rels, k, cutoff))


def verify_all(groups=(), inject_fault="", timings=False):
    return json.loads(_zsl.verify_all(list(groups), inject_fault, timings))
