"""Verification suites behind `atlas verify`.

Every check yields a dict {name, anchor, pass, ...}; a suite report is the
envelope {suite, anchors, pass, witnesses, checks}, where witnesses collects
the details of failed checks.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial

from ..components import lifts
from ..components.jordan_rank import UnstableSample, rank_profile_partition
from ..components.membership import membership_verify, symbolic_param
from ..components.zmap import trace_checks
from ..forests.jordan import jordan_partition
from ..forests.weights import finals_of
from ..matrices import sylvester_resultant_check, trace_law
from .cache import load_components

SUITES = ("membership", "jordan", "identity28", "lifts", "resultant")

ANCHORS = {
    "membership": "D(m, 0..i-1) vanish identically on lambda_*(F, w), m = i + j",
    "jordan": "Jordan partition of M(m) at a generic point of the component equals s(F)",
    "identity28": "sum_k c_ijk mu_ijk = binom(i-1, i-j) i!",
    "root_elimination": "root elimination doubles degrees for j = 1, preserves them for j = 2, keeps multiplicities",
    "nu_identity": "D(m+1, i)(nu(lam, b)) = sum_g (-1)^(m-i-g) H_{ig,1}(lam) b0^g b1^(m-i-g), up to sign",
    "nu_specialization": "M(m+1)(nu(lam, (t, -1))) is the n = 1 Carlitz matrix of lam",
    "even_factorization": "Ch M(2m) on a_odd = 0 is U^m Ch M(m) of the even coordinates, up to sign",
    "even_rank": "rank M(m)^k = rank M(2m)^(k+1) on the interleaved point",
    "odd_charpoly": "D_odd(alpha, .) agrees with the Carlitz-matrix expansion, up to sign",
    "odd_h": "H_{ij,1} of the odd block matrix match the D_odd coefficients, up to sign",
    "odd_h0": "sum_j H_{0j,1} t^j = D(alpha, 0) sum_j b_j (-t)^j, up to sign",
    "carlitz_blocks": "M(b, 1, alpha) = B t - A",
    "resultant": "det M(m) = Res(P_[1], P_[0]) by an independent Sylvester matrix, up to sign",
    "trace_law": "D(m, m-2) = a_1 + ... + a_(m-1), up to sign",
}


def _check(name: str, ok: bool, **info) -> dict:
    return {"name": name, "anchor": ANCHORS[name.split(":")[0]], "pass": bool(ok), **info}


def _records(i_max: int, use_cache: bool):
    for i in range(1, i_max + 1):
        for j in range(1, i + 1):
            yield i, j, load_components(i, j, use_cache)


def membership_checks(i_max: int, use_cache: bool = True, seed: int = 0, records=None) -> list[dict]:
    out = []
    source = records if records is not None else (r for _, _, rs in _records(i_max, use_cache) for r in rs)
    for r in source:
        res = membership_verify(r.forest, r.weight, seed=seed)
        info = {"label": r.label, "m": res.m, "method": res.method}
        if not res.ok:
            info["counterexample"] = {
                "forest": r.forest.bracket(),
                "weight": list(finals_of(r.forest, r.weight)),
                "m": res.m,
                "lambda": [str(x) for x in symbolic_param(r.forest, r.weight)],
                **(res.witness or {}),
            }
        out.append(_check("membership", res.ok, **info))
    return out


def jordan_checks(i_max: int, use_cache: bool = True, seed: int = 0, samples: int = 2,
                  records=None) -> list[dict]:
    out = []
    source = records if records is not None else (r for _, _, rs in _records(i_max, use_cache) for r in rs)
    for r in source:
        want = jordan_partition(r.forest)
        try:
            got = rank_profile_partition(r.forest, r.weight, samples=samples,
                                         seed=seed + 10000 * r.i + 100 * r.j + r.k)
        except UnstableSample as exc:
            out.append(_check("jordan", False, label=r.label, error=str(exc)))
            continue
        out.append(_check("jordan", got == want, label=r.label, expected=str(want), got=str(got)))
    return out


def identity28_checks(i_max: int, use_cache: bool = True, **_) -> list[dict]:
    out = []
    for i, j, recs in _records(i_max, use_cache):
        total = sum(r.c * r.mu for r in recs)
        want = comb(i - 1, i - j) * factorial(i)
        out.append(_check("identity28", total == want, i=i, j=j, sum=total, expected=want))
    for i in range(1, i_max):
        res = trace_checks(i)
        out.append(_check("root_elimination", res["ok"], i=i, sources=res["sources"],
                          failures=[list(map(str, f)) for f in res["failures"]]))
    return out


def lifts_checks(i_max: int = 0, seed: int = 0, **_) -> list[dict]:
    out = []
    for m in range(2, 7):
        for i in range(0, 3):
            ok, sign = lifts.nu_identity(m, i)
            out.append(_check(f"nu_identity:m={m},i={i}", ok, sign=sign))
    for m in range(2, 8):
        out.append(_check(f"nu_specialization:m={m}", lifts.nu_specialization(m)))
    for m in range(4, 11, 2):
        ok, sign = lifts.even_factorization(m)
        out.append(_check(f"even_factorization:m={m}", ok, sign=sign))
    rng = random.Random(seed)
    for m in range(2, 7):
        for _ in range(2):
            a = [Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(m + 1)]
            out.append(_check(f"even_rank:m={m}", lifts.even_rank_identity(a)))
    for alpha in range(2, 5):
        ok, sign = lifts.odd_charpoly_identity(alpha)
        out.append(_check(f"odd_charpoly:alpha={alpha}", ok, sign=sign))
    for alpha in range(2, 4):
        res = lifts.odd_h_identity(alpha)
        out.append(_check(f"odd_h:alpha={alpha}", res["ok"], signs=res.get("signs")))
    for alpha in range(2, 6):
        ok, sign = lifts.h0_identity(alpha)
        out.append(_check(f"odd_h0:alpha={alpha}", ok, sign=sign))
        out.append(_check(f"carlitz_blocks:alpha={alpha}", lifts.carlitz_blocks_identity(alpha)))
    return out


def resultant_checks(i_max: int = 0, **_) -> list[dict]:
    out = []
    for m in range(3, 9):
        ok, sign = sylvester_resultant_check(m)
        out.append(_check(f"resultant:m={m}", ok, sign=sign))
    for m in range(3, 11):
        ok, sign = trace_law(m)
        out.append(_check(f"trace_law:m={m}", ok, sign=sign))
    return out


_RUNNERS = {
    "membership": membership_checks,
    "jordan": jordan_checks,
    "identity28": identity28_checks,
    "lifts": lifts_checks,
    "resultant": resultant_checks,
}


def run_suite(suite: str, i_max: int = 5, seed: int = 0, use_cache: bool = True) -> dict:
    names = SUITES if suite == "all" else (suite,)
    if any(n not in _RUNNERS for n in names):
        raise ValueError(f"unknown suite {suite!r}")
    checks = []
    for n in names:
        if n in ("lifts", "resultant"):
            part = _RUNNERS[n](i_max, seed=seed)
        else:
            part = _RUNNERS[n](i_max, use_cache=use_cache, seed=seed)
        for c in part:
            c["suite"] = n
        checks.extend(part)
    anchors = sorted({c["anchor"] for c in checks})
    witnesses = [c for c in checks if not c["pass"]]
    return {
        "suite": suite,
        "i_max": i_max,
        "seed": seed,
        "anchors": anchors,
        "pass": not witnesses,
        "witnesses": witnesses,
        "summary": {n: sum(1 for c in checks if c["suite"] == n) for n in names},
        "checks": checks,
    }
