"""Deterministic fuzz harness over identities, equivariance and round trips."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import classify, construct, gauss, generators
from . import invariants as inv
from .algebra import gl_act, trace_form
from .cubics import eisenstein_check
from .serialize import to_json


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 42
    count: int = 10_000
    coeff_bound: int = 20
    workers: int = 1


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)


class CheckFailed(Exception):
    pass


def _check(cond: bool, detail: str) -> None:
    if not cond:
        raise CheckFailed(detail)


# suites: (name, fraction of count, case function)


def case_identities(rng, cfg, rec):
    m = rec["algebra"] = generators.random_int_algebra(rng, cfg.coeff_bound)
    ints, _ = inv._integral(m)
    disc, p3, p2 = inv._disc_q_poly(*ints), inv._p3t_poly(*ints), inv._p2t_poly(*ints)
    invv, dd = inv._inv_poly(*ints), inv._disc_d_poly(*ints)
    _check(27 * disc * p3 * p3 + 4 * p2**3 == -inv.EISENSTEIN_CONSTANT * invv * invv, "twisted Eisenstein")
    _check(27 * dd == p3 - p2 - disc, "Disc(D) identity")
    _check(disc == inv._disc_q_cov(*ints), "Disc(Q) routes")
    _check(p3 == inv._p3t_cov(*ints), "p3~ routes")
    _check(p2 == inv._p2t_cov(*ints), "p2~ routes")
    _check(54 * invv == inv._g_at_trace(*ints), "Inv routes")


def case_classical_eisenstein(rng, cfg, rec):
    q = rec["cubic"] = generators.random_cubic(rng, cfg.coeff_bound)
    v = rec["point"] = (generators.small_rat(rng), generators.small_rat(rng))
    _check(eisenstein_check(q, v), "classical Eisenstein")


def case_equivariance(rng, cfg, rec):
    m = rec["algebra"] = gl_act(generators.random_gl(rng), generators.random_algebra_any_stratum(rng, cfg.coeff_bound))
    g = rec["g"] = generators.random_gl(rng)
    n = gl_act(g, m)
    det = g.det()
    for fn in (inv.disc_q, inv.p2_tilde, inv.p3_tilde, inv.disc_d, inv.inv_m):
        _check(fn(n) == fn(m).transformed(det), f"{fn.__name__} weight law")
    _check(classify.classify_gl(n) == classify.classify_gl(m), "classify_gl invariance")
    if inv.is_generic(m):
        s = rec["s"] = generators.random_sl(rng)
        _check(classify.classify_sl(gl_act(s, m)) == classify.classify_sl(m), "classify_sl invariance")


def case_constructors(rng, cfg, rec):
    kind = rng.randrange(4)
    if kind == 0:
        rec["moduli"] = generators.random_offcardano(rng)
        construct.from_moduli_generic(*rec["moduli"])
        return
    if kind == 1:
        rec["cardano"] = generators.random_cardano(rng)
        rec["ext"] = rng.choice(generators.EXT_CLASSES)
        construct.from_moduli_cardano(*rec["cardano"], rec["ext"])
        return
    if kind == 2:
        rec["cubic"] = generators.random_exceptional_cubic(rng)
        m = construct.from_cubic_exceptional(*rec["cubic"])
        t = trace_form(m)
        _check(t.t1 == t.t2 == 0, "exceptional trace")
        return
    m = rec["algebra"] = generators.random_algebra_any_stratum(rng, cfg.coeff_bound)
    pt = construct.eisenstein_point(m)
    if pt.A == pt.B == pt.C == pt.D == 0:
        return
    construct.from_eisenstein(pt)


def case_assoc_division(rng, cfg, rec):
    m = rec["algebra"] = gl_act(generators.random_gl(rng), generators.algebra_of_kind(
        rng, rng.choice(("int", "offcardano", "cardano", "exceptional")), cfg.coeff_bound))
    if inv.is_generic(m):
        classify.is_associative(m)
        classify.is_division(m)


def case_idemvalues(rng, cfg, rec):
    d1 = generators.small_rat(rng)
    if rng.random() < 0.5:
        while True:
            d2 = generators.small_rat(rng)
            d3 = -d1 - d2
            if len({d1, d2, d3}) == 3:
                break
        m = construct.from_triple_data(d1, d2, d3)
    else:
        while True:
            norm = generators.small_rat(rng)
            if d1 * d1 - 4 * norm != 0 and norm != -2 * d1 * d1:
                break
        m = construct.from_triple_data(d1, (-d1, norm))
    m = rec["algebra"] = gl_act(generators.random_gl(rng), m)
    _check(classify.idemvalue_moduli(m) == inv.moduli(m), "idemvalue moduli")


def case_gauss(rng, cfg, rec):
    delta = rec["delta"] = rng.choice((-4, -3, 5, -8))
    forms = rec["forms"] = []
    for _ in range(3):
        alpha = generators.small_rat(rng, nonzero=True)
        beta = generators.small_rat(rng)
        forms.append(gauss.BinaryQuadratic(alpha, 2 * beta, (4 * beta * beta - delta) / (4 * alpha)))
    ms = [gauss.quadratic_to_algebra(q.compose(gauss.shear(gauss.common_shear(q)).rows)) for q in forms]
    cls = [gauss.algebra_class(m) for m in ms]
    ab = gauss.compose_algebra_classes(ms[0], ms[1])
    _check(gauss.algebra_class(ab) == cls[0] * cls[1], "composition law")
    _check(inv.disc_d(ab).value == delta, "Disc(D) preserved")
    g1, g2 = generators.random_sl(rng), generators.random_sl(rng)
    moved = gauss.slxsl_act(g1, g2, ms[2])
    _check(inv.disc_d(moved) == inv.disc_d(ms[2]), "Disc(D) SLxSL invariance")
    _check(gauss.slxsl_equivalent(moved, ms[2]), "SLxSL class invariance")


SUITES = (
    ("identities", 1.0, case_identities),
    ("classical_eisenstein", 0.2, case_classical_eisenstein),
    ("equivariance", 0.1, case_equivariance),
    ("constructors", 0.1, case_constructors),
    ("assoc_division", 0.2, case_assoc_division),
    ("idemvalues", 0.05, case_idemvalues),
    ("gauss", 0.1, case_gauss),
)


def _run_shard(args):
    cfg, shard, count = args
    rng = random.Random(cfg.seed ^ shard)
    results = []
    for name, frac, case in SUITES:
        res = SuiteResult(name)
        for i in range(max(1, round(count * frac))):
            res.cases += 1
            rec = {}
            try:
                case(rng, cfg, rec)
            except Exception as exc:  # any exception is a reportable failure
                res.failures.append(
                    {
                        "suite": name,
                        "shard": shard,
                        "index": i,
                        "error": f"{type(exc).__name__}: {exc}",
                        "reproducer": to_json(rec),
                    }
                )
        results.append(res)
    return results


def _split(count: int, workers: int) -> list[int]:
    base, extra = divmod(count, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def run_verify(cfg: VerifyConfig) -> dict:
    if cfg.count < 1:
        raise ValueError("count must be at least 1")
    jobs = [(cfg, shard, n) for shard, n in enumerate(_split(cfg.count, max(1, cfg.workers))) if n]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            shards = list(pool.map(_run_shard, jobs))
    else:
        shards = [_run_shard(j) for j in jobs]
    suites = {}
    failures = []
    for shard in shards:
        for res in shard:
            entry = suites.setdefault(res.name, {"cases": 0, "failures": 0})
            entry["cases"] += res.cases
            entry["failures"] += len(res.failures)
            failures.extend(res.failures)
    return {
        "seed": cfg.seed,
        "count": cfg.count,
        "coeff_bound": cfg.coeff_bound,
        "workers": cfg.workers,
        "suites": suites,
        "total_failures": len(failures),
        "failures": failures,
    }

