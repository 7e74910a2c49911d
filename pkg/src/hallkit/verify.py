"""Verification suites: every symbolic formula against the brute-force oracle.

Four suites, bundled so CI can run one command:

* ``formulas``   -- Hom/Aut closed forms against morphism enumeration,
                    plus the factored-order anchor values.
* ``roundtrip``  -- the object/tableau bijection both ways and the
                    realization of tableaux as concrete embeddings.
* ``theorem2``   -- functor/tableau identities on seeded random
                    embeddings (reductions, approximations, adjointness,
                    symbol-multiplicity equality).
* ``hall``       -- exhaustive Hall-polynomial verification: evaluation
                    at q = p equals subgroup counts, per-tableau counts
                    match, (alpha, gamma)-symmetry, degrees and monicity.

Each check is a named pass/fail with a short detail string; suites are
deterministic given their seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import embeddings as emb
from . import oracle
from .caps import general_cap
from .errors import CapExceeded
from .hall import expected_degree, hall_polynomial
from .partitions import partitions_of
from .qforms import QOrderFactored, evaluate, gl_order
from .s2cat import (
    Bipicket,
    Picket,
    S2Object,
    aut_order,
    bipicket,
    end_power,
    enumerate_indecomposables,
    enumerate_objects,
    hom_len_indec,
    hom_len_obj,
    hom_len_tableau,
    object_of_tableau,
    tableau_of_object,
)
from .tableaux import enumerate_klein_entries2, restrict

SUITES = ("formulas", "roundtrip", "theorem2", "hall")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(Check(name, bool(passed), detail))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 3),
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def _object_embedding(obj: S2Object, p: int) -> emb.Embedding:
    E = emb.empty_embedding(p)
    for x, k in obj.summands:
        piece = (
            emb.bipicket_embedding(p, x.m, x.r)
            if isinstance(x, Bipicket)
            else emb.picket_embedding(p, x.ell, x.m)
        )
        for _ in range(k):
            E = emb.direct_sum(E, piece)
    return E


def _hom_space_size(E: emb.Embedding, F: emb.Embedding) -> int:
    return F.p ** sum(min(b, b2) for b in E.beta for b2 in F.beta)


def suite_formulas(
    prime: int = 2, cap: int | None = None, brute_budget: int = 1 << 14
) -> SuiteReport:
    """brute_budget bounds the hom-space size of the per-object brute-force
    sweeps; anchors and closed-form checks are always run in full."""
    rep = SuiteReport("formulas")
    start = time.monotonic()
    p = prime
    budget = min(brute_budget, general_cap(cap))

    counts = [oracle.aut_count_module(p, (1,) * m, cap) for m in range(4)]
    want = [evaluate(gl_order(m), p) for m in range(4)]
    rep.add("gl-order-vs-brute", counts == want, f"{counts} vs {want}")

    anchors = [
        (S2Object.of(Bipicket(4, 2)), QOrderFactored.from_parts(8, {1: 1})),
        (
            S2Object.of(Picket(1, 4), Picket(0, 3), Picket(0, 2)),
            QOrderFactored.from_parts(20, {1: 3}),
        ),
        (
            S2Object.of(Bipicket(4, 2), Picket(1, 3)),
            QOrderFactored.from_parts(20, {1: 2}),
        ),
    ]
    ok = all(aut_order(obj) == want for obj, want in anchors)
    rep.add("aut-order-anchors", ok, "; ".join(str(aut_order(o)) for o, _ in anchors))

    T42 = emb.bipicket_embedding(p, 4, 2)
    T31 = emb.bipicket_embedding(p, 3, 1)
    rep.add(
        "end-aut-brute-anchors",
        oracle.hom_count(T42, T42, cap) == p**9
        and oracle.aut_count(T31, cap) == (p - 1) * p**4,
        f"End(T(4,2))={oracle.hom_count(T42, T42, cap)}, Aut(T(3,1))={oracle.aut_count(T31, cap)}",
    )

    indecs = enumerate_indecomposables(6)
    bad = 0
    for x in indecs:
        for y in indecs:
            Ex, Ey = _object_embedding(S2Object.of(x), p), _object_embedding(S2Object.of(y), p)
            if _hom_space_size(Ex, Ey) > general_cap(cap):
                continue
            if p ** hom_len_indec(x, y) != oracle.hom_count(Ex, Ey, cap):
                bad += 1
    rep.add("hom-lengths-vs-brute", bad == 0, f"{len(indecs)}^2 indec pairs, {bad} bad")

    bad = 0
    symbolic_bad = 0
    checked = 0
    for obj in enumerate_objects(8):
        tab = tableau_of_object(obj)
        for y in enumerate_indecomposables(6):
            if hom_len_tableau(tab, y) != hom_len_obj(obj, y):
                symbolic_bad += 1
        E = _object_embedding(obj, p)
        if _hom_space_size(E, E) > budget:
            continue
        checked += 1
        if evaluate(aut_order(obj), p) != oracle.aut_count(E, cap):
            bad += 1
        if p ** end_power(obj) != oracle.hom_count(E, E, cap):
            bad += 1
    rep.add("tableau-hom-lengths-agree", symbolic_bad == 0, f"{symbolic_bad} mismatches")
    rep.add("aut-end-orders-vs-brute", bad == 0, f"{checked} objects under budget, {bad} bad")

    ok = all(
        hom_len_tableau(tableau_of_object(S2Object.of(Bipicket(m, r))), Bipicket(m, r))
        == m + 3 * r - 1
        for m in range(3, 9)
        for r in range(1, m - 1)
        if r <= m - 2
    )
    rep.add("bipicket-end-length-closed-form", ok)

    orbit_ok = all(
        oracle.orbit_check(E, cap)
        for E in (
            T42,
            emb.picket_embedding(p, 2, 3),
            emb.direct_sum(emb.picket_embedding(p, 1, 2), emb.picket_embedding(p, 0, 1)),
        )
    )
    rep.add("orbit-formula", orbit_ok)

    rep.elapsed = time.monotonic() - start
    return rep


def suite_roundtrip(
    max_beta: int = 10, realize_max: int = 8, primes=(2, 3), cap: int | None = None
) -> SuiteReport:
    rep = SuiteReport("roundtrip")
    start = time.monotonic()

    bad = total = 0
    for n in range(max_beta + 1):
        for beta in partitions_of(n):
            for tab in enumerate_klein_entries2(beta):
                total += 1
                if tableau_of_object(object_of_tableau(tab)) != tab:
                    bad += 1
    rep.add("tableau-object-tableau", bad == 0, f"{total} tableaux, {bad} bad")

    objs = enumerate_objects(max_beta)
    bad = sum(1 for obj in objs if object_of_tableau(tableau_of_object(obj)) != obj)
    rep.add("object-tableau-object", bad == 0, f"{len(objs)} objects, {bad} bad")

    bad = total = 0
    for p in primes:
        for n in range(realize_max + 1):
            for beta in partitions_of(n):
                for tab in enumerate_klein_entries2(beta):
                    total += 1
                    if emb.klein_tableau(emb.realize(tab, p, cap)) != tab:
                        bad += 1
    rep.add("realization-fidelity", bad == 0, f"{total} realizations, {bad} bad")

    rep.elapsed = time.monotonic() - start
    return rep


def _embedding_battery(E: emb.Embedding, rng: random.Random, cap: int | None) -> list[str]:
    """All functor/tableau identities for one embedding; returns failures."""
    failures = []
    amb = E.ambient
    tab = emb.klein_tableau(E)
    e = E.exponent

    for s in range(e + 1):
        if emb.klein_tableau(emb.reduce(E, s)) != restrict(tab, e, e - s):
            failures.append(f"reduce tableau s={s}")
    for ell in range(e + 1):
        if emb.klein_tableau(emb.truncate(E, ell, cap)) != restrict(tab, ell, ell):
            failures.append(f"approximation tableau ell={ell}")

    up, down = emb.lift(E), emb.reduce(E)
    if emb.lift(emb.reduce(up)).subgroup != up.subgroup:
        failures.append("up-down-up")
    if emb.reduce(emb.lift(down)).subgroup != down.subgroup:
        failures.append("down-up-down")
    radical, socle = amb.p_power_set(1), frozenset(amb.killed_by(1))
    if (emb.reduce(up).subgroup == E.subgroup) != (E.subgroup <= radical):
        failures.append("up-down fixed-point criterion")
    if (emb.lift(down).subgroup == E.subgroup) != (socle <= E.subgroup):
        failures.append("down-up fixed-point criterion")

    m = rng.randrange(1, 4)
    F = emb.picket_embedding(E.p, rng.randrange(0, min(2, m) + 1), m)
    s = rng.randrange(0, 3)
    try:
        if not oracle.adjointness_check(E, F, s, cap):
            failures.append(f"adjointness s={s} F={F.beta}")
    except CapExceeded:
        pass

    n = amb.beta[0] if amb.beta else 0
    for ell in range(2, e + 1):
        obj = object_of_tableau(emb.klein_tableau(emb.subfactor(E, ell, 2, cap)))
        for row in range(1, n + 1):
            for r in range(1, row):
                if tab.count_symbols(ell, rows={row}, subs={r}) != obj.multiplicity(
                    bipicket(row, r)
                ):
                    failures.append(f"symbol multiplicity ell={ell} row={row} r={r}")
        # entry counts also match picket multiplicities one level down
        obj1 = object_of_tableau(emb.klein_tableau(emb.subfactor(E, ell, 1, cap)))
        for row in range(1, n + 1):
            boxes = tab.count_symbols(ell, rows={row})
            if boxes != obj1.multiplicity(Picket(1, row)):
                failures.append(f"box count ell={ell} row={row}")
    return failures


def suite_theorem2(
    count: int = 500, seed: int = 20260808, primes=(2, 3), max_size: int = 8,
    cap: int | None = None,
) -> SuiteReport:
    rep = SuiteReport("theorem2")
    start = time.monotonic()
    rng = random.Random(seed)
    betas = {
        p: [b for n in range(1, max_size + 1) for b in partitions_of(n)] for p in primes
    }
    failures: list[str] = []
    for i in range(count):
        p = primes[i % len(primes)]
        beta = betas[p][rng.randrange(len(betas[p]))]
        E = emb.random_embedding(p, beta, rng.randrange(1, 4), seed=rng.randrange(1 << 30))
        for failure in _embedding_battery(E, rng, cap):
            failures.append(f"p={p} beta={beta}: {failure}")
    rep.add(
        "functor-tableau-identities",
        not failures,
        f"{count} embeddings (seed {seed}); " + ("; ".join(failures[:5]) if failures else "all identities hold"),
    )
    rep.elapsed = time.monotonic() - start
    return rep


def suite_hall(prime: int = 2, max_beta: int = 7, cap: int | None = None) -> SuiteReport:
    rep = SuiteReport("hall")
    start = time.monotonic()
    p = prime
    count_bad = tableau_bad = symmetry_bad = degree_bad = monic_bad = refine_bad = 0
    instances = 0
    for n in range(max_beta + 1):
        for beta in partitions_of(n):
            census = oracle.hall_census(p, beta, cap)
            by_tab = oracle.hall_count_by_tableau(p, beta, cap)
            if sum(census.values()) != sum(by_tab.values()):
                refine_bad += 1
            for k in range(n + 1):
                for alpha in partitions_of(k):
                    for gamma in partitions_of(n - k):
                        instances += 1
                        bd = hall_polynomial(alpha, beta, gamma)
                        if evaluate(bd.total, p) != census.get((alpha, gamma), 0):
                            count_bad += 1
                        tab_total = 0
                        for tab, poly in bd.per_tableau:
                            if evaluate(poly, p) != by_tab.get(tab, 0):
                                tableau_bad += 1
                            tab_total += by_tab.get(tab, 0)
                            if not poly.is_monic():
                                monic_bad += 1
                        if tab_total != census.get((alpha, gamma), 0):
                            refine_bad += 1
                        if alpha <= gamma:
                            mirrored = hall_polynomial(gamma, beta, alpha)
                            if mirrored.total != bd.total:
                                symmetry_bad += 1
                        if not bd.total.is_zero() and bd.total.degree != expected_degree(
                            alpha, beta, gamma
                        ):
                            degree_bad += 1
    rep.add("counts-match-oracle", count_bad == 0, f"{instances} instances, {count_bad} bad")
    rep.add("per-tableau-counts-match", tableau_bad == 0, f"{tableau_bad} bad")
    rep.add("tableau-census-refines-type-census", refine_bad == 0, f"{refine_bad} bad")
    rep.add("alpha-gamma-symmetry", symmetry_bad == 0, f"{symmetry_bad} bad")
    rep.add("multiplicities-monic", monic_bad == 0, f"{monic_bad} bad")
    rep.add("degree-formula", degree_bad == 0, f"{degree_bad} bad")
    rep.elapsed = time.monotonic() - start
    return rep


def run_suites(
    names=SUITES,
    *,
    prime: int = 2,
    max_beta: int = 7,
    seed: int = 20260808,
    count: int = 500,
    cap: int | None = None,
) -> list[SuiteReport]:
    reports = []
    for name in names:
        if name == "formulas":
            reports.append(suite_formulas(prime, cap))
        elif name == "roundtrip":
            reports.append(suite_roundtrip(cap=cap))
        elif name == "theorem2":
            reports.append(suite_theorem2(count=count, seed=seed, cap=cap))
        elif name == "hall":
            reports.append(suite_hall(prime, max_beta, cap))
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    return reports
