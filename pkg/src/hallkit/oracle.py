"""Brute-force ground truth at q = p.

Everything here is exhaustive enumeration under the configured caps:
subgroup lattices by closure BFS with canonical element-set keys, and
morphism spaces by running over all admissible generator images.
These counts are what every symbolic formula in the package is checked
against.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .caps import general_cap, subgroup_cap
from .embeddings import (
    AmbientModule,
    Embedding,
    SubgroupSet,
    klein_tableau,
    lift,
    module_type,
    quotient_type,
    reduce,
    span,
)
from .errors import CapExceeded
from .partitions import Partition, partition
from .tableaux import KleinTableau


@dataclass
class OracleReport:
    """A labelled bundle of exact counts plus the time they took."""

    description: str
    counts: dict
    elapsed: float = 0.0


# ---------------------------------------------------------------------------
# subgroup enumeration


def enumerate_subgroups(p: int, beta, cap: int | None = None) -> Iterator[SubgroupSet]:
    """Every subgroup of M(beta) exactly once, in a deterministic order.

    BFS over index-p extensions: a subgroup U is grown by any x with
    px in U, and duplicates are removed via canonical element-set keys.
    """
    beta = partition(beta)
    amb = AmbientModule.get(p, beta)
    limit = subgroup_cap(cap)
    if amb.size > limit:
        raise CapExceeded(f"ambient order {amb.size} exceeds subgroup cap {limit}")
    elements = amb.all_elements()
    pmap = {x: amb.pmul(x) for x in elements}
    zero: SubgroupSet = frozenset({0})
    seen = {zero}
    level = [zero]
    yield zero
    while level:
        grown: set[SubgroupSet] = set()
        for U in level:
            for x in elements:
                if x in U or pmap[x] not in U:
                    continue
                newset = set(U)
                cur = x
                for _ in range(p - 1):
                    newset.update(amb.add(u, cur) for u in U)
                    cur = amb.add(cur, x)
                fz = frozenset(newset)
                if fz not in seen:
                    seen.add(fz)
                    grown.add(fz)
        level = sorted(grown, key=sorted)
        yield from level


_census_cache: dict[tuple[int, Partition], dict] = {}


def _census(p: int, beta: Partition, by_tableau: bool, cap: int | None):
    key = (p, beta)
    entry = _census_cache.setdefault(key, {})
    want = "tableaux" if by_tableau else "types"
    if want in entry:
        return entry
    amb = AmbientModule.get(p, beta)
    types: dict[tuple[Partition, Partition], int] = {}
    tabs: dict[KleinTableau, int] = {}
    start = time.monotonic()
    for U in enumerate_subgroups(p, beta, cap):
        alpha = module_type(amb, U)
        gamma = quotient_type(amb, U)
        types[(alpha, gamma)] = types.get((alpha, gamma), 0) + 1
        if by_tableau:
            tab = klein_tableau(Embedding(amb, subgroup=U))
            tabs[tab] = tabs.get(tab, 0) + 1
    entry["types"] = types
    if by_tableau:
        entry["tableaux"] = tabs
    entry["elapsed"] = time.monotonic() - start
    return entry


def hall_census(p: int, beta, cap: int | None = None) -> dict[tuple[Partition, Partition], int]:
    """Counts of subgroups keyed by (subgroup type, quotient type)."""
    return dict(_census(p, partition(beta), False, cap)["types"])


def hall_count(p: int, alpha, beta, gamma, cap: int | None = None) -> int:
    """Number of subgroups of the given type with the given quotient type."""
    census = _census(p, partition(beta), False, cap)["types"]
    return census.get((partition(alpha), partition(gamma)), 0)


def hall_count_by_tableau(p: int, beta, cap: int | None = None) -> dict[KleinTableau, int]:
    """Subgroup counts keyed by the Klein tableau of the embedding."""
    return dict(_census(p, partition(beta), True, cap)["tableaux"])


def subgroup_report(p: int, beta, by_tableau: bool = False, cap: int | None = None) -> OracleReport:
    beta = partition(beta)
    entry = _census(p, beta, by_tableau, cap)
    counts: dict = {"types": entry["types"]}
    if by_tableau:
        counts["tableaux"] = entry["tableaux"]
    return OracleReport(
        description=f"subgroups of M({beta}) at p={p}",
        counts=counts,
        elapsed=entry.get("elapsed", 0.0),
    )


# ---------------------------------------------------------------------------
# morphism counting


def _unit_det_mod_p(columns: list[tuple[int, ...]], p: int) -> bool:
    """True iff the matrix with the given columns is invertible mod p."""
    n = len(columns)
    M = [[columns[j][i] % p for j in range(n)] for i in range(n)]
    for i in range(n):
        piv = next((r for r in range(i, n) if M[r][i] % p), None)
        if piv is None:
            return False
        M[i], M[piv] = M[piv], M[i]
        inv = pow(M[i][i], -1, p)
        for r in range(i + 1, n):
            factor = M[r][i] * inv % p
            if factor:
                M[r] = [(a - factor * b) % p for a, b in zip(M[r], M[i])]
    return True


def _run_morphisms(
    E: Embedding,
    F: Embedding,
    *,
    require_subgroup: bool = True,
    invertible_only: bool = False,
    orbit: set | None = None,
    cap: int | None = None,
) -> int:
    """Core enumeration over all module maps B_E -> B_F.

    A map is admissible when it carries A_E into A_F (if required) and,
    for endomorphism counts, reduces to an invertible matrix over the
    residue field.  Returns the number of admissible maps.
    """
    ambE, ambF = E.ambient, F.ambient
    if invertible_only and ambE.beta != ambF.beta:
        return 0
    allowed = [ambF.killed_by(b) for b in ambE.beta]
    total = 1
    for block in allowed:
        total *= len(block)
    limit = general_cap(cap)
    if total > limit:
        raise CapExceeded(f"hom space of size {total} exceeds cap {limit}")
    gens = E.generators()
    gcoords = [ambE.coords(g) for g in gens]
    target = F.subgroup
    s = len(ambE.beta)
    pre = [
        [[ambF.smul(c[i], y) for y in allowed[i]] for i in range(s)] for c in gcoords
    ]
    coords_cache = [[ambF.coords(y) for y in block] for block in allowed]
    count = 0
    for idx in product(*[range(len(block)) for block in allowed]):
        if require_subgroup:
            ok = True
            for t in range(len(gens)):
                img = 0
                row = pre[t]
                for i in range(s):
                    img = ambF.add(img, row[i][idx[i]])
                if img not in target:
                    ok = False
                    break
            if not ok:
                continue
        if invertible_only:
            cols = [coords_cache[i][idx[i]] for i in range(s)]
            if not _unit_det_mod_p(cols, ambF.p):
                continue
        if orbit is not None:
            images = [allowed[i][idx[i]] for i in range(s)]
            fgens = []
            for c in gcoords:
                img = 0
                for i in range(s):
                    img = ambF.add(img, ambF.smul(c[i], images[i]))
                fgens.append(img)
            orbit.add(span(ambF, fgens))
        count += 1
    return count


def hom_count(E: Embedding, F: Embedding, cap: int | None = None) -> int:
    """Number of morphisms (A_E <= B_E) -> (A_F <= B_F): module maps
    B_E -> B_F carrying A_E into A_F."""
    return _run_morphisms(E, F, cap=cap)


def aut_count(E: Embedding, cap: int | None = None) -> int:
    """Number of automorphisms of the embedding: invertible module maps
    of the ambient fixing the subgroup setwise."""
    return _run_morphisms(E, E, invertible_only=True, cap=cap)


def aut_count_module(p: int, beta, cap: int | None = None) -> int:
    """Number of module automorphisms of M(beta)."""
    amb = AmbientModule.get(p, beta)
    return aut_count(Embedding(amb, gens=()), cap)


def orbit_check(E: Embedding, cap: int | None = None) -> bool:
    """Compare the orbit of A under ambient automorphisms, counted
    directly, with the quotient of the two brute-force group orders."""
    orbit: set[SubgroupSet] = set()
    autB = _run_morphisms(
        E, E, require_subgroup=False, invertible_only=True, orbit=orbit, cap=cap
    )
    autE = aut_count(E, cap)
    if autB % autE:
        return False
    return len(orbit) == autB // autE


def adjointness_check(E: Embedding, F: Embedding, s: int, cap: int | None = None) -> bool:
    """Hom(E reduced s times, F) and Hom(E, F lifted s times) agree in size."""
    return hom_count(reduce(E, s), F, cap) == hom_count(E, lift(F, s), cap)
