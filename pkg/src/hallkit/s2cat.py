"""Objects with p^2-bounded subgroup: pickets, bipickets, and the tableau
bijection, plus Hom lengths and automorphism-group orders.

An object is a multiset of indecomposables.  ``Picket(ell, m)`` is a
cyclic subgroup of order p^ell inside a cyclic group of order p^m
(ell <= min(2, m)); ``Bipicket(m, r)`` is the diagonal embedding of a
cyclic p^2-bounded subgroup into a sum of two cyclic groups of orders
p^m, p^r with 1 <= r <= m-2.  The boundary case r = m-1 is stored
canonically as Picket(2, m).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import EntryTooLarge
from .partitions import Partition, merge, partition, row_length
from .qforms import QOrderFactored, gl_order
from .tableaux import KleinTableau, direct_sum_tableau, forced_subscript_count


@dataclass(frozen=True, order=True)
class Picket:
    ell: int
    m: int

    def __post_init__(self):
        if not 0 <= self.ell <= min(2, self.m):
            raise ValueError(f"invalid picket P_{self.ell}^{self.m}")

    @property
    def size(self) -> int:
        return self.m

    def __str__(self) -> str:
        return f"P({self.ell},{self.m})"


@dataclass(frozen=True, order=True)
class Bipicket:
    m: int
    r: int

    def __post_init__(self):
        if not 1 <= self.r <= self.m - 2:
            raise ValueError(f"invalid bipicket T({self.m},{self.r})")

    @property
    def size(self) -> int:
        return self.m + self.r

    def __str__(self) -> str:
        return f"T({self.m},{self.r})"


Indecomposable = Picket | Bipicket


def bipicket(m: int, r: int) -> Indecomposable:
    """Canonical constructor: T(m, m-1) is identified with P(2, m)."""
    if r == m - 1:
        return Picket(2, m)
    return Bipicket(m, r)


def _sort_key(x: Indecomposable):
    if isinstance(x, Picket):
        return (0, x.ell, x.m, 0)
    return (1, 2, x.m, x.r)


@dataclass(frozen=True)
class S2Object:
    """Multiset of indecomposables with positive multiplicities."""

    summands: tuple[tuple[Indecomposable, int], ...] = ()

    @classmethod
    def make(cls, mults: Mapping[Indecomposable, int] | Iterable[tuple[Indecomposable, int]]) -> "S2Object":
        items = mults.items() if isinstance(mults, Mapping) else mults
        agg: dict[Indecomposable, int] = {}
        for x, k in items:
            if k < 0:
                raise ValueError("multiplicities must be >= 0")
            if k:
                agg[x] = agg.get(x, 0) + k
        return cls(tuple(sorted(agg.items(), key=lambda it: _sort_key(it[0]))))

    @classmethod
    def of(cls, *indecs: Indecomposable) -> "S2Object":
        out: dict[Indecomposable, int] = {}
        for x in indecs:
            out[x] = out.get(x, 0) + 1
        return cls.make(out)

    @property
    def total_size(self) -> int:
        return sum(x.size * k for x, k in self.summands)

    def ambient_type(self) -> Partition:
        """Type of the total module: one column m per picket, columns m and
        r per bipicket, with multiplicity."""
        parts: Partition = ()
        for x, k in self.summands:
            cols = (x.m,) if isinstance(x, Picket) else (x.m, x.r)
            for _ in range(k):
                parts = merge(parts, cols)
        return parts

    def multiplicity(self, x: Indecomposable) -> int:
        for y, k in self.summands:
            if y == x:
                return k
        return 0

    def to_text(self) -> str:
        if not self.summands:
            return "0"
        bits = []
        for x, k in self.summands:
            bits.append(str(x) if k == 1 else f"{k}*{x}")
        return " + ".join(bits)

    def to_json(self) -> dict:
        out = []
        for x, k in self.summands:
            if isinstance(x, Picket):
                out.append({"kind": "P", "ell": x.ell, "m": x.m, "mult": k})
            else:
                out.append({"kind": "T", "m": x.m, "r": x.r, "mult": k})
        return {"summands": out}

    @classmethod
    def from_json(cls, data: dict) -> "S2Object":
        mults: dict[Indecomposable, int] = {}
        for item in data["summands"]:
            if item["kind"] == "P":
                x: Indecomposable = Picket(item["ell"], item["m"])
            else:
                x = bipicket(item["m"], item["r"])
            mults[x] = mults.get(x, 0) + item.get("mult", 1)
        return cls.make(mults)

    def __str__(self) -> str:
        return self.to_text()


_TERM = re.compile(r"^(?:(\d+)\*)?([PT])\((\d+),(\d+)\)$")


def parse_object(text: str) -> S2Object:
    """Parse the text form, e.g. 'T(4,2) + P(1,3)' or '2*P(0,1)'."""
    text = text.strip()
    if text in ("", "0"):
        return S2Object.make({})
    mults: dict[Indecomposable, int] = {}
    for chunk in text.split("+"):
        mt = _TERM.match(chunk.strip().replace(" ", ""))
        if not mt:
            raise ValueError(f"cannot parse summand {chunk!r}")
        k = int(mt.group(1) or 1)
        a, b = int(mt.group(3)), int(mt.group(4))
        x = Picket(a, b) if mt.group(2) == "P" else bipicket(a, b)
        mults[x] = mults.get(x, 0) + k
    return S2Object.make(mults)


# ---------------------------------------------------------------------------
# the bijection with Klein tableaux (entries <= 2)


def _indec_tableau(x: Indecomposable) -> KleinTableau:
    if isinstance(x, Picket):
        ell, m = x.ell, x.m
        gammas = [(m - ell + i,) for i in range(ell + 1)]
        subs = {(2, m): [m - 1]} if ell == 2 else {}
        return KleinTableau.make([partition(g) for g in gammas], subs)
    m, r = x.m, x.r
    gammas = [partition((m - 1, r - 1)), partition((m - 1, r)), partition((m, r))]
    return KleinTableau.make(gammas, {(2, m): [r]})


def tableau_of_object(obj: S2Object) -> KleinTableau:
    """Klein tableau of a direct sum of pickets and bipickets."""
    tab = KleinTableau.make([()])
    for x, k in obj.summands:
        piece = _indec_tableau(x)
        for _ in range(k):
            tab = direct_sum_tableau(tab, piece)
    return tab


def object_of_tableau(tab: KleinTableau) -> S2Object:
    """Decode an entries-<=2 Klein tableau into its multiset of summands.

    Inverse of ``tableau_of_object``; raises EntryTooLarge when any entry
    exceeds 2.
    """
    gs = tab.gammas
    e = len(gs) - 1
    for ell in range(3, e + 1):
        if gs[ell] != gs[ell - 1]:
            raise EntryTooLarge(f"tableau has entries up to {e}")
    g0 = gs[0]
    g1 = gs[min(1, e)]
    g2 = gs[min(2, e)]
    beta = gs[-1]
    top = beta[0] if beta else 0
    g0_padded = g0 + (0,) * (len(beta) - len(g0))

    def twos(m: int) -> tuple[int, ...]:
        return tab.subs_at(2, m)

    sub_total = {r: tab.count_symbols(2, subs={r}) for r in range(1, top + 1)}
    mults: dict[Indecomposable, int] = {}
    for m in range(1, top + 1):
        for r in twos(m):
            x = bipicket(m, r)
            mults[x] = mults.get(x, 0) + 1
        ones = row_length(g1, m) - row_length(g0, m)
        p1 = ones - sub_total.get(m, 0)
        if p1 < 0:
            raise ValueError("invalid Klein tableau: condition (iv) violated")
        if p1:
            mults[Picket(1, m)] = mults.get(Picket(1, m), 0) + p1
        # empty columns of height m, plus columns of height m+1 whose only
        # symbol is a free 2_m at the bottom
        empty_cols = sum(
            1 for i in range(len(beta)) if beta[i] == m and g0_padded[i] == m
        )
        free_2m = 0
        if e >= 2:
            forced = forced_subscript_count((g0, g1, g2), 2, m + 1)
            free_2m = sum(1 for r in twos(m + 1) if r == m) - forced
        p0 = empty_cols + free_2m
        if p0:
            mults[Picket(0, m)] = mults.get(Picket(0, m), 0) + p0
    return S2Object.make(mults)


def enumerate_indecomposables(max_size: int) -> tuple[Indecomposable, ...]:
    """All pickets and bipickets of total module size at most max_size."""
    out: list[Indecomposable] = []
    for m in range(1, max_size + 1):
        for ell in range(0, min(2, m) + 1):
            out.append(Picket(ell, m))
    for m in range(3, max_size):
        for r in range(1, min(m - 2, max_size - m) + 1):
            out.append(Bipicket(m, r))
    return tuple(sorted(out, key=_sort_key))


def enumerate_objects(max_size: int) -> tuple[S2Object, ...]:
    """All objects of total module size at most max_size, zero included."""
    indecs = enumerate_indecomposables(max_size)
    out: list[S2Object] = []

    def rec(idx: int, budget: int, acc: list[tuple[Indecomposable, int]]):
        if idx == len(indecs):
            out.append(S2Object.make(list(acc)))
            return
        x = indecs[idx]
        for k in range(budget // x.size + 1):
            if k:
                acc.append((x, k))
            rec(idx + 1, budget - k * x.size, acc)
            if k:
                acc.pop()

    rec(0, max_size, [])
    return tuple(out)


# ---------------------------------------------------------------------------
# Hom lengths


def hom_len_indec(x: Indecomposable, y: Indecomposable) -> int:
    """log_q of the number of morphisms from x to y.

    Picket-to-picket, bipicket-to-picket and picket-to-bipicket cases are
    closed forms; bipicket-to-bipicket goes through the tableau route so
    the two never collapse into one implementation.
    """
    if isinstance(x, Picket) and isinstance(y, Picket):
        u, v, ell, m = x.ell, x.m, y.ell, y.m
        return min(m, v - max(0, u - ell))
    if isinstance(x, Bipicket) and isinstance(y, Picket):
        v, w, ell, m = x.m, x.r, y.ell, y.m
        if ell == 0:
            return min(v - 1, m) + min(w - 1, m)
        if ell == 1:
            return min(v - 1, m) + min(w, m)
        return min(v, m) + min(w, m)
    if isinstance(x, Picket) and isinstance(y, Bipicket):
        u, v, m, r = x.ell, x.m, y.m, y.r
        if u == 0:
            return min(v, r) + min(v, m)
        if u == 1:
            return min(v - 1, r) + min(v, m)
        return min(v - u + 1, r) + min(v - u + 1, m)
    return hom_len_tableau(_indec_tableau(x), y)


def hom_len_obj(obj: S2Object, y: Indecomposable) -> int:
    """Additivity in the source: sum of multiplicities times indec lengths."""
    return sum(k * hom_len_indec(x, y) for x, k in obj.summands)


def hom_len_tableau(tab: KleinTableau, y: Indecomposable) -> int:
    """Hom length from ANY object with the given Klein tableau into y.

    For a picket target it reads off the chain: sum over rows 1..m of the
    row lengths of g^ell.  Bipicket targets reduce to picket targets plus
    the count b of symbols 2_u in rows r+2..m with u <= r.
    """
    gs = tab.gammas
    e = len(gs) - 1

    def picket_len(ell: int, m: int) -> int:
        g = gs[min(ell, e)]
        return sum(min(part, m) for part in g)

    if isinstance(y, Picket):
        return picket_len(y.ell, y.m)
    m, r = y.m, y.r
    b = tab.count_symbols(2, rows=range(r + 2, m + 1), subs=range(1, r + 1))
    return (
        b
        + picket_len(2, r + 1)
        + picket_len(0, r)
        + picket_len(1, m)
        - picket_len(1, r + 1)
    )


# ---------------------------------------------------------------------------
# automorphism-group orders


def end_power(obj: S2Object) -> int:
    """log_q of the endomorphism-ring order of the object."""
    return sum(
        ki * kj * hom_len_indec(xi, xj)
        for xi, ki in obj.summands
        for xj, kj in obj.summands
    )


def aut_order(obj: S2Object) -> QOrderFactored:
    """Order of the automorphism group, in factored form.

    In a Krull-Remak-Schmidt category the units of End are the preimage of
    the units of End modulo its radical, a product of matrix rings over the
    residue field; hence #Aut = #End * prod(|GL_k| / q^(k^2)).
    """
    power = end_power(obj) - sum(k * k for _, k in obj.summands)
    result = QOrderFactored.q_power(power)
    for _, k in obj.summands:
        result = result * gl_order(k)
    return result


def aut_order_module(beta) -> QOrderFactored:
    """Order of the automorphism group of the module of the given type,
    computed as the automorphism group of a sum of empty pickets."""
    beta = partition(beta)
    return aut_order(S2Object.make({Picket(0, m): beta.count(m) for m in set(beta)}))
