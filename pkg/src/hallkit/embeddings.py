"""Concrete embeddings (A <= B) over a small prime.

The ambient module B = (+) Z/p^{beta_i} stores elements as packed
integers.  For p = 2 each coordinate occupies its own bit field with one
guard bit, so addition is a single machine-int add-and-mask; for odd p a
mixed-radix digit loop is used.  All subgroup-lattice operations
(intersection, preimage, sums) work on exact element sets, which is
simple and fast enough under the configured caps; types are extracted
from layer cardinalities.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterable, Sequence

from .caps import general_cap
from .errors import CapExceeded
from .partitions import Partition, conjugate, partition, row_length
from .tableaux import KleinTableau, LRTableau

SubgroupSet = frozenset  # of packed element ints, always containing 0


class AmbientModule:
    """The module (+) Z/p^{beta_i} with packed-integer element encoding."""

    _cache: dict[tuple[int, Partition], "AmbientModule"] = {}

    def __init__(self, p: int, beta, cap: int | None = None):
        if p not in (2, 3, 5, 7):
            raise ValueError(f"p must be a prime in 2..7, got {p}")
        self.p = p
        self.beta = partition(beta)
        self.size = p ** sum(self.beta)
        limit = general_cap(cap)
        if self.size > limit:
            raise CapExceeded(f"ambient order {self.size} exceeds cap {limit}")
        self.mods = tuple(p**b for b in self.beta)
        if p == 2:
            shifts, pos = [], 0
            for b in self.beta:
                shifts.append(pos)
                pos += b + 1  # one guard bit per field
            self._shifts = tuple(shifts)
            self._mask = sum((m - 1) << s for m, s in zip(self.mods, shifts))
            self._guards = sum(m << s for m, s in zip(self.mods, shifts))
        else:
            strides, acc = [], 1
            for m in self.mods:
                strides.append(acc)
                acc *= m
            self._strides = tuple(strides)
        self._elements: tuple[int, ...] | None = None
        self._pchain: list[SubgroupSet] | None = None
        self._killed: dict[int, tuple[int, ...]] = {}

    @classmethod
    def get(cls, p: int, beta, cap: int | None = None) -> "AmbientModule":
        key = (p, partition(beta))
        amb = cls._cache.get(key)
        if amb is None or amb.size > general_cap(cap):
            amb = cls(p, beta, cap)
            cls._cache[key] = amb
        return amb

    # -- element encoding -------------------------------------------------

    def pack(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.beta):
            raise ValueError("coordinate count mismatch")
        if self.p == 2:
            return sum((c % m) << s for c, m, s in zip(coords, self.mods, self._shifts))
        return sum((c % m) * s for c, m, s in zip(coords, self.mods, self._strides))

    def coords(self, x: int) -> tuple[int, ...]:
        if self.p == 2:
            return tuple((x >> s) & (m - 1) for m, s in zip(self.mods, self._shifts))
        return tuple((x // s) % m for m, s in zip(self.mods, self._strides))

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return (x + y) & self._mask
        return sum(
            (((x // s) + (y // s)) % m) * s for m, s in zip(self.mods, self._strides)
        )

    def neg(self, x: int) -> int:
        if self.p == 2:
            return (self._guards - x) & self._mask
        return sum(((m - (x // s) % m) % m) * s for m, s in zip(self.mods, self._strides))

    def pmul(self, x: int) -> int:
        if self.p == 2:
            return (x << 1) & self._mask
        return self.smul(self.p, x)

    def smul(self, k: int, x: int) -> int:
        if self.p == 2:
            return self.pack(tuple(k * c for c in self.coords(x)))
        return sum(
            ((k * ((x // s) % m)) % m) * s for m, s in zip(self.mods, self._strides)
        )

    def order_exponent(self, x: int) -> int:
        """Smallest e with p^e * x = 0."""
        e = 0
        while x:
            x = self.pmul(x)
            e += 1
        return e

    def all_elements(self) -> tuple[int, ...]:
        """All elements in increasing packed order (cached)."""
        if self._elements is None:
            ranges = [range(m) for m in reversed(self.mods)]
            self._elements = tuple(
                self.pack(tuple(reversed(combo))) for combo in product(*ranges)
            )
        return self._elements

    def p_power_set(self, r: int) -> SubgroupSet:
        """The submodule p^r B as an element set (cached chain)."""
        if self._pchain is None:
            chain = [frozenset(self.all_elements())]
            while len(chain[-1]) > 1:
                chain.append(frozenset(self.pmul(x) for x in chain[-1]))
            self._pchain = chain
        if r >= len(self._pchain):
            return self._pchain[-1]
        return self._pchain[r]

    def killed_by(self, k: int) -> tuple[int, ...]:
        """Elements annihilated by p^k, sorted (cached)."""
        if k not in self._killed:
            axes = []
            for b, m in zip(self.beta, self.mods):
                step = self.p ** max(0, b - k)
                axes.append(range(0, m, step))
            elems = sorted(
                self.pack(tuple(reversed(combo)))
                for combo in product(*[list(a) for a in reversed(axes)])
            )
            self._killed[k] = tuple(elems)
        return self._killed[k]

    def __repr__(self) -> str:
        return f"AmbientModule(p={self.p}, beta={self.beta})"


# ---------------------------------------------------------------------------
# subgroup-set operations


def span(ambient: AmbientModule, gens: Iterable[int]) -> SubgroupSet:
    """Closure of a generator list under addition."""
    H: set[int] = {0}
    for g in gens:
        if g in H:
            continue
        grown = set(H)
        cur = g
        while cur not in grown:
            grown.update(ambient.add(h, cur) for h in H)
            cur = ambient.add(cur, g)
        H = grown
    return frozenset(H)


def scale(ambient: AmbientModule, A: SubgroupSet) -> SubgroupSet:
    """The subgroup pA."""
    return frozenset(ambient.pmul(a) for a in A)


def preimage(ambient: AmbientModule, A: SubgroupSet) -> SubgroupSet:
    """The subgroup p^{-1}A = {b : pb in A}; scans the ambient."""
    return frozenset(x for x in ambient.all_elements() if ambient.pmul(x) in A)


def intersect(A: SubgroupSet, X: SubgroupSet) -> SubgroupSet:
    return A & X


def add_subgroups(ambient: AmbientModule, H: SubgroupSet, K: SubgroupSet) -> SubgroupSet:
    """The subgroup H + K, as a union of H-cosets indexed by K."""
    if len(H) < len(K):
        H, K = K, H
    out = set(H)
    for k in K:
        if k not in out:
            out.update(ambient.add(h, k) for h in H)
    return frozenset(out)


def p_power_submodule(ambient: AmbientModule, r: int) -> SubgroupSet:
    """The submodule p^r B."""
    return ambient.p_power_set(r)


def sorted_elements(ambient: AmbientModule, A: SubgroupSet) -> tuple[tuple[int, ...], ...]:
    """Canonical list of a subgroup's elements as coordinate tuples."""
    return tuple(ambient.coords(a) for a in sorted(A))


def _logp(n: int, p: int) -> int:
    e = 0
    while n > 1:
        if n % p:
            raise ValueError(f"{n} is not a power of {p}")
        n //= p
        e += 1
    return e


def module_type(ambient: AmbientModule, U: SubgroupSet) -> Partition:
    """Type of a subgroup from its layer cardinalities |p^i U|."""
    sizes = [len(U)]
    cur = U
    while len(cur) > 1:
        cur = scale(ambient, cur)
        sizes.append(len(cur))
    dims = [
        _logp(sizes[i - 1], ambient.p) - _logp(sizes[i], ambient.p)
        for i in range(1, len(sizes))
    ]
    return conjugate(partition(dims))


def quotient_type(ambient: AmbientModule, X: SubgroupSet) -> Partition:
    """Type of B/X via |p^i(B/X)| = |p^i B| / |p^i B intersect X|."""
    sizes = []
    i = 0
    while True:
        piB = ambient.p_power_set(i)
        small, big = (X, piB) if len(X) <= len(piB) else (piB, X)
        meet = sum(1 for x in small if x in big)
        sizes.append(len(piB) // meet)
        if sizes[-1] == 1:
            break
        i += 1
    dims = [
        _logp(sizes[i - 1], ambient.p) - _logp(sizes[i], ambient.p)
        for i in range(1, len(sizes))
    ]
    return conjugate(partition(dims))


# ---------------------------------------------------------------------------
# embeddings


class Embedding:
    """A subgroup A of an ambient module, as generators plus a cached set."""

    def __init__(
        self,
        ambient: AmbientModule,
        gens: Sequence[int] | None = None,
        subgroup: SubgroupSet | None = None,
    ):
        if gens is None and subgroup is None:
            raise ValueError("need generators or an explicit subgroup")
        self.ambient = ambient
        self._gens = tuple(gens) if gens is not None else None
        self._subgroup = frozenset(subgroup) if subgroup is not None else None
        self._achain: list[SubgroupSet] | None = None

    @classmethod
    def from_coords(
        cls, p: int, beta, gen_coords: Iterable[Sequence[int]], cap: int | None = None
    ) -> "Embedding":
        amb = AmbientModule.get(p, beta, cap)
        return cls(amb, tuple(amb.pack(c) for c in gen_coords))

    @property
    def p(self) -> int:
        return self.ambient.p

    @property
    def beta(self) -> Partition:
        return self.ambient.beta

    @property
    def subgroup(self) -> SubgroupSet:
        if self._subgroup is None:
            self._subgroup = span(self.ambient, self._gens)
        return self._subgroup

    def generators(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = subgroup_basis(self.ambient, self.subgroup)
        return self._gens

    def chain(self) -> list[SubgroupSet]:
        """[A, pA, p^2 A, ..., 0]; its length minus one is the exponent."""
        if self._achain is None:
            chain = [self.subgroup]
            while len(chain[-1]) > 1:
                chain.append(scale(self.ambient, chain[-1]))
            self._achain = chain
        return self._achain

    @property
    def exponent(self) -> int:
        return len(self.chain()) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Embedding)
            and self.p == other.p
            and self.beta == other.beta
            and self.subgroup == other.subgroup
        )

    def __repr__(self) -> str:
        gens = [list(self.ambient.coords(g)) for g in self.generators()]
        return f"Embedding(p={self.p}, beta={list(self.beta)}, gens={gens})"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "beta": list(self.beta),
            "gens": [list(self.ambient.coords(g)) for g in self.generators()],
        }

    @classmethod
    def from_json(cls, data: dict, cap: int | None = None) -> "Embedding":
        return cls.from_coords(data["p"], data["beta"], data["gens"], cap)


def subgroup_basis(ambient: AmbientModule, A: SubgroupSet) -> tuple[int, ...]:
    """A minimal generating set realizing the type of A, found greedily:
    for each part m (descending) pick the smallest element of order p^m
    that stays independent of the span built so far."""
    if len(A) == 1:
        return ()
    typ = module_type(ambient, A)
    S: SubgroupSet = frozenset({0})
    basis: list[int] = []
    elems = sorted(A)
    for m in typ:
        found = None
        for y in elems:
            if ambient.order_exponent(y) != m:
                continue
            z = y
            for _ in range(m - 1):
                z = ambient.pmul(z)
            if z not in S:
                found = y
                break
        if found is None:
            raise AssertionError("basis extraction failed")
        basis.append(found)
        S = add_subgroups(ambient, S, span(ambient, (found,)))
    return tuple(basis)


# ---------------------------------------------------------------------------
# tableau extraction


def lr_tableau(E: Embedding) -> LRTableau:
    """Chain of quotient types type(B / p^i A) for i = 0..exponent."""
    amb = E.ambient
    return LRTableau(tuple(quotient_type(amb, Ai) for Ai in E.chain()))


def klein_tableau(E: Embedding) -> KleinTableau:
    """Subscripted tableau of an embedding.

    For each entry level ell, the chain of types of
    B / (p^ell A + p(p^{ell-2} A intersect p^r B)) over r = 0..n-1 grows
    from g^{ell-1} to g^ell; the boxes appearing at step r get subscript
    r.  Here n is the exponent of the ambient module.
    """
    amb = E.ambient
    chain = E.chain()
    e = len(chain) - 1
    gammas = tuple(quotient_type(amb, Ai) for Ai in chain)
    n = amb.beta[0] if amb.beta else 0
    subs: dict[tuple[int, int], list[int]] = {}
    for ell in range(2, e + 1):
        pellA = chain[ell]
        Y = chain[ell - 2]
        prev_Y = None
        prev_type = gammas[ell - 1]
        for r in range(1, n):
            Y = Y & amb.p_power_set(r)
            if Y == prev_Y:
                continue
            prev_Y = Y
            X = add_subgroups(amb, pellA, scale(amb, Y))
            cur = quotient_type(amb, X)
            if cur == prev_type:
                continue
            for m in range(1, (cur[0] if cur else 0) + 1):
                grow = row_length(cur, m) - row_length(prev_type, m)
                if grow:
                    subs.setdefault((ell, m), []).extend([r] * grow)
            prev_type = cur
        if prev_type != gammas[ell]:
            raise AssertionError("subscript chain did not reach the strip top")
    return KleinTableau.make(gammas, subs)


# ---------------------------------------------------------------------------
# canonical embeddings and constructions


def picket_embedding(p: int, ell: int, m: int, cap: int | None = None) -> Embedding:
    """(p^{m-ell}) inside Z/p^m."""
    if not 0 <= ell <= m:
        raise ValueError("need 0 <= ell <= m")
    gens = [(p ** (m - ell),)] if ell else []
    return Embedding.from_coords(p, (m,), gens, cap)


def bipicket_embedding(p: int, m: int, r: int, cap: int | None = None) -> Embedding:
    """The diagonal ((p^{m-2}, p^{r-1})) inside Z/p^m + Z/p^r."""
    if not 1 <= r <= m - 1:
        raise ValueError("need 1 <= r <= m-1")
    return Embedding.from_coords(p, (m, r), [(p ** (m - 2), p ** (r - 1))], cap)


def empty_embedding(p: int, cap: int | None = None) -> Embedding:
    return Embedding.from_coords(p, (), [], cap)


def direct_sum(E1: Embedding, E2: Embedding, cap: int | None = None) -> Embedding:
    """Block-diagonal sum with columns re-sorted into a partition."""
    if E1.p != E2.p:
        raise ValueError("summands must share the prime")
    p = E1.p
    cols = [(part, 0, i) for i, part in enumerate(E1.beta)]
    cols += [(part, 1, i) for i, part in enumerate(E2.beta)]
    order = sorted(range(len(cols)), key=lambda j: (-cols[j][0], cols[j][1], cols[j][2]))
    beta = tuple(cols[j][0] for j in order)
    amb = AmbientModule.get(p, beta, cap)
    offset = len(E1.beta)
    src = [(cols[j][2] if cols[j][1] == 0 else cols[j][2] + offset) for j in order]

    def mix(c1: Sequence[int], c2: Sequence[int]) -> int:
        both = list(c1) + list(c2)
        return amb.pack(tuple(both[k] for k in src))

    a1 = [E1.ambient.coords(a) for a in E1.subgroup]
    a2 = [E2.ambient.coords(a) for a in E2.subgroup]
    zero1, zero2 = (0,) * len(E1.beta), (0,) * len(E2.beta)
    A = frozenset(mix(c1, c2) for c1 in a1 for c2 in a2)
    gens = [mix(E1.ambient.coords(g), zero2) for g in E1.generators()]
    gens += [mix(zero1, E2.ambient.coords(g)) for g in E2.generators()]
    return Embedding(amb, gens=gens, subgroup=A)


def random_embedding(p: int, beta, k: int, seed: int, cap: int | None = None) -> Embedding:
    """k uniformly random generators; bit-exact reproducible per seed."""
    amb = AmbientModule.get(p, beta, cap)
    rng = random.Random(seed)
    gens = [
        amb.pack(tuple(rng.randrange(m) for m in amb.mods)) for _ in range(k)
    ]
    return Embedding(amb, gens=gens)


def realize(tab: KleinTableau, p: int, cap: int | None = None) -> Embedding:
    """A concrete embedding whose Klein tableau is the given entries-<=2
    tableau: the direct sum of the canonical picket/bipicket embeddings
    of its decoded object."""
    from .s2cat import Bipicket, object_of_tableau

    obj = object_of_tableau(tab)
    E = empty_embedding(p, cap)
    for x, k in obj.summands:
        piece = (
            bipicket_embedding(p, x.m, x.r, cap)
            if isinstance(x, Bipicket)
            else picket_embedding(p, x.ell, x.m, cap)
        )
        for _ in range(k):
            E = direct_sum(E, piece, cap)
    return E


# ---------------------------------------------------------------------------
# functors: lifting, reducing, truncation


def lift(E: Embedding, s: int = 1) -> Embedding:
    """Replace A by p^{-s} A."""
    A = E.subgroup
    for _ in range(s):
        A = preimage(E.ambient, A)
    return Embedding(E.ambient, subgroup=A)


def reduce(E: Embedding, s: int = 1) -> Embedding:
    """Replace A by p^s A."""
    A = E.subgroup
    for _ in range(s):
        A = scale(E.ambient, A)
    return Embedding(E.ambient, subgroup=A)


def truncate(E: Embedding, ell: int, cap: int | None = None) -> Embedding:
    """The approximation E|^ell = (A/p^ell A <= B/p^ell A).

    Rebuilds the ambient as the quotient B/p^ell A with a freshly chosen
    basis; any basis works since only types and tableaux are extracted.
    """
    if ell < 0:
        raise ValueError("level must be >= 0")
    chain = E.chain()
    X = chain[ell] if ell < len(chain) else chain[-1]
    if len(X) == 1:
        return E
    return _quotient_embedding(E, X, cap)


def subfactor(E: Embedding, ell: int, u: int, cap: int | None = None) -> Embedding:
    """E|^ell_u = reduce(truncate(E, ell), ell - u)."""
    if not 0 <= u <= ell:
        raise ValueError("need 0 <= u <= ell")
    return reduce(truncate(E, ell, cap), ell - u)


def _quotient_embedding(E: Embedding, X: SubgroupSet, cap: int | None = None) -> Embedding:
    """(A/X <= B/X) for a subgroup X of A, over a fresh ambient of the
    quotient's type."""
    amb = E.ambient
    canon: dict[int, int] = {}
    for b in amb.all_elements():
        if b in canon:
            continue
        for x in X:
            canon[amb.add(b, x)] = b
    gamma = quotient_type(amb, X)
    new_amb = AmbientModule.get(amb.p, gamma, cap)

    S: SubgroupSet = frozenset(X)
    basis: list[int] = []
    for m in gamma:
        found = None
        for y in amb.all_elements():
            if y in S:
                continue
            z = y
            for _ in range(m - 1):
                z = amb.pmul(z)
            if z in S or canon[amb.pmul(z)] != 0:
                continue
            found = y
            break
        if found is None:
            raise AssertionError("quotient basis extraction failed")
        basis.append(found)
        S = add_subgroups(amb, S, span(amb, (found,)))

    coord_of: dict[int, int] = {}
    axes = [range(amb.p**m) for m in gamma]
    for combo in product(*axes):
        val = 0
        for c, y in zip(combo, basis):
            val = amb.add(val, amb.smul(c, y))
        rep = canon[val]
        if rep in coord_of:
            raise AssertionError("quotient coordinates collide")
        coord_of[rep] = new_amb.pack(combo)

    A_new = frozenset(coord_of[canon[a]] for a in E.subgroup)
    gens_new = tuple(coord_of[canon[g]] for g in E.generators())
    return Embedding(new_amb, gens=gens_new, subgroup=A_new)
