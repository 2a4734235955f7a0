"""Finite groups as indexed element sets with a full composition table.

Elements are the integers ``0..n-1``; ``G.table[i][j]`` is the index of the
product ``i*j``.  Permutation groups compose left to right, so ``g*h`` means
"apply g, then h", matching the usual right-action convention ``x^(gh)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import NotAGroup, NotNormal, TooLarge

DEFAULT_CAP = 20_000
_FULL_ASSOC_LIMIT = 256
_SPOT_CHECKS = 20_000


class NotAPermutation(ValueError):
    pass


class Group:
    """A finite group given by its composition table.

    Construct through :func:`group_from_cayley` or
    :func:`group_from_permutations`; the initializer trusts its input.
    """

    def __init__(self, table: list[list[int]], *, elements=None, perm_gens=None, name=None):
        self.table = table
        self.n = len(table)
        self.name = name
        # 0-based image tuples, one per element, when built from permutations
        self.elements = elements
        self.perm_gens = perm_gens
        e = next(i for i in range(self.n) if all(table[i][j] == j for j in range(self.n)))
        self.identity = e
        inv = [0] * self.n
        for i, row in enumerate(table):
            inv[i] = row.index(e)
        self.inverses = inv

    def __repr__(self):
        label = self.name or "Group"
        return f"<{label} of order {self.n}>"

    def __len__(self):
        return self.n

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 x g"""
        t = self.table
        return t[t[self.inverses[g]][x]][g]

    def power(self, g: int, k: int) -> int:
        k %= self.orders[g]
        result, base = self.identity, g
        t = self.table
        while k:
            if k & 1:
                result = t[result][base]
            base = t[base][base]
            k >>= 1
        return result

    def cyclic(self, g: int) -> list[int]:
        """[g^0, g^1, ..., g^(o-1)]"""
        out = [self.identity]
        x = g
        while x != self.identity:
            out.append(x)
            x = self.table[x][g]
        return out

    @cached_property
    def orders(self) -> list[int]:
        t, e = self.table, self.identity
        orders = [0] * self.n
        for g in range(self.n):
            if orders[g]:
                continue
            powers = [g]
            x = g
            while x != e:
                x = t[x][g]
                powers.append(x)
            o = len(powers)
            # g^k has order o / gcd(o, k)
            for k, x in enumerate(powers, start=1):
                if not orders[x]:
                    orders[x] = o // gcd(o, k)
        return orders

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.orders) if self.n else 1

    @cached_property
    def classes(self) -> ConjugacyClasses:
        return _compute_classes(self)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.n) for j in range(i))

    def whole(self) -> Subgroup:
        return Subgroup(self, tuple(range(self.n)))

    def trivial(self) -> Subgroup:
        return Subgroup(self, (self.identity,))


@dataclass(frozen=True)
class Subgroup:
    parent: Group = field(repr=False, compare=False)
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, g) -> bool:
        return g in self.member_set

    def __iter__(self):
        return iter(self.members)

    def as_group(self) -> tuple[Group, tuple[int, ...]]:
        """Relabel as a standalone group; returns (group, embedding)."""
        idx = {g: k for k, g in enumerate(self.members)}
        t = self.parent.table
        table = [[idx[t[a][b]] for b in self.members] for a in self.members]
        elems = None
        if self.parent.elements is not None:
            elems = [self.parent.elements[g] for g in self.members]
        return Group(table, elements=elems), self.members


@dataclass(frozen=True)
class ConjugacyClasses:
    """Conjugacy classes; class 0 is always {identity}."""

    classes: tuple[tuple[int, tuple[int, ...]], ...]
    class_of: tuple[int, ...]

    def __len__(self):
        return len(self.classes)

    @cached_property
    def reps(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.classes)

    @cached_property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(m) for _, m in self.classes)

    def members(self, k: int) -> tuple[int, ...]:
        return self.classes[k][1]


@dataclass(frozen=True)
class PDecomposition:
    z: int  # p-part
    y: int  # p'-part


# -- construction ------------------------------------------------------------


def group_from_cayley(table: Sequence[Sequence[int]], *, name=None) -> Group:
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    rows = []
    for i, row in enumerate(table):
        row = [int(x) for x in row]
        if len(row) != n:
            raise NotAGroup(f"row {i} has length {len(row)}, expected {n}")
        if any(x < 0 or x >= n for x in row):
            raise NotAGroup(f"row {i} has an entry outside 0..{n - 1}")
        rows.append(row)

    ids = [i for i in range(n) if all(rows[i][j] == j and rows[j][i] == j for j in range(n))]
    if not ids:
        raise NotAGroup("no two-sided identity")
    e = ids[0]
    for i in range(n):
        if e not in rows[i]:
            raise NotAGroup(f"element {i} has no right inverse")
        j = rows[i].index(e)
        if rows[j][i] != e:
            raise NotAGroup(f"element {i} has no two-sided inverse")
    for i in range(n):
        if len(set(rows[i])) != n or len({rows[j][i] for j in range(n)}) != n:
            raise NotAGroup("table is not a Latin square")

    arr = np.asarray(rows, dtype=np.int32)
    if n <= _FULL_ASSOC_LIMIT:
        left = arr[arr, :]       # [i,j,k] -> (ij)k
        right = arr[:, arr]      # [i,j,k] -> i(jk)
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k = (int(v) for v in bad[0])
            raise NotAGroup(f"not associative at ({i}, {j}, {k})")
    else:
        rng = np.random.default_rng(0)
        i, j, k = rng.integers(0, n, size=(3, _SPOT_CHECKS))
        bad = np.flatnonzero(arr[arr[i, j], k] != arr[i, arr[j, k]])
        if len(bad):
            b = bad[0]
            raise NotAGroup(f"not associative at ({i[b]}, {j[b]}, {k[b]})")
    return Group(rows, name=name)


def _check_perm(img: Sequence[int], degree: int) -> tuple[int, ...]:
    if len(img) != degree:
        raise NotAPermutation(f"generator has {len(img)} images, expected {degree}")
    if sorted(img) != list(range(1, degree + 1)):
        raise NotAPermutation(f"{list(img)} is not a bijection on 1..{degree}")
    return tuple(x - 1 for x in img)


def group_from_permutations(
    gens: Iterable[Sequence[int]], *, degree: int | None = None, cap: int = DEFAULT_CAP, name=None
) -> Group:
    """Enumerate the group generated by permutations given as 1-based image lists.

    Elements are indexed breadth-first from the identity by word length;
    ties within one length are broken by the lexicographic order of the
    image tuples, so indexing is independent of hash ordering.
    """
    gens = [list(g) for g in gens]
    if degree is None:
        degree = max((len(g) for g in gens), default=1)
    gens0 = [_check_perm(g, degree) for g in gens]

    ident = tuple(range(degree))
    seen = {ident}
    order = [ident]
    level = [ident]
    while level:
        new = set()
        for x in level:
            for s in gens0:
                y = tuple(s[x[i]] for i in range(degree))
                if y not in seen:
                    seen.add(y)
                    new.add(y)
        if len(seen) > cap:
            raise TooLarge(f"group exceeds cap of {cap} elements")
        level = sorted(new)
        order.extend(level)

    table = _perm_table(order, degree)
    return Group(table, elements=order, perm_gens=gens0, name=name)


def _perm_table(elems: list[tuple[int, ...]], degree: int) -> list[list[int]]:
    n = len(elems)
    P = np.asarray(elems, dtype=np.int64).reshape(n, degree)
    if degree == 0 or degree ** degree < 2 ** 62:
        weights = np.asarray([degree ** k for k in range(degree)], dtype=np.int64)
        codes = P @ weights
        perm = np.argsort(codes)
        sorted_codes = codes[perm]
        table = []
        for i in range(n):
            prod = P[:, P[i]]  # row j is g_i * g_j
            pos = np.searchsorted(sorted_codes, prod @ weights)
            table.append(perm[pos].tolist())
        return table
    index = {e: k for k, e in enumerate(elems)}
    return [[index[tuple(h[x] for x in g)] for h in elems] for g in elems]


# -- subgroups ---------------------------------------------------------------


def generated_closure(G: Group, seed: Iterable[int]) -> Subgroup:
    gens = sorted(set(seed) - {G.identity})
    t = G.table
    found = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = t[x][s]
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(found))


def centralizer(G: Group, S: Iterable[int]) -> Subgroup:
    S = list(S)
    t = G.table
    return Subgroup(G, tuple(x for x in range(G.n) if all(t[x][s] == t[s][x] for s in S)))


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    hs = H.member_set
    return Subgroup(G, tuple(g for g in range(G.n) if all(G.conj(h, g) in hs for h in H.members)))


def center(G: Group) -> Subgroup:
    cc = G.classes
    return Subgroup(G, tuple(r for r, m in cc.classes if len(m) == 1))


def is_normal(G: Group, H: Subgroup) -> bool:
    hs = H.member_set
    return all(G.conj(h, g) in hs for g in range(G.n) for h in H.members)


def normal_subgroups(G: Group) -> list[Subgroup]:
    """All normal subgroups, by closing normal closures of classes under joins."""
    cc = G.classes
    found = {frozenset([G.identity])}
    for _, members in cc.classes:
        found.add(frozenset(generated_closure(G, members).members))
    changed = True
    while changed:
        changed = False
        current = sorted(found, key=lambda s: (len(s), sorted(s)))
        for a in current:
            for b in current:
                if a <= b or b <= a:
                    continue
                j = frozenset(generated_closure(G, a | b).members)
                if j not in found:
                    found.add(j)
                    changed = True
    return [Subgroup(G, tuple(s)) for s in sorted(found, key=lambda s: (len(s), sorted(s)))]


# -- conjugacy ---------------------------------------------------------------


def _compute_classes(G: Group) -> ConjugacyClasses:
    t, inv, n = G.table, G.inverses, G.n
    assigned = [False] * n
    raw = []
    for g in range(n):
        if assigned[g]:
            continue
        orbit = {t[t[inv[x]][g]][x] for x in range(n)}
        for y in orbit:
            assigned[y] = True
        raw.append(tuple(sorted(orbit)))
    orders = G.orders
    raw.sort(key=lambda m: (orders[m[0]], len(m), m[0]))
    class_of = [0] * n
    for k, members in enumerate(raw):
        for x in members:
            class_of[x] = k
    return ConjugacyClasses(tuple((m[0], m) for m in raw), tuple(class_of))


def conjugacy_classes(G: Group) -> ConjugacyClasses:
    return G.classes


# -- p-local structure -------------------------------------------------------


def is_p_power(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def p_part(m: int, p: int) -> int:
    out = 1
    while m % p == 0:
        m //= p
        out *= p
    return out


def p_elements(G: Group, p: int) -> list[int]:
    return [g for g in range(G.n) if is_p_power(G.orders[g], p)]


def p_regular_elements(G: Group, p: int) -> list[int]:
    return [g for g in range(G.n) if G.orders[g] % p]


def p_decompose(G: Group, g: int, p: int) -> PDecomposition:
    o = G.orders[g]
    pa = p_part(o, p)
    m = o // pa
    t = pow(m, -1, pa) if pa > 1 else 0
    s = pow(pa, -1, m) if m > 1 else 0
    return PDecomposition(G.power(g, m * t), G.power(g, pa * s))


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """Deterministic Sylow p-subgroup grown along a normalizer chain."""
    target = p_part(G.n, p)
    H = G.trivial()
    pel = p_elements(G, p)
    while H.order < target:
        N = normalizer(G, H).member_set
        x = next(g for g in pel if g in N and g not in H)
        H = generated_closure(G, H.members + (x,))
    return H


def _p_regular_closed(G: Group, members: Iterable[int], p: int) -> tuple[int, ...] | None:
    reg = [g for g in members if G.orders[g] % p]
    rs = set(reg)
    t = G.table
    for a in reg:
        row = t[a]
        for b in reg:
            if row[b] not in rs:
                return None
    return tuple(reg)


def normal_p_complement(G: Group, p: int) -> Subgroup | None:
    """The normal p-complement if one exists.

    It exists exactly when the p-regular elements are closed under
    multiplication, and is then that set.
    """
    reg = _p_regular_closed(G, range(G.n), p)
    return None if reg is None else Subgroup(G, reg)


def has_normal_p_complement(H: Subgroup, p: int) -> bool:
    return _p_regular_closed(H.parent, H.members, p) is not None


def burnside_hypothesis(G: Group, p: int) -> bool:
    P = sylow_subgroup(G, p)
    return centralizer(G, P.members).members == normalizer(G, P).members


def o_p_residual(G: Group, p: int) -> Subgroup:
    """O^p(G): generated by the p-regular elements."""
    return generated_closure(G, p_regular_elements(G, p))


def quotient(G: Group, N: Subgroup) -> tuple[Group, tuple[int, ...]]:
    """G/N with cosets ordered by smallest member; returns (group, projection)."""
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    t = G.table
    coset_of = [-1] * G.n
    reps = []
    for g in range(G.n):
        if coset_of[g] >= 0:
            continue
        k = len(reps)
        reps.append(g)
        for h in N.members:
            coset_of[t[g][h]] = k
    table = [[coset_of[t[a][b]] for b in reps] for a in reps]
    return Group(table), tuple(coset_of)

