"""Ordinary character tables by Dixon's method, with exact cyclotomic values.

Class sums act on the centre of the group algebra through the class
multiplication coefficients; the central characters are their common
eigenvectors.  Over a prime q = 1 mod exp(G) these split completely, so the
eigenvectors are found by repeated eigenspace splitting mod q, and every
value is lifted back to Z[zeta_e] by counting eigenvalue multiplicities.
The finished table is checked against both orthogonality relations in exact
arithmetic before it is returned.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt

from . import _modp
from .cyclo.field import ONE, Cyclotomic, conj, cyc_sum, parse_cyclotomic, serialize
from .errors import GroupMismatch, LiftFailure, TooLarge
from .group import DEFAULT_CAP, ConjugacyClasses, Group, Subgroup

DEFAULT_SEED = 20240601
_MAX_SPLIT_TRIES = 64


@dataclass(frozen=True)
class ClassFunction:
    group: Group = field(repr=False, compare=False)
    values: tuple[Cyclotomic, ...]

    def __call__(self, g: int) -> Cyclotomic:
        return self.values[self.group.classes.class_of[g]]

    def __len__(self):
        return len(self.values)

    def __add__(self, other: ClassFunction) -> ClassFunction:
        _same_group(self, other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        _same_group(self, other)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            _same_group(self, other)
            return ClassFunction(self.group, tuple(a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(self.group, tuple(a * other for a in self.values))

    __rmul__ = __mul__

    def conjugate(self) -> ClassFunction:
        return ClassFunction(self.group, tuple(conj(v) for v in self.values))

    def serialized(self) -> list[str]:
        return [serialize(v) for v in self.values]


class Character(ClassFunction):
    @property
    def degree(self) -> int:
        return int(self.values[0].to_rational())

    def is_trivial(self) -> bool:
        return all(v == ONE for v in self.values)


def _same_group(a: ClassFunction, b: ClassFunction):
    if a.group is not b.group:
        raise GroupMismatch("class functions live on different groups")


def trivial_character(G: Group) -> Character:
    return Character(G, tuple(ONE for _ in range(len(G.classes))))


@dataclass(frozen=True)
class CharacterTable:
    group: Group = field(repr=False, compare=False)
    classes: ConjugacyClasses = field(repr=False)
    irreducibles: tuple[Character, ...]

    def __len__(self):
        return len(self.irreducibles)

    def __getitem__(self, i: int) -> Character:
        return self.irreducibles[i]

    def __iter__(self):
        return iter(self.irreducibles)

    @property
    def degrees(self) -> list[int]:
        return [chi.degree for chi in self.irreducibles]

    @cached_property
    def trivial_index(self) -> int:
        return next(i for i, chi in enumerate(self.irreducibles) if chi.is_trivial())


# -- inner products and friends -------------------------------------------------


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Cyclotomic:
    _same_group(phi, psi)
    G = phi.group
    sizes = G.classes.sizes
    total = cyc_sum(s * a * conj(b) for s, a, b in zip(sizes, phi.values, psi.values))
    return total.scale(Fraction(1, G.n))


def restrict(chi: ClassFunction, H) -> ClassFunction:
    """Restriction to ``H`` (a Subgroup, or an (group, embedding) pair)."""
    if isinstance(H, Subgroup):
        if H.parent is not chi.group:
            raise GroupMismatch("subgroup of a different group")
        Hg, emb = H.as_group()
    else:
        Hg, emb = H
    return ClassFunction(Hg, tuple(chi(emb[r]) for r in Hg.classes.reps))


def inflate(chibar: ClassFunction, G: Group, projection) -> ClassFunction:
    """Pull back a class function of G/N along the projection G -> G/N."""
    if len(projection) != G.n:
        raise GroupMismatch("projection does not match the group")
    cls = Character if isinstance(chibar, Character) else ClassFunction
    return cls(G, tuple(chibar(projection[r]) for r in G.classes.reps))


def kernel(chi: ClassFunction) -> Subgroup:
    G = chi.group
    d = chi.values[0]
    members = tuple(g for g in range(G.n) if chi(g) == d)
    return Subgroup(G, members)


# -- Dixon's algorithm ------------------------------------------------------------


def class_multiplication_coefficients(G: Group) -> list[list[list[int]]]:
    """a[i][j][k] = #{(x, y) in K_i x K_j : x y = rep(K_k)}."""
    cc = G.classes
    k = len(cc)
    t, inv, cof = G.table, G.inverses, cc.class_of
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for kk, z in enumerate(cc.reps):
        for i in range(k):
            ai = a[i]
            for x in cc.members(i):
                ai[cof[t[inv[x]][z]]][kk] += 1
    return a


def dixon_prime(order: int, exponent: int) -> int:
    r = isqrt(order)
    if r * r < order:
        r += 1
    q = 2 * r + 1
    q += (1 - q) % exponent
    while not _modp.is_prime(q):
        q += exponent
    return q


def _split_common_eigenspaces(mats, k, q, rng) -> list[list[int]]:
    """Common eigenvectors of commuting, simultaneously diagonalizable matrices."""
    done = []
    todo = [[[int(i == j) for j in range(k)] for i in range(k)]]
    while todo:
        basis = todo.pop()
        if len(basis) == 1:
            done.append(basis[0])
            continue
        basis, piv = _modp.rref(basis, q)
        d = len(basis)
        for _ in range(_MAX_SPLIT_TRIES):
            coeffs = [rng.randrange(q) for _ in mats]
            A = [[sum(c * M[r][s] for c, M in zip(coeffs, mats)) % q for s in range(k)] for r in range(k)]
            images = [_modp.matvec(A, b, q) for b in basis]
            R = [[images[c][piv[r]] for c in range(d)] for r in range(d)]
            parts = []
            found = 0
            for lam in range(q):
                shifted = [[(R[r][c] - (lam if r == c else 0)) % q for c in range(d)] for r in range(d)]
                ns = _modp.nullspace(shifted, q)
                if ns:
                    vecs = [[sum(u[i] * basis[i][s] for i in range(d)) % q for s in range(k)] for u in ns]
                    parts.append(vecs)
                    found += len(ns)
                    if found == d:
                        break
            if found != d:
                raise LiftFailure("class matrices are not diagonalizable over F_q")
            if len(parts) > 1:
                todo.extend(parts)
                break
        else:
            raise LiftFailure("eigenspace splitting did not converge")
    return done


def _sort_key(chi: Character):
    return (0 if chi.is_trivial() else 1, chi.degree, chi.serialized())


def character_table(G: Group, *, seed: int = DEFAULT_SEED, cap: int = DEFAULT_CAP) -> CharacterTable:
    if G.n > cap:
        raise TooLarge(f"group of order {G.n} exceeds cap {cap}")
    cc = G.classes
    k = len(cc)
    n, e = G.n, G.exponent
    sizes = cc.sizes
    cof = cc.class_of
    inv_class = [cof[G.inverses[r]] for r in cc.reps]

    q = dixon_prime(n, e)
    a = class_multiplication_coefficients(G)
    mats = [[[a[i][j][l] % q for l in range(k)] for j in range(k)] for i in range(k)]
    rng = random.Random(seed)
    vectors = _split_common_eigenspaces(mats, k, q, rng)
    if len(vectors) != k:
        raise LiftFailure(f"found {len(vectors)} central characters, expected {k}")

    z_e = pow(_modp.primitive_root(q), (q - 1) // e, q)
    powers = {r: G.cyclic(r) for r in cc.reps}
    chars = []
    for v in vectors:
        if v[0] == 0:
            raise LiftFailure("central character vanishes at the identity class")
        c0 = pow(v[0], -1, q)
        omega = [x * c0 % q for x in v]
        S = sum(omega[j] * omega[inv_class[j]] * pow(sizes[j], -1, q) for j in range(k)) % q
        target = n * pow(S, -1, q) % q
        deg = next((d for d in range(1, isqrt(n) + 1) if d * d % q == target and n % d == 0), None)
        if deg is None:
            raise LiftFailure("no admissible degree")
        modvals = [omega[j] * deg * pow(sizes[j], -1, q) % q for j in range(k)]
        values = []
        for j, r in enumerate(cc.reps):
            pw = powers[r]
            o = len(pw)
            zo_inv = pow(z_e, (e // o) * (q - 2), q)  # (z_e^(e/o))^-1
            io = pow(o, -1, q)
            mult = {}
            total = 0
            for i in range(o):
                w = pow(zo_inv, i, q)
                m = io * sum(modvals[cof[x]] * pow(w, l, q) for l, x in enumerate(pw)) % q
                if m > deg:
                    raise LiftFailure(f"multiplicity {m} exceeds degree {deg}")
                if m:
                    mult[i] = m
                total += m
            if total != deg:
                raise LiftFailure("multiplicities do not sum to the degree")
            values.append(Cyclotomic.from_exponents(o, mult))
        chars.append(Character(G, tuple(values)))

    chars.sort(key=_sort_key)
    table = CharacterTable(G, cc, tuple(chars))
    problem = orthogonality_defect(table)
    if problem:
        raise LiftFailure(problem)
    return table


def orthogonality_defect(table: CharacterTable) -> str | None:
    """None if both orthogonality relations hold exactly, else a description."""
    G = table.group
    cc = table.classes
    sizes = cc.sizes
    rows = [chi.values for chi in table]
    crow = [tuple(conj(v) for v in r) for r in rows]
    k = len(cc)
    if len(rows) != k:
        return f"{len(rows)} characters for {k} classes"
    for i in range(k):
        for j in range(i, k):
            s = cyc_sum(sizes[c] * rows[i][c] * crow[j][c] for c in range(k))
            if s != (G.n if i == j else 0):
                return f"row orthogonality fails for characters {i}, {j}"
    for c in range(k):
        centralizer_order = G.n // sizes[c]
        for d in range(c, k):
            s = cyc_sum(rows[i][c] * crow[i][d] for i in range(k))
            if s != (centralizer_order if c == d else 0):
                return f"column orthogonality fails for classes {c}, {d}"
    if sum(chi.degree ** 2 for chi in table) != G.n:
        return "sum of squared degrees differs from |G|"
    return None


# -- serialization ------------------------------------------------------------------


def table_to_dict(table: CharacterTable) -> dict:
    G = table.group
    cc = table.classes
    return {
        "order": G.n,
        "classes": [
            {"rep": r, "size": s, "element_order": G.orders[r]} for r, s in zip(cc.reps, cc.sizes)
        ],
        "characters": [chi.serialized() for chi in table],
    }


def table_to_json(table: CharacterTable) -> str:
    return json.dumps(table_to_dict(table), indent=1, sort_keys=True) + "\n"


def table_from_dict(G: Group, data: dict) -> CharacterTable:
    """Rebuild a table for ``G``; raises ValueError if the data do not fit."""
    cc = G.classes
    if data.get("order") != G.n:
        raise ValueError("order mismatch")
    expected = [{"rep": r, "size": s, "element_order": G.orders[r]} for r, s in zip(cc.reps, cc.sizes)]
    if data.get("classes") != expected:
        raise ValueError("class data mismatch")
    chars = tuple(Character(G, tuple(parse_cyclotomic(v) for v in row)) for row in data["characters"])
    table = CharacterTable(G, cc, chars)
    problem = orthogonality_defect(table)
    if problem:
        raise ValueError(problem)
    return table
