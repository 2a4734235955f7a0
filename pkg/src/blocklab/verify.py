"""Instance checks for the block-theoretic proof of Burnside's normal
p-complement theorem.

Each checker looks at one concrete (G, p) and returns a :class:`CheckRecord`
whose status is ``pass``, ``fail`` or ``not-applicable``.  Every statement
checked here is a theorem, so a ``fail`` always means an engine defect.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb

import numpy as np

from .blocks import Block, block_partition, height_zero_members, principal_block, principal_block_is_quotient_lift
from .chartab import DEFAULT_SEED, CharacterTable, ClassFunction, character_table, inner_product, trivial_character
from .cyclo.checks import p_power_root_sum_check, siegel_bound_check
from .cyclo.field import (
    ONE,
    Cyclotomic,
    _power_rows,
    conj,
    cyc_sum,
    galois_conjugates,
    is_rational_integer,
    is_real,
    norm_abs_squared,
    root_of_unity,
    root_of_unity_order,
    serialize,
)
from .cyclo.intervals import abs_enclosure, real_sign
from .errors import TheoremViolation
from .group import (
    Group,
    Subgroup,
    burnside_hypothesis,
    centralizer,
    has_normal_p_complement,
    is_normal,
    is_p_power,
    normal_p_complement,
    normal_subgroups,
    normalizer,
    o_p_residual,
    p_elements,
    p_regular_elements,
    quotient,
    sylow_subgroup,
)

CHECK_IDS = (
    "thm1",
    "lem2.1",
    "lem2.2",
    "lem2.3/E2",
    "lem2.4",
    "lem2.5",
    "lem2.6",
    "sec3/E3",
    "sec3/E4",
    "sec3/kronecker",
    "sec3/E6",
    "sec3/E7",
    "sec3/E8",
    "sec3/E9",
    "sec3/E10",
    "sec1/siegel",
    "sec1/thompson-third",
)

PASS, FAIL, NA = "pass", "fail", "not-applicable"
SCHEMA_VERSION = 1


@dataclass
class CheckRecord:
    id: str
    status: str
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "witness": _jsonable(self.witness)}


def _jsonable(x):
    if isinstance(x, Cyclotomic):
        return serialize(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _record(check_id: str, ok: bool, witness: dict) -> CheckRecord:
    return CheckRecord(check_id, PASS if ok else FAIL, witness)


def _na(check_id: str, reason: str) -> CheckRecord:
    return CheckRecord(check_id, NA, {"reason": reason})


# -- shared per-instance data --------------------------------------------------


class Instance:
    """Everything the checkers share for one (G, p)."""

    def __init__(self, G: Group, p: int, table: CharacterTable | None = None, *, seed: int = DEFAULT_SEED):
        self.G = G
        self.p = p
        self.seed = seed
        self.table = table if table is not None else character_table(G, seed=seed)

    @cached_property
    def P(self) -> Subgroup:
        return sylow_subgroup(self.G, self.p)

    @cached_property
    def hypothesis(self) -> bool:
        return burnside_hypothesis(self.G, self.p)

    @cached_property
    def blocks(self) -> list[Block]:
        return block_partition(self.table, self.p)

    @cached_property
    def B0(self) -> Block:
        return principal_block(self.blocks)

    @cached_property
    def p_regular(self) -> list[int]:
        return p_regular_elements(self.G, self.p)

    @cached_property
    def p_regular_classes(self) -> list[int]:
        cc = self.G.classes
        return [k for k, r in enumerate(cc.reps) if self.G.orders[r] % self.p]

    @cached_property
    def P_sharp(self) -> list[int]:
        return [z for z in self.P.members if z != self.G.identity]

    @cached_property
    def sections(self) -> list[tuple[int, list[int] | None]]:
        """(z, C_G(z)° if C_G(z) has a normal p-complement else None) per nonidentity p-element z."""
        G, p = self.G, self.p
        out = []
        for z in p_elements(G, p):
            if z == G.identity:
                continue
            C = centralizer(G, [z])
            if has_normal_p_complement(C, p):
                out.append((z, [y for y in C.members if G.orders[y] % p]))
            else:
                out.append((z, None))
        return out

    @property
    def index_P(self) -> int:
        return self.G.n // self.P.order


def section_constant(inst: Instance, psi: ClassFunction) -> bool:
    G = inst.G
    t = G.table
    for z, ys in inst.sections:
        if ys is None:
            continue
        v = psi(z)
        if any(psi(t[z][y]) != v for y in ys):
            return False
    return True


# -- normal p-complement -------------------------------------------------------


def verify_burnside(G: Group, p: int) -> CheckRecord:
    hyp = burnside_hypothesis(G, p)
    K = normal_p_complement(G, p)
    P = sylow_subgroup(G, p)
    w = {"hypothesis": hyp, "sylow_order": P.order, "complement_order": None if K is None else K.order}
    if K is not None:
        w["complement_normal"] = is_normal(G, K)
        w["complement_index_is_p_part"] = K.order * P.order == G.n
        w["meets_sylow_trivially"] = len(K.member_set & P.member_set) == 1
        ok = w["complement_normal"] and w["complement_index_is_p_part"] and w["meets_sylow_trivially"]
        if not hyp:
            w["info"] = "complement exists without the hypothesis (the converse is not claimed)"
    else:
        ok = not hyp
    return _record("thm1", ok, w)


# -- constancy on p-sections ---------------------------------------------------


def verify_section_constancy(G: Group, p: int, table: CharacterTable, B0: Block, inst: Instance | None = None) -> CheckRecord:
    inst = inst or Instance(G, p, table)
    t = G.table
    tested = 0
    pairs = 0
    bad = []
    for z, ys in inst.sections:
        if ys is None:
            continue
        tested += 1
        for i in B0.members:
            psi = table[i]
            v = psi(z)
            for y in ys:
                pairs += 1
                if psi(t[z][y]) != v:
                    bad.append({"z": z, "y": y, "character": i})
    if not tested:
        return _na("lem2.1", "no nonidentity p-element has a centralizer with a normal p-complement")
    w = {"elements_z": tested, "evaluations": pairs, "principal_block": list(B0.members)}
    if bad:
        w["counterexamples"] = bad[:5]
    return _record("lem2.1", not bad, w)


# -- fusion control ------------------------------------------------------------


def verify_fusion(G: Group, p: int) -> CheckRecord:
    if not burnside_hypothesis(G, p):
        return _na("lem2.2", "C_G(P) != N_G(P)")
    P = sylow_subgroup(G, p)
    Ps = P.member_set
    cc = G.classes
    fused = []
    for z in P.members:
        meet = [w for w in cc.members(cc.class_of[z]) if w in Ps]
        if meet != [z]:
            fused.append({"element": z, "conjugates_in_P": meet})
    cyclics = {}
    for z in P.members:
        U = frozenset(G.cyclic(z))
        cyclics.setdefault(U, z)
    cyc_fused = []
    for U, z in cyclics.items():
        for g in range(G.n):
            zg = G.conj(z, g)
            if zg in Ps and zg not in U:
                cyc_fused.append({"generator": z, "g": g})
                break
    w = {"sylow_order": P.order, "elements_checked": P.order, "cyclic_subgroups_checked": len(cyclics)}
    if fused or cyc_fused:
        w["element_fusion"] = fused[:5]
        w["cyclic_fusion"] = cyc_fused[:5]
    return _record("lem2.2", not fused and not cyc_fused, w)


# -- split inner products ------------------------------------------------------


def inner_product_sides(inst: Instance, psi: ClassFunction, eta: ClassFunction) -> tuple[Cyclotomic, Cyclotomic]:
    G = inst.G
    sizes = G.classes.sizes
    lhs = inner_product(psi, eta).scale(G.n)
    reg = cyc_sum(sizes[k] * psi.values[k] * conj(eta.values[k]) for k in inst.p_regular_classes)
    loc = cyc_sum(psi(z) * conj(eta(z)) for z in inst.P_sharp)
    return lhs, reg + loc.scale(inst.index_P)


def verify_p_local_inner_product(G: Group, p: int, psi: ClassFunction, eta: ClassFunction, inst: Instance | None = None) -> CheckRecord:
    inst = inst or Instance(G, p)
    reason = _e2_precondition(inst)
    if reason:
        return _na("lem2.3/E2", reason)
    for name, f in (("psi", psi), ("eta", eta)):
        if not section_constant(inst, f):
            return _na("lem2.3/E2", f"{name} is not constant on p-sections")
    lhs, rhs = inner_product_sides(inst, psi, eta)
    return _record("lem2.3/E2", lhs == rhs, {"lhs": lhs, "rhs": rhs})


def _e2_precondition(inst: Instance) -> str | None:
    if not inst.hypothesis:
        return "C_G(P) != N_G(P), so P# does not represent the p-classes"
    if any(ys is None for _, ys in inst.sections):
        return "some C_G(z) lacks a normal p-complement"
    return None


def verify_p_local_inner_products(inst: Instance) -> CheckRecord:
    """The split inner product for every pair drawn from Irr(B0) and the trivial character."""
    reason = _e2_precondition(inst)
    if reason:
        return _na("lem2.3/E2", reason)
    table = inst.table
    funcs = {i: table[i] for i in inst.B0.members}
    funcs.setdefault(table.trivial_index, trivial_character(inst.G))
    skipped = [i for i, f in funcs.items() if not section_constant(inst, f)]
    usable = sorted(i for i in funcs if i not in skipped)
    bad = []
    pairs = 0
    for i in usable:
        for j in usable:
            lhs, rhs = inner_product_sides(inst, funcs[i], funcs[j])
            pairs += 1
            if lhs != rhs:
                bad.append({"psi": i, "eta": j, "lhs": lhs, "rhs": rhs})
    if not pairs:
        return _na("lem2.3/E2", "no character in B0 is constant on p-sections")
    one = trivial_character(inst.G)
    G = inst.G
    w = {
        "pairs": pairs,
        "characters": usable,
        "section_nonconstant": skipped,
        "order_identity": {
            "order": G.n,
            "p_regular": len(inst.p_regular),
            "index_P_times_P_sharp": inst.index_P * len(inst.P_sharp),
        },
    }
    lhs, rhs = inner_product_sides(inst, one, one)
    ok = not bad and lhs == rhs == G.n
    if bad:
        w["failures"] = bad[:5]
    return _record("lem2.3/E2", ok, w)


# -- p-power root sums ---------------------------------------------------------

_EXHAUSTIVE_BUDGET = 60_000
_RANDOM_SAMPLES = 2_000
_CYCLE_UNIONS_CAP = 6_000
_PUBLIC_ROUTE_SAMPLES = 200


def _multisets_to_counts(multisets, N: int) -> np.ndarray:
    out = np.zeros((len(multisets), N), dtype=np.int64)
    for r, ms in enumerate(multisets):
        for e in ms:
            out[r, e] += 1
    return out


@lru_cache(maxsize=None)
def root_sum_family(p: int, seed: int = DEFAULT_SEED) -> list[tuple[str, list[tuple[int, ...]]]]:
    """Deterministic multisets of exponents of zeta_{p^3}, grouped by origin."""
    N = p ** 3
    rng = random.Random(seed * 1_000_003 + p)
    families = []
    for k in (1, 2, 3):
        step = p ** (3 - k)
        roots = [step * i for i in range(p ** k)]
        total, size = 0, 0
        while size < 3 * p:
            nxt = comb(len(roots) + size, size + 1)
            if total + nxt > _EXHAUSTIVE_BUDGET:
                break
            total += nxt
            size += 1
        ms = [c for s in range(1, size + 1) for c in itertools.combinations_with_replacement(roots, s)]
        families.append((f"exhaustive order|p^{k} size<={size}", ms))

    # unions of rotated full p-cycles, each also perturbed by one extra root
    base = [i * p * p for i in range(p)]  # the p-th roots at conductor p^3
    rotations = range(p * p)
    unions = [c for s in (1, 2, 3) for c in itertools.combinations_with_replacement(rotations, s)]
    if len(unions) > _CYCLE_UNIONS_CAP:
        unions = rng.sample(unions, _CYCLE_UNIONS_CAP)
    ms = []
    for u in unions:
        terms = tuple(sorted((r + b) % N for r in u for b in base))
        ms.append(terms)
        ms.append(tuple(sorted(terms + (rng.randrange(N),))))
    families.append(("rotated p-cycle unions", ms))

    ms = []
    for _ in range(_RANDOM_SAMPLES):
        s = rng.randint(1, 3 * p)
        ms.append(tuple(sorted(rng.randrange(N) for _ in range(s))))
    families.append(("seeded random", ms))
    return families


@lru_cache(maxsize=None)
def _root_sum_result(p: int, seed: int) -> tuple[bool, dict]:
    N = p ** 3
    rows = np.asarray(_power_rows(N), dtype=np.int64)
    # float64 products are exact: every partial sum stays far below 2^53
    assert np.abs(rows).max() * 3 * p * N < 2 ** 53
    frows = rows.astype(np.float64)
    summary = []
    violations = []
    for label, ms in root_sum_family(p, seed):
        counts = _multisets_to_counts(ms, N)
        vanish = ~(counts.astype(np.float64) @ frows).any(axis=1)
        sizes = counts.sum(axis=1)
        bad = np.flatnonzero(vanish & (sizes % p != 0))
        summary.append({"family": label, "sums": len(ms), "vanishing": int(vanish.sum())})
        violations.extend(list(ms[i]) for i in bad[:5])
    # the same statement through the public Cyclotomic route on a seeded subset
    rng = random.Random(seed + p)
    fam = root_sum_family(p, seed)
    pool = fam[-2][1] + fam[-1][1]
    agree = True
    for ms in rng.sample(pool, min(_PUBLIC_ROUTE_SAMPLES, len(pool))):
        eps = [root_of_unity(N, e) for e in ms]
        try:
            res = p_power_root_sum_check(eps, p)
        except TheoremViolation:
            violations.append(list(ms))
            continue
        counts = _multisets_to_counts([ms], N)
        if res.vanishes != (not (counts @ rows).any()):
            agree = False
    w = {"p": p, "families": summary, "public_route_agrees": agree}
    if violations:
        w["violations"] = violations[:5]
    return (not violations and agree), w


def verify_root_sum_divisibility(p: int, samples=None, *, seed: int = DEFAULT_SEED) -> CheckRecord:
    """Vanishing sums of p-power roots of unity have a multiple of p terms.

    ``samples`` may supply extra lists of Cyclotomic roots to test.
    """
    ok, w = _root_sum_result(p, seed)
    w = dict(w)
    if samples:
        extra = 0
        for eps in samples:
            try:
                res = p_power_root_sum_check(eps, p)
                extra += res.vanishes
            except TheoremViolation:
                ok = False
        w["extra_samples"] = len(samples)
        w["extra_vanishing"] = extra
    return _record("lem2.4", ok, w)


def _height_zero_nonvanishing(inst: Instance) -> tuple[bool, dict]:
    """Height-zero characters of B0 never vanish on p-elements."""
    G, p = inst.G, inst.p
    cc = G.classes
    pclasses = [k for k, r in enumerate(cc.reps) if is_p_power(G.orders[r], p)]
    zeros = []
    for i in height_zero_members(inst.B0):
        for k in pclasses:
            if inst.table[i].values[k].is_zero():
                zeros.append({"character": i, "class": k})
    return not zeros, {"height_zero_characters": height_zero_members(inst.B0), "p_classes": len(pclasses), "zeros": zeros}


# -- residual subgroup and quotients -------------------------------------------


def _is_simple_nonabelian(G: Group) -> bool:
    return not G.is_abelian and len(normal_subgroups(G)) == 2


def verify_residual_and_quotients(G: Group, p: int) -> tuple[CheckRecord, CheckRecord]:
    hyp = burnside_hypothesis(G, p)
    O = o_p_residual(G, p)
    # O^p(G) and the complement
    if hyp:
        w = {"o_p_order": O.order, "order": G.n}
        if O.order == G.n:
            ok = True
            w["note"] = "O^p(G) = G"
        else:
            Og, _ = O.as_group()
            w["index_is_p_power"] = is_p_power(G.n // O.order, p)
            w["residual_normal"] = is_normal(G, O)
            w["hypothesis_in_residual"] = burnside_hypothesis(Og, p)
            ok = w["index_is_p_power"] and w["residual_normal"] and w["hypothesis_in_residual"]
        r25 = _record("lem2.5", ok, w)
    elif G.n % p == 0 and _is_simple_nonabelian(G):
        r25 = _record("lem2.5", O.order == G.n, {"simple": True, "o_p_order": O.order, "order": G.n})
    else:
        r25 = _na("lem2.5", "C_G(P) != N_G(P)")
    # quotients by every normal subgroup
    if not hyp:
        return r25, _na("lem2.6", "C_G(P) != N_G(P)")
    P = sylow_subgroup(G, p)
    bad = []
    normals = normal_subgroups(G)
    for N in normals:
        Q, proj = quotient(G, N)
        Pbar = Subgroup(Q, tuple({proj[x] for x in P.members}))
        if centralizer(Q, Pbar.members).members != normalizer(Q, Pbar).members:
            bad.append(N.order)
    w = {"normal_subgroups": len(normals), "normal_orders": [N.order for N in normals]}
    if bad:
        w["failing_normal_orders"] = bad
    return r25, _record("lem2.6", not bad, w)


# -- principal block chain -----------------------------------------------------


def _abs_sum(values_mult: list[tuple[Cyclotomic, int]]) -> tuple[Fraction, Fraction]:
    lo = hi = Fraction(0)
    for v, m in values_mult:
        a, b = abs_enclosure(v)
        lo += m * a
        hi += m * b
    return lo, hi


def verify_principal_block_chain(G: Group, p: int, table: CharacterTable, B0: Block, inst: Instance | None = None) -> list[CheckRecord]:
    inst = inst or Instance(G, p, table)
    ids = ("sec3/E3", "sec3/E4", "sec3/kronecker", "sec3/E6", "sec3/E7", "sec3/E8", "sec3/E9", "sec3/E10")
    if not inst.hypothesis:
        return [_na(i, "C_G(P) != N_G(P)") for i in ids]
    if G.n % p:
        return [_na(i, "p does not divide |G|") for i in ids]
    zetas = [i for i in B0.members if i != table.trivial_index]
    if not zetas:
        return [_na(i, "principal block has no nontrivial character") for i in ids]

    P = inst.P
    nP = P.order
    idx = inst.index_P
    sizes = G.classes.sizes
    regc = inst.p_regular_classes
    n_reg = len(inst.p_regular)
    Psharp = inst.P_sharp
    ok = {i: True for i in ids}
    wit = {i: {"characters": zetas, "per_character": {}} for i in ids}
    del wit["sec3/E8"]["per_character"]

    # |G| = |G°| + |G:P|(|P| - 1), hence |G:P| = |G°|
    ok["sec3/E8"] = n_reg == idx and G.n == n_reg + idx * (nP - 1)
    wit["sec3/E8"].update({"index_P": idx, "p_regular": n_reg, "order": G.n, "P_sharp": nP - 1})

    for i in zetas:
        zeta = table[i]
        key = str(i)
        vals_P = [zeta(z) for z in Psharp]
        sq_P = [norm_abs_squared(v) for v in vals_P]
        s2 = cyc_sum(sq_P)
        norm = inner_product(zeta, zeta)

        # height zero, and |G| = |G|<zeta,zeta> >= |G:P| sum_{P#} |zeta|^2
        h = B0.height_of(i)
        e3 = h == 0 and norm == ONE and s2.is_rational() and G.n >= idx * s2.to_rational()
        ok["sec3/E3"] &= e3
        wit["sec3/E3"]["per_character"][key] = {"height": h, "inner": norm, "sum_sq_P_sharp": s2, "bound": Fraction(G.n, idx)}

        # The P# bound in its equality case, and each |zeta(z)|^2 equal to 1
        siegel = [siegel_bound_check(a).kind for a in sq_P]
        e4 = s2 == nP - 1 and all(k == "is-one" for k in siegel)
        ok["sec3/E4"] &= e4
        wit["sec3/E4"]["per_character"][key] = {"sum_sq_P_sharp": s2, "P_order_minus_1": nP - 1, "siegel_all_one": all(k == "is-one" for k in siegel)}

        # root-of-unity values on P#, consistent with |sigma(zeta(z))| = 1 for all sigma
        orders = [root_of_unity_order(v) for v in vals_P]
        kron = all(o is not None for o in orders) and all(
            norm_abs_squared(c) == ONE for v in vals_P for c in galois_conjugates(v)
        )
        ok["sec3/kronecker"] &= kron
        wit["sec3/kronecker"]["per_character"][key] = {"root_orders": sorted(set(o for o in orders if o)), "all_roots": kron}

        # sum_{G°} |zeta|^2 = |G:P|
        reg_vals = [(zeta.values[k], sizes[k]) for k in regc]
        s_reg = cyc_sum(m * norm_abs_squared(v) for v, m in reg_vals)
        ok["sec3/E6"] &= s_reg == idx
        wit["sec3/E6"]["per_character"][key] = {"sum_sq_p_regular": s_reg, "index_P": idx}

        # a = sum_{P#} zeta is a rational integer, a = -1, -|G:P| a = sum_{G°} zeta
        a = cyc_sum(vals_P)
        t_reg = cyc_sum(m * v for v, m in reg_vals)
        e7 = is_rational_integer(a) and a == -1 and t_reg == -idx * a
        ok["sec3/E7"] &= e7
        wit["sec3/E7"]["per_character"][key] = {"a": a, "sum_p_regular": t_reg}

        # sum |zeta| >= |sum zeta| = |G°||a| >= |G°|
        abs_lo, abs_hi = _abs_sum(reg_vals)
        t_abs_sq = norm_abs_squared(t_reg)
        a_abs = abs(a.to_rational()) if a.is_rational() else None
        e9 = (
            a_abs is not None
            and t_abs_sq == (n_reg * a_abs) ** 2
            and a_abs >= 1
            and abs_lo >= n_reg * a_abs
        )
        ok["sec3/E9"] &= e9
        wit["sec3/E9"]["per_character"][key] = {
            "sum_abs_lower": abs_lo,
            "sum_abs_upper": abs_hi,
            "abs_sum": n_reg * a_abs if a_abs is not None else None,
            "abs_a": a_abs,
        }

        # |G°| = sum |zeta|^2 >= (sum |zeta|)^2 / |G°| >= sum |zeta|, with equality
        # throughout; then zeta is real and nonnegative on G°, and zeta = 1 there
        exact = abs_lo == abs_hi
        s_abs = abs_lo
        cs = exact and s_reg == n_reg and s_reg.to_rational() >= s_abs * s_abs / n_reg >= s_abs
        equality = exact and s_abs == n_reg and a_abs == 1
        nonneg = all(is_real(v) and real_sign(v) >= 0 for v, _ in reg_vals)
        dev = cyc_sum(m * norm_abs_squared(v - 1) for v, m in reg_vals)
        ones = all(v == ONE for v, _ in reg_vals)
        e10 = cs and equality and nonneg and dev.is_zero() and ones
        ok["sec3/E10"] &= e10
        wit["sec3/E10"]["per_character"][key] = {
            "sum_sq": s_reg,
            "sum_abs": s_abs if exact else None,
            "real_nonnegative": nonneg,
            "sum_sq_deviation_from_1": dev,
            "trivial_on_p_regular": ones,
        }

    return [_record(i, ok[i], wit[i]) for i in ids]


# -- table-wide bounds ---------------------------------------------------------


def verify_siegel_on_table(table: CharacterTable) -> CheckRecord:
    """Siegel's bound on every nonzero |chi(g)|^2."""
    counts = {"is-one": 0, "at-least-three-halves": 0, "not-totally-positive": 0}
    least = None
    seen = set()
    bad = []
    for i, chi in enumerate(table):
        for k, v in enumerate(chi.values):
            a = norm_abs_squared(v)
            if a.is_zero() or a in seen:
                continue
            seen.add(a)
            try:
                res = siegel_bound_check(a)
            except TheoremViolation:
                bad.append({"character": i, "class": k, "value": a})
                continue
            counts[res.kind] += 1
            if res.kind == "at-least-three-halves" and (least is None or res.average < least):
                least = res.average
    ok = not bad and counts["not-totally-positive"] == 0
    w = {"distinct_values": len(seen), "counts": counts, "least_average_above_one": least}
    if bad:
        w["violations"] = bad[:5]
    return _record("sec1/siegel", ok, w)


def verify_thompson_third(table: CharacterTable) -> CheckRecord:
    G = table.group
    sizes = table.classes.sizes
    counts = []
    for chi in table:
        c = sum(s for s, v in zip(sizes, chi.values) if v.is_zero() or root_of_unity_order(v) is not None)
        counts.append(c)
    ok = all(3 * c >= G.n for c in counts)
    return _record("sec1/thompson-third", ok, {"order": G.n, "counts": counts, "min_fraction": Fraction(min(counts), G.n)})


# -- the report ----------------------------------------------------------------


@dataclass
class VerificationReport:
    group_id: str
    order: int
    p: int
    seed: int
    hypothesis_holds: bool
    blocks: list[dict]
    records: list[CheckRecord]

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    def record(self, check_id: str) -> CheckRecord:
        return next(r for r in self.records if r.id == check_id)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "group": {"id": self.group_id, "order": self.order},
            "p": self.p,
            "seed": self.seed,
            "hypothesis_holds": self.hypothesis_holds,
            "blocks": self.blocks,
            "checks": [r.to_dict() for r in self.records],
        }


def verify_instance(
    G: Group,
    p: int,
    *,
    group_id: str = "anonymous",
    table: CharacterTable | None = None,
    seed: int = DEFAULT_SEED,
    checks: list[str] | None = None,
) -> VerificationReport:
    inst = Instance(G, p, table, seed=seed)
    wanted = set(CHECK_IDS if checks is None else checks)
    unknown = wanted - set(CHECK_IDS)
    if unknown:
        raise ValueError(f"unknown check ids: {', '.join(sorted(unknown))}")
    out: dict[str, CheckRecord] = {}

    def want(*ids):
        return any(i in wanted for i in ids)

    if want("thm1"):
        rec = verify_burnside(G, p)
        K = normal_p_complement(G, p)
        if K is not None:
            # classical cross-check: Irr(B0) = Irr(G/K) inflated
            same = principal_block_is_quotient_lift(inst.table, inst.B0, K)
            rec.witness["classical_cross_check"] = {"principal_block_is_quotient_lift": same}
            if not same:
                rec.status = FAIL
        out["thm1"] = rec
    if want("lem2.1"):
        out["lem2.1"] = verify_section_constancy(G, p, inst.table, inst.B0, inst)
    if want("lem2.2"):
        out["lem2.2"] = verify_fusion(G, p)
    if want("lem2.3/E2"):
        out["lem2.3/E2"] = verify_p_local_inner_products(inst)
    if want("lem2.4"):
        rec = verify_root_sum_divisibility(p, seed=seed)
        ok_chars, w_chars = _height_zero_nonvanishing(inst)
        rec.witness["character_values"] = w_chars
        if not ok_chars:
            rec.status = FAIL
        out["lem2.4"] = rec
    if want("lem2.5", "lem2.6"):
        out["lem2.5"], out["lem2.6"] = verify_residual_and_quotients(G, p)
    if want(*(i for i in CHECK_IDS if i.startswith("sec3/"))):
        for rec in verify_principal_block_chain(G, p, inst.table, inst.B0, inst):
            out[rec.id] = rec
    if want("sec1/siegel"):
        out["sec1/siegel"] = verify_siegel_on_table(inst.table)
    if want("sec1/thompson-third"):
        out["sec1/thompson-third"] = verify_thompson_third(inst.table)

    records = [out[i] for i in CHECK_IDS if i in wanted]
    blocks = [b.to_dict(inst.table) for b in inst.blocks]
    return VerificationReport(group_id, G.n, p, seed, inst.hypothesis, blocks, records)
