import itertools

import numpy as np
import pytest

from blocklab import catalog
from blocklab.errors import GroupFileError, NotAGroup, NotNormal, TooLarge
from blocklab.group import (
    Subgroup,
    burnside_hypothesis,
    center,
    centralizer,
    generated_closure,
    group_from_cayley,
    group_from_permutations,
    is_normal,
    normal_p_complement,
    normal_subgroups,
    normalizer,
    o_p_residual,
    p_decompose,
    p_part,
    p_regular_elements,
    quotient,
    sylow_subgroup,
)
from blocklab.groupfile import format_cayley, format_perm_group, parse_group

from conftest import all_perms, closure, compose, cycle, group, perm_index

SMALL = [n for n in catalog.names() if catalog.EXPECTED_ORDERS[n] <= 24]


def sym3_cayley():
    elems = sorted(all_perms(3))
    idx = {g: i for i, g in enumerate(elems)}
    return elems, [[idx[compose(g, h)] for h in elems] for g in elems]


# -- construction ---------------------------------------------------------------------


def test_cayley_trivial_and_c2():
    G = group_from_cayley([[0]])
    assert G.n == 1 and G.identity == 0
    C2 = group_from_cayley([[0, 1], [1, 0]])
    assert C2.n == 2 and C2.inverses == [0, 1]


def test_cayley_s3_from_brute_force():
    elems, tab = sym3_cayley()
    G = group_from_cayley(tab)
    assert G.n == 6
    assert sorted(G.classes.sizes) == [1, 2, 3]


@pytest.mark.parametrize(
    "tab, reason",
    [
        ([[0, 1], [0, 1]], "identity"),
        ([[0, 0], [0, 1]], "inverse"),
        ([[0, 1, 2], [1, 2, 0], [2, 1, 0]], "Latin|inverse"),
        ([[0, 1], [1, 2]], "outside"),
        ([[0, 1, 2], [1, 0]], "length"),
    ],
)
def test_cayley_rejects_non_groups(tab, reason):
    with pytest.raises(NotAGroup, match=reason):
        group_from_cayley(tab)


def test_cayley_rejects_non_associative_loop():
    # the smallest non-associative loop, order 5: a Latin square with identity 0
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAGroup, match="associative"):
        group_from_cayley(loop)


@pytest.mark.parametrize(
    "gens, degree, order",
    [
        ([[2, 1]], 2, 2),
        ([[2, 1, 3], [2, 3, 1]], 3, 6),
        ([[2, 3, 4, 5, 1], [1, 3, 5, 2, 4]], 5, 20),
    ],
)
def test_permutation_groups_match_closure_oracle(gens, degree, order):
    G = group_from_permutations(gens, degree=degree)
    gens0 = [tuple(x - 1 for x in g) for g in gens]
    oracle = closure(gens0, degree)
    assert G.n == order == len(oracle)
    assert set(G.elements) == oracle


def test_f20_example_generators():
    # (1 2 3 4 5) and (2 3 5 4)
    G = group_from_permutations([[2, 3, 4, 5, 1], [1, 3, 5, 2, 4]])
    assert G.n == 20


def test_table_is_left_to_right_composition():
    G = group("S4")
    E = G.elements
    for i, j in itertools.product(range(G.n), repeat=2):
        assert E[G.table[i][j]] == compose(E[i], E[j])


def test_indexing_is_deterministic():
    a = group_from_permutations([[2, 3, 4, 5, 1], [2, 1, 3, 4, 5]])
    b = group_from_permutations([[2, 1, 3, 4, 5], [2, 3, 4, 5, 1]])
    assert a.elements[0] == tuple(range(5))
    assert a.table == group_from_permutations([[2, 3, 4, 5, 1], [2, 1, 3, 4, 5]]).table
    # same group, same breadth-first levels, so same element set per level
    assert set(a.elements) == set(b.elements)


def test_size_cap():
    with pytest.raises(TooLarge):
        group_from_permutations([[2, 3, 4, 5, 6, 7, 1], [2, 1, 3, 4, 5, 6, 7]], cap=1000)


@pytest.mark.parametrize("name", catalog.names())
def test_catalog_axioms(name):
    G = group(name)
    assert G.n == catalog.EXPECTED_ORDERS[name]
    t = np.asarray(G.table)
    if G.n <= 256:
        assert (t[t, :] == t[:, t]).all()
    else:
        rng = np.random.default_rng(1)
        i, j, k = rng.integers(0, G.n, size=(3, 20000))
        assert (t[t[i, j], k] == t[i, t[j, k]]).all()
    assert all(G.table[g][G.inverses[g]] == G.identity for g in range(G.n))
    assert all(G.n % o == 0 for o in G.orders)
    # Cayley round trip through the file format
    if G.n <= 60:
        H = parse_group(format_cayley(G))
        assert H.table == G.table


# -- conjugacy and subgroups ------------------------------------------------------------


def test_class_examples():
    assert len(group("C1").classes) == 1
    assert group("S3").classes.sizes == (1, 3, 2)
    C6 = group("C6").classes
    assert len(C6) == 6 and set(C6.sizes) == {1}


@pytest.mark.parametrize("name", catalog.names())
def test_classes_partition_and_orbit_stabilizer(name):
    G = group(name)
    cc = G.classes
    seen = sorted(x for k in range(len(cc)) for x in cc.members(k))
    assert seen == list(range(G.n))
    assert cc.members(0) == (G.identity,)
    for k, r in enumerate(cc.reps):
        assert r == min(cc.members(k))
        assert cc.sizes[k] * centralizer(G, [r]).order == G.n
    if G.n <= 24:
        for g in range(G.n):
            orbit = {G.conj(g, h) for h in range(G.n)}
            assert orbit == set(cc.members(cc.class_of[g]))


def test_s3_centralizer_normalizer_center():
    G = group("S3")
    c = perm_index(G, cycle(3, (1, 2, 3)))
    t = perm_index(G, cycle(3, (1, 2)))
    C = centralizer(G, [c])
    brute = [x for x in range(6) if G.op(x, c) == G.op(c, x)]
    assert C.order == 3 and list(C.members) == brute
    H = generated_closure(G, [t])
    N = normalizer(G, H)
    assert N.members == H.members and N.order == 2
    assert center(G).order == 1


def _subgroups_of_order(G, order):
    """All subgroups of the given order generated by at most two elements."""
    found = set()
    for a in range(G.n):
        for b in range(a, G.n):
            H = generated_closure(G, [a, b])
            if H.order == order:
                found.add(H.members)
    return found


def test_sylow_examples():
    S3 = group("S3")
    P = sylow_subgroup(S3, 2)
    inv = min(g for g in range(6) if S3.orders[g] == 2)
    assert P.order == 2 and inv in P
    A3 = sylow_subgroup(S3, 3)
    assert A3.order == 3 and all(S3.orders[g] in (1, 3) for g in A3)
    assert sylow_subgroup(group("C6"), 5).order == 1


@pytest.mark.parametrize("name", [n for n in SMALL if catalog.EXPECTED_ORDERS[n] > 1])
def test_sylow_subgroups_are_conjugate(name):
    G = group(name)
    for p in {2, 3, 5, 7}:
        P = sylow_subgroup(G, p)
        assert P.order == p_part(G.n, p)
        assert generated_closure(G, P.members).members == P.members
        conjugates = {tuple(sorted(G.conj(x, g) for x in P.members)) for g in range(G.n)}
        # every Sylow subgroup of these groups is generated by two elements
        assert _subgroups_of_order(G, P.order) == conjugates


def test_p_decompose_examples():
    C6, C4 = group("C6"), group("C4")
    g = next(x for x in range(6) if C6.orders[x] == 6)
    d = p_decompose(C6, g, 2)
    assert d.z == C6.power(g, 3) and d.y == C6.power(g, 4)
    e = p_decompose(C6, C6.identity, 2)
    assert e.z == e.y == C6.identity
    h = next(x for x in range(4) if C4.orders[x] == 4)
    d = p_decompose(C4, h, 2)
    assert d.z == h and d.y == C4.identity


@pytest.mark.parametrize("name", ["S4", "SL23", "C12", "A5", "F20"])
def test_p_decompose_exhaustive(name):
    G = group(name)
    for p in (2, 3, 5):
        for g in range(G.n):
            d = p_decompose(G, g, p)
            assert G.op(d.z, d.y) == G.op(d.y, d.z) == g
            o = G.orders[d.z]
            assert p_part(o, p) == o and G.orders[d.y] % p
            # uniqueness: no other commuting pair in <g> works
            pairs = [(z, y) for z in G.cyclic(g) for y in G.cyclic(g)
                     if G.op(z, y) == g and p_part(G.orders[z], p) == G.orders[z] and G.orders[y] % p]
            assert pairs == [(d.z, d.y)]


def test_p_regular_examples():
    S3 = group("S3")
    assert sorted(S3.orders[g] for g in p_regular_elements(S3, 2)) == [1, 3, 3]
    assert sorted(S3.orders[g] for g in p_regular_elements(S3, 3)) == [1, 2, 2, 2]
    assert p_regular_elements(group("D8"), 2) == [group("D8").identity]


def test_normal_p_complement_examples():
    S3, A4 = group("S3"), group("A4")
    K = normal_p_complement(S3, 2)
    assert K is not None and K.order == 3
    assert normal_p_complement(S3, 3) is None
    V = normal_p_complement(A4, 3)
    assert V.order == 4 and all(A4.orders[g] in (1, 2) for g in V)


@pytest.mark.parametrize("name", catalog.names())
def test_normal_p_complement_properties(name):
    G = group(name)
    for p in (2, 3, 5, 7):
        K = normal_p_complement(G, p)
        P = sylow_subgroup(G, p)
        if K is not None:
            assert is_normal(G, K)
            assert K.order == G.n // p_part(G.n, p)
            assert K.member_set & P.member_set == {G.identity}
        if burnside_hypothesis(G, p):
            assert all(G.op(a, b) == G.op(b, a) for a in P for b in P)


def test_burnside_hypothesis_examples():
    assert burnside_hypothesis(group("S3"), 2)
    assert not burnside_hypothesis(group("S3"), 3)
    assert burnside_hypothesis(group("C6"), 3)
    assert not burnside_hypothesis(group("Q8"), 2)


def test_o_p_residual_examples():
    S3 = group("S3")
    assert o_p_residual(S3, 2).order == 3
    assert o_p_residual(S3, 3).order == 6
    assert o_p_residual(group("D8"), 2).order == 1


def test_quotient_examples():
    S3, A4 = group("S3"), group("A4")
    Q, _ = quotient(S3, normal_p_complement(S3, 2))
    assert Q.n == 2
    Q, proj = quotient(S3, S3.trivial())
    assert Q.n == 6 and sorted(Q.classes.sizes) == sorted(S3.classes.sizes)
    Q, _ = quotient(A4, normal_p_complement(A4, 3))
    assert Q.n == 3 and Q.is_abelian
    with pytest.raises(NotNormal):
        quotient(S3, sylow_subgroup(S3, 2))


@pytest.mark.parametrize("name", ["S4", "SL23", "D12", "C3xS3", "F20"])
def test_quotient_is_homomorphism(name):
    G = group(name)
    for N in normal_subgroups(G):
        Q, proj = quotient(G, N)
        assert G.n == N.order * Q.n
        assert {g for g in range(G.n) if proj[g] == proj[G.identity]} == set(N.members)
        for a, b in itertools.product(range(G.n), repeat=2):
            assert proj[G.op(a, b)] == Q.op(proj[a], proj[b])


@pytest.mark.parametrize("name", ["S4", "A4", "D8", "Q8", "D12"])
def test_normal_subgroups_against_brute_force(name):
    G = group(name)
    found = {N.members for N in normal_subgroups(G)}
    brute = {H.members for H in (Subgroup(G, m) for m in
             {generated_closure(G, [a, b]).members for a in range(G.n) for b in range(G.n)})
             if is_normal(G, H)}
    # every catalog group here has all normal subgroups 2-generated
    assert found == brute


# -- group files -----------------------------------------------------------------------


def test_group_file_parsing():
    text = "# comment\nperm 3\n\n2 1 3\n# another\n2 3 1\n"
    assert parse_group(text).n == 6
    assert parse_group(format_perm_group([[2, 1, 3], [2, 3, 1]], 3, "S3")).n == 6


@pytest.mark.parametrize(
    "text",
    ["", "perm\n", "perm x\n", "ring 3\n", "perm 3\n1 1 2\n", "perm 3\n1 2\n", "perm 3\n1 2 x\n", "cayley 2\n0 1\n"],
)
def test_group_file_errors(text):
    with pytest.raises(GroupFileError):
        parse_group(text)


def test_cayley_file_cap():
    with pytest.raises(TooLarge):
        parse_group("cayley 3\n0 1 2\n1 2 0\n2 0 1\n", cap=2)
