"""The (O, A, a) triple engine on finite-group instances."""

import itertools
from importlib import resources

import pytest

from smallq.hopfcore import (
    A_simples,
    CoalgebraFD,
    ComoduleFD,
    StructureError,
    a_simples,
    adjunction_counit,
    adjunction_unit,
    check_conditions,
    comodule_hom_space,
    cotensor,
    degenerate_triple_aac,
    degenerate_triple_all_equal,
    equivariant_of,
    equivariant_reconstruct,
    find_iso,
    finite_group_triple,
    group_simples,
    identity_point,
    induce,
    object_A,
    object_O,
    object_O_tensor,
    parse_group_text,
    point_convolution,
    points_of_O,
    psi,
    regular_a_comodule,
    res_a_comodule,
    shrunk_triple,
    trivial_a_comodule,
    twist,
    verify_equivalence,
    verify_ideal_prop,
)
from smallq.linalg import inverse, mat_eq
from smallq.scalars import CycloField


def load_fixture(name):
    text = resources.files("smallq").joinpath(f"fixtures/{name}.group").read_text()
    return parse_group_text(text)


@pytest.fixture(scope="module")
def z4_triple():
    table, sub = load_fixture("z4_z2")
    return finite_group_triple(table, sub)


@pytest.fixture(scope="module")
def s3_triple():
    table, sub = load_fixture("s3_a3")
    return finite_group_triple(table, sub)


def test_triple_dimensions(z4_triple, s3_triple):
    assert (z4_triple.O.dim, z4_triple.A.dim, z4_triple.a.dim) == (2, 4, 2)
    assert (s3_triple.O.dim, s3_triple.A.dim, s3_triple.a.dim) == (2, 6, 3)


def test_non_normal_rejected():
    table, sub = load_fixture("s3_bad")
    with pytest.raises(StructureError):
        finite_group_triple(table, sub)


def test_trivial_subgroup_boundary():
    table, _ = load_fixture("z4_z2")
    T = finite_group_triple(table, ["e"])
    assert T.a.dim == 1
    rep = check_conditions(T, catalog=[trivial_a_comodule(T)])
    assert all(c.status != "fail" for c in rep.checks)
    # a = ground field: Ind(C) recovers all of A = O here
    ind = induce(T, trivial_a_comodule(T))
    assert ind.dim == T.O.dim


def test_coalgebra_axioms_enforced():
    f = CycloField(4)
    # valid: one group-like element
    CoalgebraFD(f, [{(0, 0): f.one}], [f.one])
    # broken counit
    with pytest.raises(StructureError):
        CoalgebraFD(f, [{(0, 0): f.one}], [f.zero])
    # broken coassociativity on 2 dims
    delta = [{(0, 0): f.one}, {(0, 1): f.one, (1, 1): f.one}]
    with pytest.raises(StructureError):
        CoalgebraFD(f, delta, [f.one, f.zero])


def test_cotensor_examples():
    f = CycloField(4)
    # over the ground field: full tensor product
    triv = CoalgebraFD(f, [{(0, 0): f.one}], [f.one])
    rho_r = [{(0, 0): f.one}, {(1, 0): f.one}]
    rho_l = [{(0, 0): f.one}, {(0, 1): f.one}]
    basis = cotensor(rho_r, 2, rho_l, 2, 1, f)
    assert len(basis) == 4
    # functions on Z/2: graded lines pair iff the degrees match
    z2 = CoalgebraFD(f, [{(0, 0): f.one, (1, 1): f.one},
                         {(0, 1): f.one, (1, 0): f.one}],
                     [f.one, f.zero], name="O(Z/2)")
    for d1 in (0, 1):
        for d2 in (0, 1):
            # right comodule line of degree d1: rho(x) = x (x) delta_{d1};
            # left line of degree d2
            rr = [{(0, d1): f.one}]
            ll = [{(d2, 0): f.one}]
            got = len(cotensor(rr, 1, ll, 1, 2, f))
            assert got == (1 if d1 == d2 else 0)


def test_conditions_pass_on_fixtures(z4_triple, s3_triple):
    for T in (z4_triple, s3_triple):
        rep = check_conditions(T, catalog=a_simples(T))
        statuses = {c.name: c.status for c in rep.checks}
        assert statuses["i"] == "pass"
        assert statuses["ii"] == "pass"
        assert statuses["iii"] == "pass"
        assert statuses["iv_a"] == "pass"
        assert statuses["iv_b"] == "pass"


def test_degenerate_triple_aaa_fails_iii(z4_triple):
    rep = check_conditions(degenerate_triple_all_equal(z4_triple.A))
    statuses = {c.name: c.status for c in rep.checks}
    assert statuses["iii"] == "fail"


def test_degenerate_triple_aac_passes(z4_triple):
    T = degenerate_triple_aac(z4_triple.A)
    rep = check_conditions(T, catalog=[trivial_a_comodule(T)])
    statuses = {c.name: c.status for c in rep.checks}
    assert statuses["i"] == "pass" and statuses["ii"] == "pass"
    assert statuses["iii"] == "pass"
    # Cat_(A,A,C) is equivalent to vector spaces: unit/counit bijective
    N = object_A(T)
    mat, ind, urep = adjunction_unit(T, N)
    assert urep.passed and ind.dim == N.dim
    assert inverse(mat, T.field) is not None
    M = trivial_a_comodule(T)
    cmat, Q2, crep = adjunction_counit(T, M)
    assert crep.passed and Q2.dim == M.dim
    assert inverse(cmat, T.field) is not None


def test_induce_examples(z4_triple):
    T = z4_triple
    f = T.field
    # Ind(a) is A as an object of Cat
    ind_a = induce(T, regular_a_comodule(T))
    assert ind_a.dim == T.A.dim
    iso = find_iso([X for X in _cat_homs(T, ind_a, object_A(T))], f)
    assert iso is not None
    # Ind(C) is O
    ind_c = induce(T, trivial_a_comodule(T))
    assert ind_c.dim == T.O.dim
    iso = find_iso([X for X in _cat_homs(T, ind_c, object_O(T))], f)
    assert iso is not None
    # Ind(Res(N)) is O (x) N
    N = A_simples(T)[1]
    ind_res = induce(T, res_a_comodule(T, N))
    target = object_O_tensor(T, N)
    assert ind_res.dim == target.dim
    iso = find_iso([X for X in _cat_homs(T, ind_res, target)], f)
    assert iso is not None


def _cat_homs(T, N1, N2):
    from smallq.hopfcore import hom_cat
    return hom_cat(T, N1, N2)


def test_psi_examples(z4_triple):
    T = z4_triple
    Q, _ = psi(T, object_O(T))
    assert Q.dim == 1
    Q2, _ = psi(T, object_A(T))
    assert Q2.dim == T.a.dim
    assert find_iso(comodule_hom_space(Q2, regular_a_comodule(T)), T.field) is not None
    N = A_simples(T)[1]
    Q3, _ = psi(T, object_O_tensor(T, N))
    assert find_iso(comodule_hom_space(Q3, res_a_comodule(T, N)), T.field) is not None


def test_verify_equivalence_fixtures(z4_triple, s3_triple):
    for T in (z4_triple, s3_triple):
        rep = verify_equivalence(T)
        assert rep.passed, rep.failures()[:3]


def test_simple_counts(z4_triple, s3_triple):
    assert len(A_simples(z4_triple)) == 4
    assert len(a_simples(z4_triple)) == 2
    assert len(a_simples(s3_triple)) == 3          # conjugacy classes of Z/3
    s3_dims = sorted(s.dim for s in A_simples(s3_triple))
    assert s3_dims == [1, 1, 2]


def test_twist_identity_and_composition(z4_triple):
    T = z4_triple
    pts = points_of_O(T)
    assert len(pts) == 2
    objs = [object_O(T), object_A(T)]
    ident = identity_point(T)
    for N in objs:
        t_id = twist(T, ident, N)
        assert all(mat_eq(t_id.act[i], N.act[i]) for i in range(T.O.dim))
    for g1, g2 in itertools.product(pts, pts):
        g12 = point_convolution(T, g1, g2)
        for N in objs:
            lhs = twist(T, g2, twist(T, g1, N))
            rhs = twist(T, g12, N)
            assert all(mat_eq(lhs.act[i], rhs.act[i]) for i in range(T.O.dim))


def test_twist_triple_coherence(z4_triple, s3_triple):
    for T in (z4_triple, s3_triple):
        pts = points_of_O(T)
        N = object_A(T)
        for g1, g2, g3 in itertools.product(pts, repeat=3):
            p_left = point_convolution(T, point_convolution(T, g1, g2), g3)
            p_right = point_convolution(T, g1, point_convolution(T, g2, g3))
            assert p_left == p_right
            seq = twist(T, g3, twist(T, g2, twist(T, g1, N)))
            direct = twist(T, p_left, N)
            assert all(mat_eq(seq.act[i], direct.act[i]) for i in range(T.O.dim))


def test_twist_rejects_non_multiplicative(z4_triple):
    T = z4_triple
    f = T.field
    bad = [f.one, f.one]       # not an algebra map (1 at two idempotents)
    with pytest.raises(StructureError):
        twist(T, bad, object_O(T))


def test_equivariant_round_trips(z4_triple, s3_triple):
    for T in (z4_triple, s3_triple):
        f = T.field
        regular_A = ComoduleFD(T.A, [dict(T.A.delta[i]) for i in range(T.A.dim)],
                               name="A-reg")
        catalog = A_simples(T) + [regular_A]
        distinct = 0
        seen = []
        for P in catalog:
            E = equivariant_of(T, P)
            Q, _ = equivariant_reconstruct(T, E)
            assert Q.dim == P.dim
            assert find_iso(comodule_hom_space(Q, P), f) is not None
            if P.dim < T.A.dim or P is regular_A:
                pass
        # count of reconstructed simples matches the simple count of the group
        simples = A_simples(T)
        recon = [equivariant_reconstruct(T, equivariant_of(T, P))[0] for P in simples]
        for i, Q in enumerate(recon):
            for j, Q2 in enumerate(recon):
                has_hom = any(any(any(r) for r in X)
                              for X in comodule_hom_space(Q, Q2))
                assert has_hom == (i == j)


def test_equivariant_rejects_incompatible_data(z4_triple):
    T = z4_triple
    P = A_simples(T)[1]
    E = equivariant_of(T, P)
    # tamper with the Gamma-structure: break the comodule law
    bad = [dict(d) for d in E.rho_o]
    key = next(iter(bad[0]))
    bad[0] = {key: T.field.from_int(2) * bad[0][key]}
    from smallq.hopfcore import EquivariantObject
    with pytest.raises(StructureError):
        EquivariantObject(E.N, bad)


def test_ideal_prop(z4_triple, s3_triple):
    for T in (z4_triple, s3_triple):
        rep = verify_ideal_prop(T)
        assert rep.passed, rep.failures()
    # (A,A,C): m.A is the augmentation ideal itself
    T = degenerate_triple_aac(z4_triple.A)
    rep = verify_ideal_prop(T, a_catalog=[trivial_a_comodule(T)])
    assert rep.passed
    # shrunk O: report flags (ii) failure upstream
    rep = verify_ideal_prop(shrunk_triple(z4_triple))
    assert not rep.passed
    assert any(c.name == "hypotheses" for c in rep.failures())


def test_hom_adjunction_spot(z4_triple):
    T = z4_triple
    N = object_O(T)
    for M in a_simples(T):
        ind = induce(T, M)
        lhs = len(_cat_homs(T, N, ind))
        Q, _ = psi(T, N)
        rhs = len(comodule_hom_space(Q, M))
        assert lhs == rhs


def test_group_simples_sum_of_squares():
    table, _ = load_fixture("s3_a3")
    f = CycloField(6)
    simples = group_simples(table, f)
    assert sum(s.dim ** 2 for s in simples) == 6


def quaternion_table():
    # signed quaternion units: (sign, axis) with axis in e,i,j,k
    axes = "eijk"
    mul_axis = {("e", "e"): (1, "e"), ("e", "i"): (1, "i"), ("e", "j"): (1, "j"),
                ("e", "k"): (1, "k"), ("i", "e"): (1, "i"), ("j", "e"): (1, "j"),
                ("k", "e"): (1, "k"), ("i", "i"): (-1, "e"), ("j", "j"): (-1, "e"),
                ("k", "k"): (-1, "e"), ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
                ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"), ("k", "i"): (1, "j"),
                ("i", "k"): (-1, "j")}
    elems = [(s, a) for a in axes for s in (1, -1)]
    names = [("" if s == 1 else "m") + a for s, a in elems]
    index = {x: i for i, x in enumerate(elems)}
    mult = []
    for s1, a1 in elems:
        row = []
        for s2, a2 in elems:
            s3, a3 = mul_axis[(a1, a2)]
            row.append(index[(s1 * s2 * s3, a3)])
        mult.append(row)
    from smallq.hopfcore import GroupTable
    return GroupTable(names, mult)


def test_quaternion_triple_stress():
    # Q8 over its normal Z/4 = <i>: nonabelian side with a two-dimensional
    # simple of multiplicity two in the regular module
    table = quaternion_table()
    assert table.exponent() == 4
    f = CycloField(4)
    simples = group_simples(table, f)
    assert sorted(s.dim for s in simples) == [1, 1, 1, 1, 2]
    T = finite_group_triple(table, ["e", "i", "me", "mi"])
    assert (T.O.dim, T.A.dim, T.a.dim) == (2, 8, 4)
    rep = check_conditions(T, catalog=a_simples(T))
    assert all(c.status != "fail" for c in rep.checks), rep.failures()
    rep = verify_equivalence(T)
    assert rep.passed, rep.failures()[:3]
