"""Tests for the concrete q-Schur algebra model, its distinguished basis,
and the quotient/transfer/evaluation maps."""

from math import comb

import pytest

from qschur.coeff import (
    GaussianLaurent,
    RF_ONE,
    RationalFunction,
    qfact_vt,
    qint_v,
    qint_vt,
    unit_pow,
)
from qschur.linalg import NotInSpan
from qschur.repmod import simple_module, tensor_many
from qschur.schur import (
    SchurElement,
    ThetaMatrix,
    basis_rank,
    canonical_basis_element,
    chi,
    chi_rank,
    chi_relation_checks,
    classify_positive,
    divided_generator,
    e_step,
    expand_in_basis,
    f_step,
    generators,
    phi_d,
    positivity_report,
    psi_transfer,
    structure_constants,
    theta_matrices,
    transfer_stability_report,
    verify_schur_relations,
)
from qschur.udot import UdotElement
from qschur.ualg import UElement
from qschur.linalg import ExactSolver

L = GaussianLaurent
RF = RationalFunction


def rf_mono(exp, texp=0):
    return RationalFunction(L.monomial(exp, unit_pow(texp)))


# -- the tensor-space model ----------------------------------------------------


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_model_matches_module_tensor_construction(d):
    """The closed-form slot action must agree with the weight-module route:
    one_r . (action) . one_r' on the d-fold tensor power of the fundamental
    module."""
    m = tensor_many([simple_module(1, 1)] * d)
    gens = generators(d)
    # reconstruct the weight bases exactly as the model enumerates them
    weight_of = [bin(code).count("1") for code in range(2**d)]
    by_weight: dict[int, list[int]] = {}
    for code in range(2**d):
        by_weight.setdefault(weight_of[code], []).append(code)
    for name, mat in (("E_total", m.matE), ("F_total", m.matF), ("K_total", m.matK)):
        blocks = gens[name].blocks
        got = {}
        for (r, rp), blk in blocks.items():
            for (i, j), c in blk.items():
                got[(by_weight[r][i], by_weight[rp][j])] = c
        want = {
            (i, j): mat[i][j]
            for i in range(2**d)
            for j in range(2**d)
            if not mat[i][j].is_zero()
        }
        assert got == want, f"{name} disagrees at d={d}"


def test_theta_count():
    for d in range(13):
        assert len(theta_matrices(d)) == comb(d + 3, 3)


def test_generator_examples():
    gens = generators(1)
    blk = gens["E"][0].block(0, 1)
    assert blk == {(0, 0): RF_ONE}
    g2 = generators(2)
    for r in range(3):
        for rp in range(3):
            prod = g2["one"][r] * g2["one"][rp]
            assert prod == (g2["one"][r] if r == rp else SchurElement.zero(2))
    for d in (1, 2, 3):
        gd = generators(d)
        assert gd["K"][0] == gd["one"][0].scale(rf_mono(d))


@pytest.mark.parametrize("d", [0, 1, 2, 3, 4])
def test_all_relations(d):
    checks = verify_schur_relations(d)
    bad = [c for c in checks if not c["ok"]]
    assert bad == []


def test_divided_generator_examples():
    assert divided_generator(3, 0, 1, "E") == e_step(3, 0)
    lhs = e_step(3, 0) * e_step(3, 1)
    assert lhs == divided_generator(3, 0, 2, "E").scale(RF(qint_vt(2)))
    prod = f_step(4, 4) * f_step(4, 3) * f_step(4, 2)
    assert prod == divided_generator(4, 4, 3, "F").scale(RF(qfact_vt(3)))


# -- the distinguished basis -----------------------------------------------------


def test_basis_diagonal_elements_are_idempotents():
    for d in (1, 2, 3):
        gens = generators(d)
        for r in range(d + 1):
            A = ThetaMatrix(r, 0, 0, d - r)
            assert canonical_basis_element(d, A) == gens["one"][r]


def test_basis_recipe_overlap_d2():
    # A = [[0,1],[1,0]] sits on the overlap a11 = a22; both recipes agree
    A = ThetaMatrix(0, 1, 1, 0)
    got = canonical_basis_element(2, A)
    f_side = f_step(2, 1) * e_step(2, 0)  # recipe (b), twist exponent 0
    assert got == f_side
    e_side = e_step(2, 1) * f_step(2, 2)
    assert got == e_side.scale(RF.unit(-2))


def test_basis_element_d3_example():
    # A = [[1,1],[0,1]]: recipe (a) with a=0, b=1, r=2, twist i^-1
    A = ThetaMatrix(1, 1, 0, 1)
    got = canonical_basis_element(3, A)
    assert got == f_step(3, 2).scale(RF.unit(-1))


def test_single_steps_are_unit_multiples_of_basis_elements():
    for d in (2, 3, 4):
        for r in range(d):
            A = ThetaMatrix(r, 0, 1, d - r - 1)
            assert e_step(d, r) == canonical_basis_element(d, A).scale(RF.unit(r))
        for r in range(1, d + 1):
            A = ThetaMatrix(r - 1, 1, 0, d - r)
            assert f_step(d, r) == canonical_basis_element(d, A).scale(RF.unit(r - 1))


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_basis_rank_and_self_expansion(d):
    assert basis_rank(d) == comb(d + 3, 3)
    for A in theta_matrices(d):
        expansion = expand_in_basis(canonical_basis_element(d, A))
        assert expansion == {A: RF_ONE}


def test_expand_idempotent_and_products():
    d = 2
    gens = generators(d)
    assert expand_in_basis(gens["one"][1]) == {ThetaMatrix(1, 0, 0, 1): RF_ONE}
    x = e_step(d, 1) * f_step(d, 2)
    expansion = expand_in_basis(x)
    assert expansion and all(not c.is_zero() for c in expansion.values())


def test_expand_not_in_span():
    x = SchurElement(1, {(0, 1): {(0, 0): RF_ONE}, (1, 0): {(0, 0): RF_ONE}})
    y = SchurElement(1, {(0, 0): {(0, 0): RF(L.from_text("v + 1"))}})
    # an off-model perturbation cannot be expanded: fabricate one by scaling
    # a single tensor entry of a basis element
    bad = SchurElement(1, {(0, 1): {(0, 0): RF(L.from_text("v"))}, (1, 1): {(0, 0): RF_ONE}})
    try:
        expand_in_basis(bad)
    except NotInSpan:
        pass
    else:
        # d=1 blocks are all one-dimensional, so everything lies in the span;
        # use d=2 with a genuinely broken block instead
        broken = SchurElement(
            2, {(0, 1): {(0, 0): RF_ONE}}
        )  # kills the second column of E_{0,1}
        with pytest.raises(NotInSpan):
            expand_in_basis(broken)


# -- structure constants ----------------------------------------------------------


def test_structure_constants_d1():
    table = structure_constants(1)
    e_key = ThetaMatrix(0, 0, 1, 0)
    f_key = ThetaMatrix(0, 1, 0, 0)
    prod = table[(e_key, f_key)]
    assert prod == {ThetaMatrix(0, 0, 0, 1): RF_ONE}


def test_idempotent_action_on_basis():
    d = 2
    for A in theta_matrices(d):
        diag = ThetaMatrix(A.row, 0, 0, d - A.row)
        lhs = canonical_basis_element(d, diag) * canonical_basis_element(d, A)
        assert lhs == canonical_basis_element(d, A)


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_positivity(d):
    report = positivity_report(d)
    assert report["violations"] == []
    if d >= 1:
        assert report["nonzero_constants"] > 0


def test_classify_positive():
    assert classify_positive(RF(qint_v(3))) == (0, qint_v(3))
    k, p = classify_positive(RF(qint_vt(2)))
    assert k == 1 and p == qint_v(2)
    assert classify_positive(RF(L.from_text("v - 1"))) is None
    assert classify_positive(RF(L.from_text("(1+i)"))) is None


def test_transfer_stability():
    rep = transfer_stability_report(1, (1, 2))
    assert rep["mismatches"] == []


# -- chi ------------------------------------------------------------------------


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_chi_kills_relations(d):
    assert all(c["ok"] for c in chi_relation_checks(d))


def test_chi_of_K_is_weight_diagonal():
    d = 3
    img = chi(UElement.gen_K(), d)
    gens = generators(d)
    expect = SchurElement.zero(d)
    for r in range(d + 1):
        expect = expect + gens["one"][r].scale(rf_mono(d - 2 * r, 2 * r))
    assert img == expect


def test_chi_respects_products():
    d = 2
    x = UElement.gen_E() * UElement.gen_F()
    assert chi(x, d) == chi(UElement.gen_E(), d) * chi(UElement.gen_F(), d)


def test_chi_rank_d2():
    assert chi_rank(2) == 10


def test_chi_image_lies_in_basis_span():
    d = 2
    for f in range(3):
        for e in range(3):
            img = chi(
                UElement.monomial(__import__("qschur.ualg", fromlist=["UMonomial"]).UMonomial(f, 0, e)),
                d,
            )
            if not img.is_zero():
                expand_in_basis(img)  # raises NotInSpan on failure


# -- psi and phi_d -----------------------------------------------------------------


def test_psi_generator_images():
    # degree 4 -> 2: psi(E_{r,r+1}) = i E_{r-1,r}, psi(F_{r,r-1}) = i F_{r-1,r-2},
    # psi(1_r) = 1_{r-1}, psi(K_r) = i^2 K_{r-1}
    g4, g2 = generators(4), generators(2)
    assert psi_transfer(e_step(4, 1)) == e_step(2, 0).scale(RF.unit(1))
    assert psi_transfer(e_step(4, 2)) == e_step(2, 1).scale(RF.unit(1))
    assert psi_transfer(f_step(4, 2)) == f_step(2, 1).scale(RF.unit(1))
    assert psi_transfer(g4["one"][1]) == g2["one"][1 - 1]
    assert psi_transfer(g4["K"][1]) == g2["K"][0].scale(RF.unit(2))


def test_psi_kills_min_entry_zero():
    A = ThetaMatrix(0, 2, 1, 1)  # a11 = 0: A - I leaves Theta
    assert psi_transfer(canonical_basis_element(4, A)).is_zero()
    B = ThetaMatrix(1, 2, 1, 0)  # a22 = 0 likewise
    assert psi_transfer(canonical_basis_element(4, B)).is_zero()


def test_psi_basis_action():
    for A in theta_matrices(3):
        img = psi_transfer(canonical_basis_element(3, A))
        down = A.shifted(-1)
        if down.is_valid():
            assert img == canonical_basis_element(1, down)
        else:
            assert img.is_zero()


@pytest.mark.parametrize("d", [1, 2])
def test_psi_is_multiplicative_on_basis_products(d):
    basis_hi = theta_matrices(d + 2)
    for A in basis_hi:
        for B in basis_hi:
            if A.col != B.row:
                continue
            x = canonical_basis_element(d + 2, A)
            y = canonical_basis_element(d + 2, B)
            assert psi_transfer(x * y) == psi_transfer(x) * psi_transfer(y)


def test_phi_d_idempotent_rule():
    # 1_1 evaluates to one_1 in degree 3 (lambda = 1 = 3 - 2*1)
    img = phi_d(UdotElement.unit(1), 3)
    assert img == generators(3)["one"][1]
    # weights of the wrong parity or out of range map to zero
    assert phi_d(UdotElement.unit(2), 3).is_zero()
    assert phi_d(UdotElement.unit(9), 3).is_zero()


def test_phi_d_single_step_twist():
    # E_{2,0} evaluates to i^-1 E_{0,1} in degree 2
    img = phi_d(UdotElement.e_gen(2), 2)
    assert img == e_step(2, 0).scale(RF.unit(-1))


def test_phi_d_psi_compatibility_on_generators():
    for d in (1, 2, 3):
        for lam in range(-d - 2, d + 3):
            for elem in (
                UdotElement.unit(lam),
                UdotElement.e_gen(lam),
                UdotElement.f_gen(lam),
            ):
                assert psi_transfer(phi_d(elem, d + 2)) == phi_d(elem, d)


def test_phi_d_is_multiplicative():
    d = 3
    words = []
    for lam in range(-3, 4):
        words.append(UdotElement.e_gen(lam) * UdotElement.f_gen(lam - 2))
        words.append(UdotElement.divided_f(2, lam))
        words.append(UdotElement.unit(lam))
    for x in words:
        for y in words:
            prod = x * y
            assert phi_d(prod, d) == phi_d(x, d) * phi_d(y, d)


def test_phi_d_kills_commutator_relation():
    d = 4
    for lam in range(-6, 7):
        from qschur.coeff import qint_v_signed

        ef = UdotElement.e_gen(lam) * UdotElement.f_gen(lam - 2)
        fe = UdotElement.f_gen(lam) * UdotElement.e_gen(lam + 2)
        rel = (
            ef
            - fe.scale(RF.unit(2))
            - UdotElement.unit(lam).scale(
                RF(qint_v_signed(lam)) * RF(L.monomial(0, unit_pow(-lam - lam % 2)))
            )
        )
        assert phi_d(rel, d).is_zero()
