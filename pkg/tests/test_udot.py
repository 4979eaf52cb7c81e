"""Tests for the idempotented algebras, the flavor isomorphism, and the
positivity probe."""

import random

import pytest

from qschur.coeff import (
    GaussianLaurent,
    RF_ONE,
    RationalFunction,
    qbinom_v,
    qbinom_vt,
    qint_v,
    qint_v_signed,
    unit_pow,
)
from qschur.udot import (
    FlavorMismatch,
    UdotElement,
    UdotMonomial,
    check_clark_wang_form,
    commutator_check,
    expand_single_letters,
    phi,
    phi_inv,
    positivity_probe,
)

RF = RationalFunction
L = GaussianLaurent


def rf_unit(k):
    return RationalFunction(L.monomial(0, unit_pow(k)))


def test_idempotent_calculus():
    one3 = UdotElement.unit(3)
    one5 = UdotElement.unit(5)
    assert one3 * one3 == one3
    assert (one3 * one5).is_zero()
    e = UdotElement.e_gen(5)  # E_{5,3}
    assert one5 * e == e
    assert e * one3 == e
    assert (one3 * e).is_zero()


def test_commutator_example_weight3():
    # E_{3,1} F_{1,3} = t^2 F_{3,5} E_{5,3} + i^-4 [3]_v 1_3
    lhs = UdotElement.e_gen(3) * UdotElement.f_gen(1)
    fe = UdotElement.f_gen(3) * UdotElement.e_gen(5)
    rhs = fe.scale(RF.unit(2)) + UdotElement.unit(3).scale(RF(qint_v(3)))
    assert lhs == rhs
    # and t^2 = -1 makes the FE term enter with a minus sign
    assert lhs.terms[UdotMonomial(3, 1, 1, 3)] == -RF_ONE


@pytest.mark.parametrize("lam", range(-20, 21))
@pytest.mark.parametrize("flavor", ["osp", "sl2"])
def test_defining_commutator(lam, flavor):
    assert commutator_check(lam, flavor)


@pytest.mark.parametrize("lam", range(-20, 21, 2))
def test_even_weight_specialization(lam):
    # for even weights the right side is (-1)^(lam/2) [lam]_v 1_lam
    ef = UdotElement.e_gen(lam) * UdotElement.f_gen(lam - 2)
    fe = UdotElement.f_gen(lam) * UdotElement.e_gen(lam + 2)
    lhs = ef - fe.scale(RF.unit(2))
    sign = -RF_ONE if (lam // 2) % 2 else RF_ONE
    rhs = UdotElement.unit(lam).scale(RF(qint_v_signed(lam)) * sign)
    assert lhs == rhs


def test_divided_f_merge():
    # F^(a) 1_lam . F^(b) 1_mu = [a+b choose a]_{v,t} F^(a+b) 1_mu
    for a in range(4):
        for b in range(4):
            lam = -2
            x = UdotElement.divided_f(a, lam - 2 * b)
            y = UdotElement.divided_f(b, lam)
            expect = UdotElement.divided_f(a + b, lam).scale(RF(qbinom_vt(a + b, a)))
            assert x * y == expect


def test_divided_e_merge_sl2():
    for a in range(4):
        for b in range(4):
            lam = 1
            x = UdotElement.divided_e(a, lam + 2 * b, "sl2")
            y = UdotElement.divided_e(b, lam, "sl2")
            expect = UdotElement.divided_e(a + b, lam, "sl2").scale(RF(qbinom_v(a + b, a)))
            assert x * y == expect


@pytest.mark.parametrize("flavor", ["osp", "sl2"])
def test_divided_words_against_single_letter_oracle(flavor):
    for lam in (-3, 0, 2, 5):
        for a in range(3):
            for b in range(3):
                fast = UdotElement.divided_f(a, lam + 2 * b, flavor) * UdotElement.divided_e(
                    b, lam, flavor
                )
                assert fast == expand_single_letters(a, b, lam, flavor)


@pytest.mark.parametrize("flavor", ["osp", "sl2"])
def test_ef_swap_against_single_letters(flavor):
    # E^(b) F^(a) 1_w straightened by the engine vs multiplied out letter
    # by letter
    for w in (-4, -1, 0, 3):
        for a in range(3):
            for b in range(3):
                x = UdotElement.divided_e(b, w - 2 * a + 2 * a, flavor)
                lhs = UdotElement.divided_e(b, w - 2 * a, flavor) * UdotElement.divided_f(
                    a, w, flavor
                )
                slow_f = expand_single_letters(a, 0, w, flavor)
                slow_e = expand_single_letters(0, b, w - 2 * a, flavor)
                assert lhs == slow_e * slow_f


def test_flavor_mismatch_raises():
    with pytest.raises(FlavorMismatch):
        UdotElement.unit(0, "osp") * UdotElement.unit(0, "sl2")


def test_confluence_two_strategies():
    # fold random generator words from the left and from the right
    rng = random.Random(77)
    for flavor in ("osp", "sl2"):
        for _ in range(150):
            lam = rng.randint(-5, 5)
            word = []
            w = lam
            for _ in range(rng.randint(1, 6)):
                kind = rng.choice(["E", "F", "1"])
                if kind == "E":
                    word.append(UdotElement.e_gen(w + 2, flavor))
                    w += 2
                elif kind == "F":
                    word.append(UdotElement.f_gen(w - 2, flavor))
                    w -= 2
                else:
                    word.append(UdotElement.unit(w, flavor))
            word.reverse()  # leftmost acts last
            left = word[0]
            for x in word[1:]:
                left = left * x
            right = word[-1]
            for x in reversed(word[:-1]):
                right = x * right
            assert left == right


def test_phi_on_generators():
    # sl2 E at weight 2 picks up t^2 = -1
    e2 = UdotElement.e_gen(2, "sl2")
    assert phi(e2) == UdotElement.e_gen(2, "osp").scale(-RF_ONE)
    f0 = UdotElement.f_gen(0, "sl2")
    assert phi(f0) == UdotElement.f_gen(0, "osp")
    assert phi(UdotElement.unit(7, "sl2")) == UdotElement.unit(7, "osp")


def test_phi_kills_sl2_relations():
    for lam in range(-20, 21):
        ef = UdotElement.e_gen(lam, "sl2") * UdotElement.f_gen(lam - 2, "sl2")
        fe = UdotElement.f_gen(lam, "sl2") * UdotElement.e_gen(lam + 2, "sl2")
        rel = ef - fe - UdotElement.unit(lam, "sl2").scale(RF(qint_v_signed(lam)))
        assert phi(rel).is_zero()


def test_phi_is_isomorphism_on_random_words():
    rng = random.Random(5)
    for _ in range(60):
        lam = rng.randint(-4, 4)
        x = UdotElement.unit(lam, "sl2")
        w = lam
        for _ in range(rng.randint(1, 4)):
            if rng.random() < 0.5:
                x = UdotElement.e_gen(w + 2, "sl2") * x
                w += 2
            else:
                x = UdotElement.f_gen(w - 2, "sl2") * x
                w -= 2
        assert phi_inv(phi(x)) == x
        y = UdotElement.divided_f(rng.randint(0, 2), w, "sl2") * x
        assert phi_inv(phi(y)) == y


def test_phi_is_algebra_homomorphism():
    rng = random.Random(23)

    def rand_elem():
        lam = rng.randint(-4, 4)
        x = UdotElement.unit(lam, "sl2")
        w = lam
        for _ in range(rng.randint(0, 3)):
            if rng.random() < 0.5:
                x = UdotElement.e_gen(w + 2, "sl2") * x
                w += 2
            else:
                x = UdotElement.f_gen(w - 2, "sl2") * x
                w -= 2
        return x, lam, w

    checked = 0
    while checked < 40:
        x, lam_x, _ = rand_elem()
        y, lam_y, top_y = rand_elem()
        if top_y != lam_x:
            continue
        assert phi(x * y) == phi(x) * phi(y)
        checked += 1


@pytest.mark.parametrize("lam", [0, 3, -5, 8, -2, 13])
def test_clark_wang_form(lam):
    assert check_clark_wang_form(lam)


def test_positivity_probe_small_window():
    report = positivity_probe((-3, 3), 2)
    assert report["violations"] == []
    assert report["products_checked"] > 0


def test_probe_family_products_examples():
    # a single-step product inside the probe family: the coefficient is a
    # plain quantum integer, no super sign
    x = phi(UdotElement.divided_f(1, 2, "sl2"))
    y = phi(UdotElement.divided_f(1, 4, "sl2"))
    prod = phi_inv(x * y)
    expect = UdotElement.divided_f(2, 4, "sl2").scale(RF(qint_v(2)))
    assert prod == expect


def test_json_and_str():
    m = UdotMonomial(1, 2, 1, 3)
    assert str(m) == "1_{1} F^(2) E^(1) 1_{3}"
    x = UdotElement.monomial(m, "osp", RF(qint_v(2)))
    obj = x.to_json_obj()
    assert obj[0]["target"] == 1 and obj[0]["f"] == 2
