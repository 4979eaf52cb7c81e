"""The modified (idempotented) algebras, in two flavors.

Flavor "osp" is the idempotented form of quantum osp(1|2): generators
1_lam, E_{lam,lam-2}, F_{lam,lam+2} with the idempotent calculus and

    E_{lam,lam-2} F_{lam-2,lam} - t^2 F_{lam,lam+2} E_{lam+2,lam}
        = t^(-lam-p(lam)) [lam]_v 1_lam.

Flavor "sl2" is the classical modified algebra, same idempotent calculus and
the untwisted commutator  E F - F E = [lam]_v 1_lam  on the weight-lam slot.

Normal form: every element is a combination of words  1_mu F^(a) E^(b) 1_lam
with mu = lam + 2b - 2a.  Divided powers are primitive letters here; their
composition rules (binomial merging of like letters, and the weight-local
straightening of E past F^(n)) are derived from the single-step relations
and tested against brute-force single-step products.

The two flavors are exchanged by the twist isomorphism sending the sl2
letter E_{lam,lam-2} to t^(lam+p(lam)) times the osp letter (F and the
idempotents map identically); on divided-power letters the accumulated
twist is tracked exactly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from qschur.coeff import (
    GaussianLaurent,
    RF_ONE,
    RF_ZERO,
    RationalFunction,
    qbinom_v,
    qbinom_vt,
    qint_v,
    qint_v_signed,
    unit_pow,
)


class FlavorMismatch(ValueError):
    """Operands live in different flavors of the modified algebra."""


class UdotMonomial(NamedTuple):
    """The normal-form word 1_mu F^(a) E^(b) 1_lam (mu = lam + 2b - 2a)."""

    mu: int
    a: int
    b: int
    lam: int

    def validate(self) -> "UdotMonomial":
        if self.a < 0 or self.b < 0 or self.mu != self.lam + 2 * self.b - 2 * self.a:
            raise ValueError(f"malformed monomial {self}")
        return self

    def __str__(self) -> str:
        parts = [f"1_{{{self.mu}}}"]
        if self.a:
            parts.append(f"F^({self.a})")
        if self.b:
            parts.append(f"E^({self.b})")
        parts.append(f"1_{{{self.lam}}}")
        return " ".join(parts)

    def to_json_obj(self) -> dict:
        return {"target": self.mu, "f": self.a, "e": self.b, "source": self.lam}


def _p(lam: int) -> int:
    return lam % 2


def _rf_unit(texp: int) -> RationalFunction:
    return RationalFunction(GaussianLaurent.monomial(0, unit_pow(texp)))


def _qint_flavor(n: int, flavor: str) -> RationalFunction:
    """[n]_{v,t} (osp) or [n]_v (sl2) for n >= 0."""
    base = RationalFunction(qint_v(n))
    if flavor == "osp":
        return base * _rf_unit(n - 1)
    return base


def _qbinom_flavor(n: int, k: int, flavor: str) -> RationalFunction:
    return RationalFunction(qbinom_vt(n, k) if flavor == "osp" else qbinom_v(n, k))


@lru_cache(maxsize=None)
def _swap(b: int, a: int, w: int, flavor: str) -> tuple:
    """E^(b) F^(a) 1_w as a combination of F^(a') E^(b') 1_w words; returns
    ((a', b'), coeff) pairs.  Derived by peeling single E letters:

        E F^(n) 1_w' = t^(2n) F^(n) E 1_w'
                       + t^(n-1) t^(-w'-p(w')) [w'+1-n]_v F^(n-1) 1_w'

    in the osp flavor (drop all t-powers for sl2)."""
    if b == 0 or a == 0:
        return (((a, b), RF_ONE),)
    out: dict[tuple[int, int], RationalFunction] = {}
    for (a1, b1), c in _swap(b - 1, a, w, flavor):
        wp = w + 2 * b1  # the weight at which the peeled E meets F^(a1)
        # straight-through term: E merges into E^(b1)
        merge = _qint_flavor(b1 + 1, flavor)
        if flavor == "osp":
            merge = merge * _rf_unit(2 * a1)
        key = (a1, b1 + 1)
        val = c * merge
        prev = out.get(key)
        out[key] = val if prev is None else prev + val
        # contraction term: one F is consumed
        if a1 >= 1:
            scal = RationalFunction(qint_v_signed(wp + 1 - a1))
            if flavor == "osp":
                scal = scal * _rf_unit(a1 - 1 - wp - _p(wp))
            key = (a1 - 1, b1)
            val = c * scal
            prev = out.get(key)
            out[key] = val if prev is None else prev + val
    inv = _qint_flavor(b, flavor).inverse()
    return tuple(
        ((key, c * inv)) for key, c in sorted(out.items()) if not (c * inv).is_zero()
    )


class UdotElement:
    """A finite combination of normal-form words in one flavor."""

    __slots__ = ("flavor", "terms")

    def __init__(self, flavor: str, terms: dict[UdotMonomial, RationalFunction] | None = None):
        if flavor not in ("osp", "sl2"):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.flavor = flavor
        t = {} if terms is None else terms
        self.terms = {m: c for m, c in t.items() if not c.is_zero()}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(flavor: str) -> "UdotElement":
        return UdotElement(flavor)

    @staticmethod
    def unit(lam: int, flavor: str = "osp") -> "UdotElement":
        return UdotElement(flavor, {UdotMonomial(lam, 0, 0, lam): RF_ONE})

    @staticmethod
    def e_gen(lam: int, flavor: str = "osp") -> "UdotElement":
        """E_{lam, lam-2}: source weight lam-2, target lam."""
        return UdotElement(flavor, {UdotMonomial(lam, 0, 1, lam - 2): RF_ONE})

    @staticmethod
    def f_gen(lam: int, flavor: str = "osp") -> "UdotElement":
        """F_{lam, lam+2}: source weight lam+2, target lam."""
        return UdotElement(flavor, {UdotMonomial(lam, 1, 0, lam + 2): RF_ONE})

    @staticmethod
    def divided_f(a: int, lam: int, flavor: str = "osp") -> "UdotElement":
        """F^(a) 1_lam."""
        return UdotElement(flavor, {UdotMonomial(lam - 2 * a, a, 0, lam): RF_ONE})

    @staticmethod
    def divided_e(b: int, lam: int, flavor: str = "osp") -> "UdotElement":
        """E^(b) 1_lam."""
        return UdotElement(flavor, {UdotMonomial(lam + 2 * b, 0, b, lam): RF_ONE})

    @staticmethod
    def monomial(m: UdotMonomial, flavor: str = "osp", coeff: RationalFunction = RF_ONE):
        return UdotElement(flavor, {m.validate(): coeff})

    # -- linear structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "UdotElement") -> None:
        if self.flavor != other.flavor:
            raise FlavorMismatch(f"{self.flavor} vs {other.flavor}")

    def __add__(self, other: "UdotElement") -> "UdotElement":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
        return UdotElement(self.flavor, out)

    def __sub__(self, other: "UdotElement") -> "UdotElement":
        return self + other.scale(-RF_ONE)

    def __neg__(self) -> "UdotElement":
        return self.scale(-RF_ONE)

    def scale(self, c: RationalFunction) -> "UdotElement":
        return UdotElement(self.flavor, {m: x * c for m, x in self.terms.items()})

    # -- multiplication ---------------------------------------------------------

    def __mul__(self, other: "UdotElement") -> "UdotElement":
        self._check(other)
        out: dict[UdotMonomial, RationalFunction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1.lam != m2.mu:
                    continue
                c = c1 * c2
                w_pair = m2.lam + 2 * m2.b  # weight to the right of the EF pair
                for (a_mid, b_mid), cs in _swap(m1.b, m2.a, w_pair, self.flavor):
                    a_tot = m1.a + a_mid
                    b_tot = b_mid + m2.b
                    coeff = (
                        c
                        * cs
                        * _qbinom_flavor(a_tot, m1.a, self.flavor)
                        * _qbinom_flavor(b_tot, m2.b, self.flavor)
                    )
                    if coeff.is_zero():
                        continue
                    key = UdotMonomial(
                        m2.lam + 2 * b_tot - 2 * a_tot, a_tot, b_tot, m2.lam
                    )
                    prev = out.get(key)
                    out[key] = coeff if prev is None else prev + coeff
        return UdotElement(self.flavor, out)

    # -- comparisons / rendering ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, UdotElement)
            and self.flavor == other.flavor
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.flavor, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            parts.append(str(m) if c.is_one() else f"({c}) {m}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<UdotElement[{self.flavor}] {self}>"

    def to_json_obj(self) -> list:
        return [
            {**m.to_json_obj(), "coeff": self.terms[m].to_json_obj()}
            for m in sorted(self.terms)
        ]


# ---------------------------------------------------------------------------
# the twist isomorphism between the flavors
# ---------------------------------------------------------------------------


def _gamma_e(b: int, lam: int) -> int:
    """Accumulated twist exponent on the divided letter E^(b) 1_lam: the
    single-step twists t^(nu + p(nu)) over the chain nu = lam+2..lam+2b plus
    the mismatch of the two divided-power normalizations."""
    return b * (lam + _p(lam)) + b * (b + 1) + b * (b - 1) // 2


def _gamma_f(a: int) -> int:
    """F letters map untwisted; only the factorial normalizations differ."""
    return a * (a - 1) // 2


def phi(x: UdotElement) -> UdotElement:
    """The isomorphism from the sl2 flavor to the osp flavor."""
    if x.flavor != "sl2":
        raise FlavorMismatch("phi expects an sl2-flavor element")
    out: dict[UdotMonomial, RationalFunction] = {}
    for m, c in x.terms.items():
        tw = _rf_unit(_gamma_e(m.b, m.lam) + _gamma_f(m.a))
        out[m] = c * tw
    return UdotElement("osp", out)


def phi_inv(x: UdotElement) -> UdotElement:
    """The inverse isomorphism, osp flavor to sl2 flavor."""
    if x.flavor != "osp":
        raise FlavorMismatch("phi_inv expects an osp-flavor element")
    out: dict[UdotMonomial, RationalFunction] = {}
    for m, c in x.terms.items():
        tw = _rf_unit(-_gamma_e(m.b, m.lam) - _gamma_f(m.a))
        out[m] = c * tw
    return UdotElement("sl2", out)


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------


def commutator_check(lam: int, flavor: str = "osp") -> bool:
    """The defining commutator at weight lam, evaluated by the engine."""
    ef = UdotElement.e_gen(lam, flavor) * UdotElement.f_gen(lam - 2, flavor)
    fe = UdotElement.f_gen(lam, flavor) * UdotElement.e_gen(lam + 2, flavor)
    if flavor == "osp":
        lhs = ef - fe.scale(RationalFunction.unit(2))
        scal = RationalFunction(qint_v_signed(lam)) * _rf_unit(-lam - _p(lam))
    else:
        lhs = ef - fe
        scal = RationalFunction(qint_v_signed(lam))
    return lhs == UdotElement.unit(lam, flavor).scale(scal)


def check_clark_wang_form(lam: int) -> bool:
    """The rewritten commutator

    (t^(lam+p) E_{lam,lam-2})(t^(lam-1) F_{lam-2,lam})
      - t^2 (t^(lam+1) F_{lam,lam+2})(t^(lam+2+p) E_{lam+2,lam})
        = [lam]_{v,t} 1_lam

    with p = p(lam) (so p(lam+2) = p); the right side reads
    t^(lam-1) [lam]_v for any integer lam."""
    p = _p(lam)
    ef = (
        UdotElement.e_gen(lam).scale(_rf_unit(lam + p))
        * UdotElement.f_gen(lam - 2).scale(_rf_unit(lam - 1))
    )
    fe = (
        UdotElement.f_gen(lam).scale(_rf_unit(lam + 1))
        * UdotElement.e_gen(lam + 2).scale(_rf_unit(lam + 2 + p))
    )
    lhs = ef - fe.scale(RationalFunction.unit(2))
    rhs = UdotElement.unit(lam).scale(
        RationalFunction(qint_v_signed(lam)) * _rf_unit(lam - 1)
    )
    return lhs == rhs


def expand_single_letters(a: int, b: int, lam: int, flavor: str = "osp") -> UdotElement:
    """Brute-force oracle: multiply out a single-step letters F then b single
    E letters on 1_lam and divide by the factorials at the very end."""
    out = UdotElement.unit(lam, flavor)
    w = lam
    for _ in range(b):
        out = UdotElement.e_gen(w + 2, flavor) * out
        w += 2
    for _ in range(a):
        out = UdotElement.f_gen(w - 2, flavor) * out
        w -= 2
    denom = RF_ONE
    for k in range(1, a + 1):
        denom = denom * _qint_flavor(k, flavor)
    for k in range(1, b + 1):
        denom = denom * _qint_flavor(k, flavor)
    return out.scale(denom.inverse())


# ---------------------------------------------------------------------------
# positivity probe
# ---------------------------------------------------------------------------


def proxy_family(lam_window: tuple[int, int], deg_bound: int) -> list[tuple]:
    """The divided-power proxy family: both orderings F^(a) 1_lam E^(b) and
    E^(a) 1_lam F^(b) for middle weights in the window and degrees up to the
    bound.  Returns (kind, a, lam, b, sl2-element) tuples."""
    lo, hi = lam_window
    out = []
    for lam in range(lo, hi + 1):
        for a in range(deg_bound + 1):
            for b in range(deg_bound + 1):
                f_elem = UdotElement.divided_f(a, lam, "sl2") * UdotElement.divided_e(
                    b, lam - 2 * b, "sl2"
                )
                out.append(("F", a, lam, b, f_elem))
                e_elem = UdotElement.divided_e(a, lam, "sl2") * UdotElement.divided_f(
                    b, lam + 2 * b, "sl2"
                )
                out.append(("E", a, lam, b, e_elem))
    return out


def _adapted_expand(z: UdotElement) -> dict[tuple, RationalFunction]:
    """Expand an sl2 element over the weight-adapted monomial family:
    F-then-E words on blocks with mu + lam >= 0 and E-then-F words on blocks
    with mu + lam < 0 (the two agree on the boundary).  The E-then-F side is
    unitriangular over the normal form, so a greedy peel terminates."""
    coeffs: dict[tuple, RationalFunction] = {}
    rest = z
    while not rest.is_zero():
        # largest word first so subtracting only produces smaller ones
        m = max(rest.terms, key=lambda k: (k.a + k.b, k))
        c = rest.terms[m]
        if m.mu + m.lam >= 0:
            coeffs[("F", m.a, m.lam + 2 * m.b, m.b)] = c
            rest = rest - UdotElement.monomial(m, "sl2", c)
        else:
            # the E-then-F element whose leading normal term is m:
            # E^(b) 1_(lam-2a) F^(a) 1_lam
            elem = UdotElement.divided_e(m.b, m.lam - 2 * m.a, "sl2") * UdotElement.divided_f(
                m.a, m.lam, "sl2"
            )
            lead = elem.terms.get(m)
            if lead is None or not lead.is_one():
                raise AssertionError("E-then-F family is not unitriangular")
            coeffs[("E", m.b, m.lam - 2 * m.a, m.a)] = c
            rest = rest - elem.scale(c)
    return coeffs


def positivity_probe(lam_window: tuple[int, int], deg_bound: int) -> dict:
    """Products of the twisted proxy family, expanded over the weight-adapted
    family; reports every coefficient not in N[v, v^-1] verbatim.

    The products are computed in the osp flavor (on the twisted images) and
    pulled back through the inverse twist, so a clean report also exercises
    the isomorphism on every pair."""
    from qschur.schur import classify_positive  # local import; no cycle at module load

    family = proxy_family(lam_window, deg_bound)
    osp_family = [((kind, a, lam, b), phi(elem)) for kind, a, lam, b, elem in family]
    by_target: dict[int, list] = {}
    for key, elem in osp_family:
        if elem.is_zero():
            continue
        mu = next(iter(elem.terms)).mu
        by_target.setdefault(mu, []).append((key, elem))
    checked = 0
    violations = []
    for key_x, x in osp_family:
        if x.is_zero():
            continue
        lam_src = next(iter(x.terms)).lam
        for key_y, y in by_target.get(lam_src, ()):  # x . y needs mu(y) = lam(x)
            prod = x * y
            checked += 1
            if prod.is_zero():
                continue
            for fam_key, coeff in sorted(_adapted_expand(phi_inv(prod)).items()):
                cls = classify_positive(coeff)
                if cls is None or cls[0] != 0:
                    violations.append(
                        {
                            "x": list(key_x),
                            "y": list(key_y),
                            "term": list(fam_key),
                            "coeff": str(coeff),
                        }
                    )
    return {
        "window": list(lam_window),
        "deg_bound": deg_bound,
        "family_size": len(family),
        "products_checked": checked,
        "violations": violations,
    }
