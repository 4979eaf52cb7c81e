"""The anti-automorphism rho and the contravariant form on the simple modules.

On the tensor-space model, rho is transposition with respect to the super
pairing of the product basis, whose only trace is the block sign
(-1)^(r(r-1)/2) on the weight-r component.  This is automatically an
anti-automorphism, fixes every idempotent and every K_r, and on single steps
evaluates to

    rho(E_{r,r+1}) = v t^(-2r-2) K_{r+1} F_{r+1,r} = v^(d-2r-1) F_{r+1,r}
    rho(F_{r+1,r}) = v t^(2r)    K_r^-1 E_{r,r+1} = v^(2r+1-d) E_{r,r+1}

(the twists are exactly the adjunction shifts of the E/F functor pair; the
verification suite checks these images and the product reversal).  The
contravariant form on the simple module of highest weight d is then pinned
by <xi_0, xi_0> = 1 and <F.m, n> = <m, rho(F).n>, which forces

    <xi_r, xi_r> = v^(-r(d-r)) [d choose r]_v,

and the E- and K-contravariance become checkable identities instead of
inputs; their failure would raise InconsistentRecursion.
"""

from __future__ import annotations

from dataclasses import dataclass

from qschur.coeff import (
    GaussianLaurent,
    RF_ONE,
    RF_ZERO,
    RationalFunction,
    qbinom_v,
    unit_pow,
)
from qschur.repmod import WeightModule, simple_module
from qschur.schur import SchurElement, e_step, f_step, generators


class InconsistentRecursion(ArithmeticError):
    """The E- and F-adjunction demands on the form conflict."""


def rho(x: SchurElement) -> SchurElement:
    """The anti-automorphism: signed block transpose."""
    out: dict[tuple[int, int], dict] = {}
    for (r, s), blk in x.blocks.items():
        sign = (r * (r - 1) // 2 + s * (s - 1) // 2) % 2
        tgt = out.setdefault((s, r), {})
        for (i, j), c in blk.items():
            tgt[(j, i)] = -c if sign else c
    return SchurElement(x.d, out)


def as_scalar_multiple(x: SchurElement, y: SchurElement) -> RationalFunction | None:
    """The scalar c with x == c * y, if one exists."""
    if y.is_zero():
        return RF_ZERO if x.is_zero() else None
    key = next(iter(y.blocks))
    pos = next(iter(y.blocks[key]))
    c = x.blocks.get(key, {}).get(pos, RF_ZERO) / y.blocks[key][pos]
    return c if x == y.scale(c) else None


@dataclass
class GramForm:
    """The diagonal contravariant form on the simple module of highest
    weight d: <xi_r, xi_s> = delta_{rs} diag[r]."""

    d: int
    diag: list[RationalFunction]

    def pair(self, r: int, s: int) -> RationalFunction:
        return self.diag[r] if r == s else RF_ZERO

    def to_json_obj(self) -> dict:
        return {"d": self.d, "diag": [c.to_json_obj() for c in self.diag]}


def _generator_actions(d: int) -> list[tuple[str, int, list[list[RationalFunction]]]]:
    """Matrices of the generators on the simple module of highest weight d,
    acting U-dot style: the (r, r') generator picks out the weight-r' basis
    vector."""
    mod = simple_module(d, 1)
    n = d + 1

    def single(r_tgt: int, r_src: int, coeff_mat) -> list[list[RationalFunction]]:
        out = [[RF_ZERO] * n for _ in range(n)]
        out[r_tgt][r_src] = coeff_mat[r_tgt][r_src]
        return out

    acts: list[tuple[str, int, list[list[RationalFunction]]]] = []
    for r in range(d + 1):
        one = [[RF_ZERO] * n for _ in range(n)]
        one[r][r] = RF_ONE
        acts.append(("one", r, one))
        kmat = [[RF_ZERO] * n for _ in range(n)]
        kmat[r][r] = mod.matK[r][r]
        acts.append(("K", r, kmat))
    for r in range(d):
        acts.append(("E", r, single(r, r + 1, mod.matE)))
        acts.append(("F", r + 1, single(r + 1, r, mod.matF)))
    return acts


def _schur_generator(d: int, kind: str, r: int) -> SchurElement:
    gens = generators(d)
    if kind == "one":
        return gens["one"][r]
    if kind == "K":
        return gens["K"][r]
    if kind == "E":
        return e_step(d, r)
    if kind == "F":
        return f_step(d, r)
    raise ValueError(kind)


def _rho_action(d: int, kind: str, r: int) -> list[list[RationalFunction]]:
    """The matrix of rho(generator) on the simple module: rho sends each
    generator to a scalar multiple of the opposite one, and the scalar is
    extracted from the tensor-space model."""
    n = d + 1
    out = [[RF_ZERO] * n for _ in range(n)]
    mod = simple_module(d, 1)
    img = rho(_schur_generator(d, kind, r))
    if kind == "one":
        out[r][r] = as_scalar_multiple(img, _schur_generator(d, "one", r))
        return out
    if kind == "K":
        c = as_scalar_multiple(img, _schur_generator(d, "one", r))
        out[r][r] = c
        return out
    if kind == "E":
        c = as_scalar_multiple(img, _schur_generator(d, "F", r + 1))
        if c is None:
            raise InconsistentRecursion(f"rho(E_{r},{r + 1}) is not a multiple of F")
        out[r + 1][r] = c * mod.matF[r + 1][r]
        return out
    if kind == "F":
        c = as_scalar_multiple(img, _schur_generator(d, "E", r - 1))
        if c is None:
            raise InconsistentRecursion(f"rho(F_{r},{r - 1}) is not a multiple of E")
        out[r - 1][r] = c * mod.matE[r - 1][r]
        return out
    raise ValueError(kind)


def contravariance_violations(d: int, form: GramForm) -> list[dict]:
    """All (generator, basis pair) failures of <g.m, n> = <m, rho(g).n>."""
    bad = []
    for kind, r, act in _generator_actions(d):
        rho_act = _rho_action(d, kind, r)
        for rr in range(d + 1):
            for ss in range(d + 1):
                lhs = act[rr][ss] * form.diag[rr]
                rhs = rho_act[ss][rr] * form.diag[ss]
                if lhs != rhs:
                    bad.append({"generator": f"{kind}_{r}", "m": ss, "n": rr})
    return bad


def derive_gram(d: int) -> GramForm:
    """Build the form from <xi_0, xi_0> = 1 and F-contravariance; then check
    contravariance of every generator (E-adjunction is a theorem here, not an
    input).  Any conflict raises InconsistentRecursion."""
    mod = simple_module(d, 1)
    diag = [RF_ONE]
    for r in range(d):
        img = rho(f_step(d, r + 1))
        c = as_scalar_multiple(img, e_step(d, r))
        if c is None:
            raise InconsistentRecursion(f"rho(F_{r + 1},{r}) is not a multiple of E_{r},{r + 1}")
        # <F xi_r, xi_{r+1}> = <xi_r, rho(F) xi_{r+1}>
        fc = mod.matF[r + 1][r]
        ec = mod.matE[r][r + 1]
        diag.append(c * ec * diag[r] / fc)
    form = GramForm(d, diag)
    bad = contravariance_violations(d, form)
    if bad:
        raise InconsistentRecursion(f"{len(bad)} contravariance failures: {bad[:3]}")
    return form


def gram_closed_form(d: int, r: int) -> RationalFunction:
    """The independently derived value v^(-r(d-r)) [d choose r]_v."""
    return RationalFunction(qbinom_v(d, r).shifted(-r * (d - r)))
