"""Finite-dimensional weight modules of quantum osp(1|2).

Covers the two families of (d+1)-dimensional simple highest weight modules,
super tensor products, weight classification, the integral-form checks for
divided powers, and the data conversions between weight modules of plus type
and modules over the idempotented form.

Conventions.  A weight vector of weight lambda and sign s is one where K acts
by  s * v^lambda * t^(-lambda - p(lambda)),  p(lambda) = lambda mod 2.  On the
simple module with highest weight d the actions are

    F xi_r = t^r [r+1]_v xi_{r+1}
    E xi_r = ± t^(r-1) [d+1-r]_v xi_{r-1}
    K xi_r = ± t^(2r) v^(d-2r) xi_r

(upper signs: plus family; lower: minus family), and the super parity of
xi_r is r mod 2.  Tensor products act through the comultiplication with the
sign rule (a (x) b)(m (x) n) = (-1)^(p(b)p(m)) am (x) bn.
"""

from __future__ import annotations

from typing import NamedTuple

from qschur import linalg
from qschur.coeff import (
    GaussianLaurent,
    RF_ONE,
    RF_ZERO,
    RationalFunction,
    qfact_vt,
    qint_v,
    unit_pow,
)

Matrix = linalg.Matrix


class NotWeightModule(ValueError):
    """A K-eigenvalue fits no (lambda, sign) pattern."""


class NotTypePlus(ValueError):
    """The module has a weight vector of minus type."""


class WeightLabel(NamedTuple):
    lam: int
    sign: int

    @property
    def parity(self) -> int:
        """p(lambda): the parity of the weight, not of the vector."""
        return self.lam % 2

    def eigenvalue(self) -> RationalFunction:
        """The K-eigenvalue sign * v^lam * t^(-lam - p(lam))."""
        u = unit_pow(-self.lam - self.parity)
        if self.sign < 0:
            u = -u
        return RationalFunction(GaussianLaurent.monomial(self.lam, u))


class BasisVector(NamedTuple):
    vid: str
    label: WeightLabel
    parity: int  # super parity of the vector; for xi_r this is r mod 2


class WeightModule:
    """A module given by labelled basis vectors and generator matrices.

    Matrices act on column vectors: ``mat[target][source]``.
    """

    __slots__ = ("basis", "matE", "matF", "matK", "matKinv")

    def __init__(self, basis, matE, matF, matK, matKinv):
        self.basis: list[BasisVector] = list(basis)
        self.matE: Matrix = matE
        self.matF: Matrix = matF
        self.matK: Matrix = matK
        self.matKinv: Matrix = matKinv

    @property
    def dim(self) -> int:
        return len(self.basis)

    def mat(self, name: str) -> Matrix:
        return {"E": self.matE, "F": self.matF, "K": self.matK, "Kinv": self.matKinv}[name]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeightModule)
            and self.basis == other.basis
            and self.matE == other.matE
            and self.matF == other.matF
            and self.matK == other.matK
            and self.matKinv == other.matKinv
        )

    def __repr__(self) -> str:
        return f"<WeightModule dim={self.dim}>"

    def verify(self) -> list[dict]:
        """Check S1, S2, S3 as exact matrix identities; returns one record
        per relation with an ``ok`` flag."""
        n = self.dim
        ident = linalg.identity(n)
        out = []
        ok1 = (
            linalg.mat_mul(self.matK, self.matKinv) == ident
            and linalg.mat_mul(self.matKinv, self.matK) == ident
        )
        out.append({"relation": "S1: K K^-1 = 1 = K^-1 K", "ok": ok1})
        twist = RationalFunction(GaussianLaurent.monomial(2, unit_pow(-2)))
        ok2e = linalg.mat_mul(self.matK, self.matE) == linalg.mat_scale(
            linalg.mat_mul(self.matE, self.matK), twist
        )
        out.append({"relation": "S2: K E = v^2 t^-2 E K", "ok": ok2e})
        twist_f = RationalFunction(GaussianLaurent.monomial(-2, unit_pow(2)))
        ok2f = linalg.mat_mul(self.matK, self.matF) == linalg.mat_scale(
            linalg.mat_mul(self.matF, self.matK), twist_f
        )
        out.append({"relation": "S2: K F = v^-2 t^2 F K", "ok": ok2f})
        comm = linalg.mat_sub(
            linalg.mat_mul(self.matE, self.matF),
            linalg.mat_scale(linalg.mat_mul(self.matF, self.matE), RationalFunction.unit(2)),
        )
        denom = RationalFunction(
            GaussianLaurent.one(), GaussianLaurent.v_power(1) - GaussianLaurent.v_power(-1)
        )
        rhs = linalg.mat_scale(linalg.mat_sub(self.matK, self.matKinv), denom)
        out.append({"relation": "S3: E F - t^2 F E = (K - K^-1)/(v - v^-1)", "ok": comm == rhs})
        return out

    def verify_ok(self) -> bool:
        return all(rec["ok"] for rec in self.verify())

    def to_json_obj(self) -> dict:
        def sparse(mat):
            return [
                [i, j, mat[i][j].to_json_obj()]
                for i in range(self.dim)
                for j in range(self.dim)
                if not mat[i][j].is_zero()
            ]

        return {
            "basis": [
                {"id": b.vid, "lambda": b.label.lam, "sign": b.label.sign, "parity": b.parity}
                for b in self.basis
            ],
            "matE": sparse(self.matE),
            "matF": sparse(self.matF),
            "matK": sparse(self.matK),
            "matKinv": sparse(self.matKinv),
        }


def simple_module(d: int, sign: int = 1) -> WeightModule:
    """The (d+1)-dimensional simple highest weight module of the given sign."""
    if d < 0:
        raise ValueError("simple_module requires d >= 0")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    # the vector xi_r sits in weight d-2r with decomposition sign
    # sign * i^(d + p(d))
    base = 1 if (d + d % 2) % 4 == 0 else -1
    basis = [
        BasisVector(f"x{r}", WeightLabel(d - 2 * r, sign * base), r % 2)
        for r in range(d + 1)
    ]
    n = d + 1
    matE, matF = linalg.zeros(n, n), linalg.zeros(n, n)
    matK, matKinv = linalg.zeros(n, n), linalg.zeros(n, n)
    sgn = RF_ONE if sign == 1 else -RF_ONE
    for r in range(d + 1):
        if r + 1 <= d:
            matF[r + 1][r] = RationalFunction(qint_v(r + 1).scale(unit_pow(r)))
        if r - 1 >= 0:
            coeff = RationalFunction(qint_v(d + 1 - r).scale(unit_pow(r - 1)))
            matE[r - 1][r] = coeff * sgn
        eig = RationalFunction(GaussianLaurent.monomial(d - 2 * r, unit_pow(2 * r))) * sgn
        matK[r][r] = eig
        matKinv[r][r] = eig.inverse()
    return WeightModule(basis, matE, matF, matK, matKinv)


def tensor(m: WeightModule, n: WeightModule) -> WeightModule:
    """Super tensor product, acting through Delta with the sign rule
    (a (x) b)(x (x) y) = (-1)^(p(b)p(x)) ax (x) by."""
    dm, dn = m.dim, n.dim
    basis = []
    for bi in m.basis:
        for bj in n.basis:
            lam = bi.label.lam + bj.label.lam
            sign = bi.label.sign * bj.label.sign
            if bi.label.lam % 2 and bj.label.lam % 2:
                sign = -sign
            basis.append(
                BasisVector(f"({bi.vid},{bj.vid})", WeightLabel(lam, sign), (bi.parity + bj.parity) % 2)
            )
    dim = dm * dn
    matE, matF = linalg.zeros(dim, dim), linalg.zeros(dim, dim)
    matK, matKinv = linalg.zeros(dim, dim), linalg.zeros(dim, dim)
    for i_src in range(dm):
        src_parity = m.basis[i_src].parity
        koszul = -RF_ONE if src_parity else RF_ONE
        for j_src in range(dn):
            col = i_src * dn + j_src
            # E (x) 1 term
            for i_tgt in range(dm):
                c = m.matE[i_tgt][i_src]
                if not c.is_zero():
                    matE[i_tgt * dn + j_src][col] = matE[i_tgt * dn + j_src][col] + c
            # K (x) E term, with the source-parity sign
            for i_tgt in range(dm):
                ck = m.matK[i_tgt][i_src]
                if ck.is_zero():
                    continue
                for j_tgt in range(dn):
                    ce = n.matE[j_tgt][j_src]
                    if not ce.is_zero():
                        row = i_tgt * dn + j_tgt
                        matE[row][col] = matE[row][col] + koszul * ck * ce
            # 1 (x) F term, with the source-parity sign
            for j_tgt in range(dn):
                cf = n.matF[j_tgt][j_src]
                if not cf.is_zero():
                    row = i_src * dn + j_tgt
                    matF[row][col] = matF[row][col] + koszul * cf
            # F (x) K^-1 term
            for i_tgt in range(dm):
                cf = m.matF[i_tgt][i_src]
                if cf.is_zero():
                    continue
                for j_tgt in range(dn):
                    ck = n.matKinv[j_tgt][j_src]
                    if not ck.is_zero():
                        row = i_tgt * dn + j_tgt
                        matF[row][col] = matF[row][col] + cf * ck
            # group-likes
            for i_tgt in range(dm):
                ck = m.matK[i_tgt][i_src]
                cki = m.matKinv[i_tgt][i_src]
                for j_tgt in range(dn):
                    row = i_tgt * dn + j_tgt
                    if not ck.is_zero() and not n.matK[j_tgt][j_src].is_zero():
                        matK[row][col] = matK[row][col] + ck * n.matK[j_tgt][j_src]
                    if not cki.is_zero() and not n.matKinv[j_tgt][j_src].is_zero():
                        matKinv[row][col] = matKinv[row][col] + cki * n.matKinv[j_tgt][j_src]
    return WeightModule(basis, matE, matF, matK, matKinv)


def tensor_many(mods: list[WeightModule]) -> WeightModule:
    """Iterated tensor product, bracketed left to right."""
    out = mods[0]
    for m in mods[1:]:
        out = tensor(out, m)
    return out


def _classify_eigenvalue(c: RationalFunction) -> WeightLabel:
    """Solve  c == sign * v^lam * t^(-lam-p(lam))  for (lam, sign)."""
    if c.is_zero() or not c.is_laurent():
        raise NotWeightModule(f"eigenvalue {c} is not a Laurent monomial")
    lau = c.to_laurent()
    if lau.n_terms() != 1:
        raise NotWeightModule(f"eigenvalue {c} is not a monomial")
    lam = lau.min_exp()
    g = lau.terms[lam]
    # strip the predicted unit; what is left must be +-1
    resid = g * unit_pow(lam + lam % 2)
    if resid.im != 0 or resid.re not in (1, -1):
        raise NotWeightModule(f"eigenvalue {c} has unit {g} incompatible with weight {lam}")
    return WeightLabel(lam, resid.re)


def weight_decompose(m: WeightModule) -> list[tuple[int, int, int]]:
    """Classify the K-eigenvalues; returns (lambda, sign, multiplicity)
    triples sorted by weight.  Requires matK diagonal on the given basis."""
    n = m.dim
    for i in range(n):
        for j in range(n):
            if i != j and not m.matK[i][j].is_zero():
                raise NotWeightModule("matK is not diagonal on the given basis")
    counts: dict[tuple[int, int], int] = {}
    for i in range(n):
        label = _classify_eigenvalue(m.matK[i][i])
        counts[label] = counts.get(label, 0) + 1
    return sorted((lam, sign, mult) for (lam, sign), mult in counts.items())


class UdotModule:
    """A weight-module presentation over the idempotented algebra: weight
    spaces indexed by integers and one block per arrow E_{lam+2,lam},
    F_{lam-2,lam}.  Blocks are stored by source weight.

    The idempotented side has no super grading of its own, so the vector
    parities of the weight module it came from are carried along as opaque
    metadata (p(lambda) when the module was built from raw block data)."""

    __slots__ = ("basis", "eblocks", "fblocks", "parities")

    def __init__(self, basis, eblocks, fblocks, parities=None):
        self.basis: list[tuple[str, int]] = list(basis)  # (vid, lambda), module order
        self.eblocks: dict[int, Matrix] = eblocks  # lam -> block of E_{lam+2,lam}
        self.fblocks: dict[int, Matrix] = fblocks  # lam -> block of F_{lam-2,lam}
        if parities is None:
            parities = [lam % 2 for _, lam in self.basis]
        self.parities: list[int] = list(parities)

    @property
    def weight_spaces(self) -> dict[int, list[str]]:
        out: dict[int, list[str]] = {}
        for vid, lam in self.basis:
            out.setdefault(lam, []).append(vid)
        return out

    def _indices(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, (_, lam) in enumerate(self.basis):
            out.setdefault(lam, []).append(i)
        return out

    def verify(self) -> bool:
        """The defining commutator of the idempotented algebra, blockwise:
        E_{lam,lam-2} F_{lam-2,lam} - t^2 F_{lam,lam+2} E_{lam+2,lam}
        = t^(-lam-p(lam)) [lam]_v 1_lam."""
        idx = self._indices()
        for lam, rows in idx.items():
            k = len(rows)
            ef = linalg.zeros(k, k)
            if lam in self.fblocks and (lam - 2) in self.eblocks:
                ef = linalg.mat_mul(self.eblocks[lam - 2], self.fblocks[lam])
            fe = linalg.zeros(k, k)
            if lam in self.eblocks and (lam + 2) in self.fblocks:
                fe = linalg.mat_mul(self.fblocks[lam + 2], self.eblocks[lam])
            lhs = linalg.mat_sub(ef, linalg.mat_scale(fe, RationalFunction.unit(2)))
            scalar = RationalFunction(
                qint_v(abs(lam)).scale(unit_pow(-lam - lam % 2))
            )
            if lam < 0:
                scalar = -scalar
            rhs = linalg.mat_scale(linalg.identity(k), scalar)
            if lhs != rhs:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, UdotModule)
            and self.basis == other.basis
            and self.eblocks == other.eblocks
            and self.fblocks == other.fblocks
            and self.parities == other.parities
        )


def to_udot(m: WeightModule) -> UdotModule:
    """Prop-14 conversion: a plus-type weight module becomes a module over
    the idempotented algebra with the same underlying data."""
    for b in m.basis:
        if b.label.sign != 1:
            raise NotTypePlus(f"vector {b.vid} has weight ({b.label.lam}, -)")
    idx: dict[int, list[int]] = {}
    for i, b in enumerate(m.basis):
        idx.setdefault(b.label.lam, []).append(i)
    eblocks: dict[int, Matrix] = {}
    fblocks: dict[int, Matrix] = {}
    for lam, cols in idx.items():
        if lam + 2 in idx:
            rows = idx[lam + 2]
            eblocks[lam] = [[m.matE[i][j] for j in cols] for i in rows]
        if lam - 2 in idx:
            rows = idx[lam - 2]
            fblocks[lam] = [[m.matF[i][j] for j in cols] for i in rows]
    # E must not connect anything except lam -> lam+2 (S2 forces this)
    for i, bi in enumerate(m.basis):
        for j, bj in enumerate(m.basis):
            if not m.matE[i][j].is_zero() and bi.label.lam != bj.label.lam + 2:
                raise NotWeightModule("matE connects weights differing from +2")
            if not m.matF[i][j].is_zero() and bi.label.lam != bj.label.lam - 2:
                raise NotWeightModule("matF connects weights differing from -2")
    return UdotModule(
        list((b.vid, b.label.lam) for b in m.basis),
        eblocks,
        fblocks,
        [b.parity for b in m.basis],
    )


def from_udot(n: UdotModule) -> WeightModule:
    """Inverse Prop-14 conversion; K acts by v^lam t^(-lam-p(lam)) on the
    weight-lam space.  Vector parities come from the carried metadata."""
    basis = [
        BasisVector(vid, WeightLabel(lam, 1), par)
        for (vid, lam), par in zip(n.basis, n.parities)
    ]
    dim = len(basis)
    idx = n._indices()
    matE, matF = linalg.zeros(dim, dim), linalg.zeros(dim, dim)
    matK, matKinv = linalg.zeros(dim, dim), linalg.zeros(dim, dim)
    for lam, cols in idx.items():
        if lam in n.eblocks:
            rows = idx[lam + 2]
            blk = n.eblocks[lam]
            for a, i in enumerate(rows):
                for b, j in enumerate(cols):
                    matE[i][j] = blk[a][b]
        if lam in n.fblocks:
            rows = idx[lam - 2]
            blk = n.fblocks[lam]
            for a, i in enumerate(rows):
                for b, j in enumerate(cols):
                    matF[i][j] = blk[a][b]
    for i, b in enumerate(basis):
        eig = b.label.eigenvalue()
        matK[i][i] = eig
        matKinv[i][i] = eig.inverse()
    return WeightModule(basis, matE, matF, matK, matKinv)


def simplicity_check(m: WeightModule) -> bool:
    """True iff closing every basis vector under E, F, K, K^-1 yields the
    whole space.  For modules whose K-spectrum is multiplicity-free (all the
    simple modules here) this decides simplicity; a proper closure always
    refutes it."""
    mats = [m.matE, m.matF, m.matK, m.matKinv]
    for i in range(m.dim):
        seed = [RF_ZERO] * m.dim
        seed[i] = RF_ONE
        if linalg.span_closure(mats, [seed]) < m.dim:
            return False
    return True


def generated_submodule_dim(m: WeightModule, index: int) -> int:
    seed = [RF_ZERO] * m.dim
    seed[index] = RF_ONE
    return linalg.span_closure([m.matE, m.matF, m.matK, m.matKinv], [seed])


def divided_power_matrix(m: WeightModule, gen: str, n: int) -> Matrix:
    """Matrix of E^(n) or F^(n): the n-th power divided by [n]!_{v,t}."""
    base = m.matE if gen == "E" else m.matF
    power = linalg.mat_pow(base, n)
    inv = RationalFunction(GaussianLaurent.one(), qfact_vt(n))
    return linalg.mat_scale(power, inv)


def integrality_check(m: WeightModule, n_max: int | None = None) -> list[dict]:
    """Check that E^(n), F^(n) and K^(+-1) act by matrices over Z[i][v,v^-1].

    Divided powers vanish above the dimension, so n runs to dim by default.
    """
    if n_max is None:
        n_max = m.dim
    report = []
    for name, mat in (("K", m.matK), ("Kinv", m.matKinv)):
        bad = [
            (i, j)
            for i in range(m.dim)
            for j in range(m.dim)
            if not mat[i][j].is_laurent()
        ]
        report.append({"op": name, "n": 1, "integral": not bad, "violations": bad})
    for gen in ("E", "F"):
        for n in range(n_max + 1):
            mat = divided_power_matrix(m, gen, n)
            bad = [
                (i, j)
                for i in range(m.dim)
                for j in range(m.dim)
                if not mat[i][j].is_laurent()
            ]
            report.append({"op": gen, "n": n, "integral": not bad, "violations": bad})
    return report


def integrality_ok(m: WeightModule, n_max: int | None = None) -> bool:
    return all(rec["integral"] for rec in integrality_check(m, n_max))
