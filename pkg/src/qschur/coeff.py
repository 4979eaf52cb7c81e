"""Exact arithmetic in Z[i][v, v^-1] and its fraction field.

The coefficient ring of everything in this package is the ring of Laurent
polynomials in ``v`` over the Gaussian integers, with the unit ``i`` playing
the role of the parameter ``t`` (so ``t^2 = -1`` and ``t^4 = 1`` hold on the
nose).  On top of the ring we provide the (v,t)-quantum integers, factorials
and binomials, the bar involution ``v -> v^-1``, and a canonical-form
fraction field used wherever a denominator like ``v - v^-1`` is unavoidable.

All values are immutable after construction; every operation returns a fresh
value, so instances may be shared freely (including across threads).
"""

from __future__ import annotations

from functools import lru_cache


class NotDivisible(ArithmeticError):
    """Exact division failed; usually signals a broken identity upstream."""


class GaussianInt:
    """A Gaussian integer ``re + im*i`` with arbitrary-precision parts.

    >>> GaussianInt(2, -1) * GaussianInt(0, 1)
    GaussianInt(1, 2)
    >>> GaussianInt(0, 1) * GaussianInt(0, 1)
    GaussianInt(-1, 0)
    """

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = re
        self.im = im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_one(self) -> bool:
        return self.re == 1 and self.im == 0

    def is_unit(self) -> bool:
        return (self.re, self.im) in ((1, 0), (-1, 0), (0, 1), (0, -1))

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GaussianInt)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        ipart = "i" if mag == 1 else f"{mag}*i"
        return f"({self.re}{sign}{ipart})"


G_ZERO = GaussianInt(0, 0)
G_ONE = GaussianInt(1, 0)
G_I = GaussianInt(0, 1)

# i^0, i^1, i^2, i^3
_UNITS = (G_ONE, G_I, GaussianInt(-1, 0), GaussianInt(0, -1))


def unit_pow(k: int) -> GaussianInt:
    """The unit i^k; this is how every power of t enters the package."""
    return _UNITS[k % 4]


def gint_divmod(a: GaussianInt, b: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Nearest-rounding division, making Z[i] Euclidean: ``a = q*b + r`` with
    ``norm(r) <= norm(b)/2``."""
    if b.is_zero():
        raise ZeroDivisionError("Gaussian division by zero")
    n = b.norm()
    t = a * b.conjugate()
    # round-half-up on both components; any nearest rounding works
    qr = (2 * t.re + n) // (2 * n)
    qi = (2 * t.im + n) // (2 * n)
    q = GaussianInt(qr, qi)
    return q, a - q * b


def gint_exact_div(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    if b.is_zero():
        raise ZeroDivisionError("Gaussian division by zero")
    n = b.norm()
    t = a * b.conjugate()
    if t.re % n or t.im % n:
        raise NotDivisible(f"{a} not divisible by {b} in Z[i]")
    return GaussianInt(t.re // n, t.im // n)


def canonical_unit(a: GaussianInt) -> GaussianInt:
    """The unique unit u in (1, i, -1, -i) with u*a in the quarter-plane
    ``re > 0 and im >= 0``.  That region is a fundamental domain for
    multiplication by i, so associates get identical canonical forms."""
    if a.is_zero():
        return G_ONE
    for u in _UNITS:
        b = u * a
        if b.re > 0 and b.im >= 0:
            return u
    raise AssertionError("unreachable")


def gint_gcd(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """Canonical gcd in Z[i] (Euclidean algorithm, canonical associate)."""
    while not b.is_zero():
        _, r = gint_divmod(a, b)
        a, b = b, r
    return canonical_unit(a) * a


class GaussianLaurent:
    """A sparse Laurent polynomial in ``v`` over Z[i].

    Terms are stored as a mapping from the integer exponent of ``v`` to a
    nonzero Gaussian coefficient; two values are equal iff the mappings are.

    >>> x = GaussianLaurent.v_power(1) + GaussianLaurent.v_power(-1)
    >>> print(x * x)
    v^2 + 2 + v^-2
    >>> print(x.bar())
    v + v^-1
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[int, GaussianInt] | None = None):
        # Callers must not hand over aliased dicts they later mutate.
        t = {} if terms is None else terms
        self.terms = {e: c for e, c in t.items() if not c.is_zero()}
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "GaussianLaurent":
        return _L_ZERO

    @staticmethod
    def one() -> "GaussianLaurent":
        return _L_ONE

    @staticmethod
    def from_int(n: int) -> "GaussianLaurent":
        return GaussianLaurent({0: GaussianInt(n, 0)} if n else {})

    @staticmethod
    def unit(k: int = 0) -> "GaussianLaurent":
        """The unit i^k as a constant Laurent polynomial."""
        return GaussianLaurent({0: unit_pow(k)})

    @staticmethod
    def v_power(e: int) -> "GaussianLaurent":
        return GaussianLaurent({e: G_ONE})

    @staticmethod
    def monomial(e: int, coeff: GaussianInt) -> "GaussianLaurent":
        return GaussianLaurent({e: coeff} if not coeff.is_zero() else {})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and 0 in self.terms and self.terms[0].is_one()

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def n_terms(self) -> int:
        return len(self.terms)

    def leading_coeff(self) -> GaussianInt:
        return self.terms[self.max_exp()]

    def content(self) -> GaussianInt:
        """Canonical Z[i]-gcd of all coefficients (0 for the zero polynomial)."""
        g = G_ZERO
        for c in self.terms.values():
            g = gint_gcd(g, c)
            if g.is_one():
                return g
        return g

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "GaussianLaurent") -> "GaussianLaurent":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return GaussianLaurent(out)

    def __sub__(self, other: "GaussianLaurent") -> "GaussianLaurent":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = -c
            else:
                s = s - c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return GaussianLaurent(out)

    def __neg__(self) -> "GaussianLaurent":
        return GaussianLaurent({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "GaussianLaurent") -> "GaussianLaurent":
        if not self.terms or not other.terms:
            return _L_ZERO
        out: dict[int, GaussianInt] = {}
        for e1, c1 in self.terms.items():
            r1, i1 = c1.re, c1.im
            for e2, c2 in other.terms.items():
                e = e1 + e2
                re = r1 * c2.re - i1 * c2.im
                im = r1 * c2.im + i1 * c2.re
                s = out.get(e)
                if s is None:
                    out[e] = GaussianInt(re, im)
                else:
                    out[e] = GaussianInt(s.re + re, s.im + im)
        return GaussianLaurent(out)

    def __pow__(self, n: int) -> "GaussianLaurent":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = _L_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: GaussianInt) -> "GaussianLaurent":
        if c.is_zero():
            return _L_ZERO
        return GaussianLaurent({e: x * c for e, x in self.terms.items()})

    def shifted(self, k: int) -> "GaussianLaurent":
        """Multiplication by v^k."""
        if k == 0:
            return self
        return GaussianLaurent({e + k: c for e, c in self.terms.items()})

    def bar(self) -> "GaussianLaurent":
        """The bar involution v -> v^-1 (Z[i]-linear, so i is fixed)."""
        return GaussianLaurent({-e: c for e, c in self.terms.items()})

    def exact_div(self, other: "GaussianLaurent") -> "GaussianLaurent":
        """The quotient q with ``q * other == self``; raises NotDivisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return _L_ZERO
        shift = self.min_exp() - other.min_exp()
        num = {e - self.min_exp(): c for e, c in self.terms.items()}
        den = {e - other.min_exp(): c for e, c in other.terms.items()}
        dd = max(den)
        dlc = den[dd]
        quot: dict[int, GaussianInt] = {}
        while num:
            nd = max(num)
            if nd < dd:
                raise NotDivisible("nonzero remainder in exact division")
            q = gint_exact_div(num[nd], dlc)
            quot[nd - dd] = q
            for e, c in den.items():
                k = e + nd - dd
                s = num.get(k, G_ZERO) - q * c
                if s.is_zero():
                    num.pop(k, None)
                else:
                    num[k] = s
        return GaussianLaurent(quot).shifted(shift)

    def divides(self, other: "GaussianLaurent") -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisible:
            return False

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GaussianLaurent) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted((e, c.re, c.im) for e, c in self.terms.items())))
        return self._hash

    # -- rendering / parsing ------------------------------------------------

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"GaussianLaurent({self.to_text()!r})"

    def to_text(self) -> str:
        """Canonical text form, terms in decreasing v-exponent.

        >>> print(qint_vt(2))
        i*v + i*v^-1
        """
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                vpart = ""
            elif e == 1:
                vpart = "v"
            else:
                vpart = f"v^{e}"
            if c.re != 0 and c.im != 0:
                body = str(c) + (f"*{vpart}" if vpart else "")
                sign = "+"
            else:
                if c.im == 0:
                    mag, imag = abs(c.re), False
                    sign = "+" if c.re > 0 else "-"
                else:
                    mag, imag = abs(c.im), True
                    sign = "+" if c.im > 0 else "-"
                cpart = "i" if (imag and mag == 1) else (str(mag) + ("*i" if imag else ""))
                if vpart:
                    body = vpart if (mag == 1 and not imag) else f"{cpart}*{vpart}"
                else:
                    body = cpart
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    @staticmethod
    def from_text(text: str) -> "GaussianLaurent":
        """Parse the canonical text form (inverse of :meth:`to_text`)."""
        return _parse_laurent(text)

    def to_json_obj(self) -> list[list[int]]:
        """JSON form: [exponent, re, im] triples in decreasing exponent order."""
        return [[e, self.terms[e].re, self.terms[e].im] for e in sorted(self.terms, reverse=True)]

    @staticmethod
    def from_json_obj(obj: list) -> "GaussianLaurent":
        return GaussianLaurent({int(e): GaussianInt(int(re), int(im)) for e, re, im in obj})


_L_ZERO = GaussianLaurent({})
_L_ONE = GaussianLaurent({0: G_ONE})


def _parse_gaussian(tok: str) -> GaussianInt:
    tok = tok.strip()
    if tok.startswith("(") and tok.endswith(")"):
        inner = tok[1:-1].replace(" ", "")
        # split a+bi / a-bi at the sign of the imaginary part
        for k in range(1, len(inner)):
            if inner[k] in "+-":
                re = int(inner[:k])
                ipart = inner[k:].replace("*", "")
                if ipart in ("+i", "-i"):
                    im = 1 if ipart == "+i" else -1
                else:
                    im = int(ipart[:-1])
                return GaussianInt(re, im)
        raise ValueError(f"bad Gaussian literal {tok!r}")
    tok = tok.replace("*", "")
    if tok.endswith("i"):
        body = tok[:-1]
        if body in ("", "+"):
            return G_I
        if body == "-":
            return GaussianInt(0, -1)
        return GaussianInt(0, int(body))
    return GaussianInt(int(tok), 0)


def _parse_laurent(text: str) -> GaussianLaurent:
    s = text.strip()
    if s in ("", "0"):
        return _L_ZERO
    # split into signed chunks at top level (never inside parentheses)
    chunks: list[str] = []
    depth = 0
    cur = ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur.strip() and cur.strip()[-1] not in "+-(*^eE":
            chunks.append(cur)
            cur = ch
        else:
            cur += ch
    chunks.append(cur)
    terms: dict[int, GaussianInt] = {}
    for chunk in chunks:
        chunk = chunk.strip()
        neg = False
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                neg = not neg
            chunk = chunk[1:].strip()
        if "v" in chunk:
            head, _, tail = chunk.partition("v")
            head = head.strip()
            if head.endswith("*"):
                head = head[:-1].strip()
            coeff = G_ONE if head == "" else _parse_gaussian(head)
            tail = tail.strip()
            if tail == "":
                exp = 1
            elif tail.startswith("^"):
                exp = int(tail[1:])
            else:
                raise ValueError(f"bad term {chunk!r}")
        else:
            coeff = _parse_gaussian(chunk)
            exp = 0
        if neg:
            coeff = -coeff
        if not coeff.is_zero():
            prev = terms.get(exp, G_ZERO)
            tot = prev + coeff
            if tot.is_zero():
                terms.pop(exp, None)
            else:
                terms[exp] = tot
    return GaussianLaurent(terms)


# ---------------------------------------------------------------------------
# gcd over Z[i][v] (subresultant PRS with Gaussian content extraction)
# ---------------------------------------------------------------------------


def _primitive(a: GaussianLaurent) -> tuple[GaussianInt, GaussianLaurent]:
    """Split off the canonical content: a == content * primitive."""
    if a.is_zero():
        return G_ZERO, a
    c = a.content()
    if c.is_one():
        return c, a
    return c, GaussianLaurent({e: gint_exact_div(x, c) for e, x in a.terms.items()})


def _pseudo_rem(a: GaussianLaurent, b: GaussianLaurent) -> GaussianLaurent:
    """Pseudo-remainder of v-polynomials: lc(b)^(da-db+1) * a mod b."""
    da, db = a.max_exp(), b.max_exp()
    lc_b = GaussianLaurent.monomial(0, b.leading_coeff())
    r = a
    steps = 0
    while not r.is_zero() and r.max_exp() >= db:
        dr = r.max_exp()
        lead = GaussianLaurent.monomial(dr - db, r.leading_coeff())
        r = r * lc_b - lead * b
        steps += 1
        if not r.is_zero() and r.max_exp() >= dr:
            raise AssertionError("pseudo-division failed to reduce degree")
    # pad so the total scaling is exactly lc(b)^(da-db+1), as the
    # subresultant divisions downstream assume
    for _ in range(da - db + 1 - steps):
        r = r * lc_b
    return r


def laurent_gcd(a: GaussianLaurent, b: GaussianLaurent) -> GaussianLaurent:
    """Canonical gcd in Z[i][v, v^-1].

    The result has lowest exponent 0, canonical content and a leading unit
    chosen by :func:`canonical_unit` (a gcd of Laurent polynomials is only
    defined up to units and powers of v).
    """
    if a.is_zero():
        return _canonical_poly(b)
    if b.is_zero():
        return _canonical_poly(a)
    a0 = a.shifted(-a.min_exp())
    b0 = b.shifted(-b.min_exp())
    ca, pa = _primitive(a0)
    cb, pb = _primitive(b0)
    cg = gint_gcd(ca, cb)
    if pa.max_exp() < pb.max_exp():
        pa, pb = pb, pa
    # subresultant polynomial remainder sequence on the primitive parts
    g = G_ONE
    h = G_ONE
    while True:
        delta = pa.max_exp() - pb.max_exp()
        rem = _pseudo_rem(pa, pb)
        if rem.is_zero():
            _, prim = _primitive(pb)
            break
        if rem.max_exp() == 0:
            # nonzero constant remainder: the primitive parts are coprime
            prim = _L_ONE
            break
        divisor = G_ONE
        for _ in range(delta):
            divisor = divisor * h
        divisor = divisor * g
        pa, pb = pb, GaussianLaurent(
            {e: gint_exact_div(c, divisor) for e, c in rem.terms.items()}
        )
        g = pa.leading_coeff()
        h = _pow_quot(g, h, delta)
    out = prim.scale(cg)
    return _canonical_poly(out)


def _pow_quot(g: GaussianInt, h: GaussianInt, delta: int) -> GaussianInt:
    """h <- g^delta / h^(delta-1), exactly (subresultant bookkeeping)."""
    if delta == 0:
        # h stays h^(1-0)=h ... textbook: h = h^(1-delta) g^delta = h
        return h
    num = G_ONE
    for _ in range(delta):
        num = num * g
    den = G_ONE
    for _ in range(delta - 1):
        den = den * h
    return gint_exact_div(num, den)


def _canonical_poly(a: GaussianLaurent) -> GaussianLaurent:
    """Shift to lowest exponent 0 and normalize the leading unit."""
    if a.is_zero():
        return a
    a = a.shifted(-a.min_exp())
    u = canonical_unit(a.leading_coeff())
    return a if u.is_one() else a.scale(u)


# ---------------------------------------------------------------------------
# fraction field
# ---------------------------------------------------------------------------


class RationalFunction:
    """An element of Q(i)(v), held as a reduced fraction of Laurent polynomials.

    Canonical form: the fraction is in lowest terms, the denominator is a
    polynomial in v with a nonzero constant term (all v-shifts live in the
    numerator) and its leading coefficient is unit-normalized, so equality is
    structural comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: GaussianLaurent, den: GaussianLaurent | None = None):
        if den is None:
            den = _L_ONE
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = _L_ZERO
            self.den = _L_ONE
            return
        if den.is_one():
            self.num = num
            self.den = den
            return
        shift = num.min_exp() - den.min_exp()
        n0 = num.shifted(-num.min_exp())
        d0 = den.shifted(-den.min_exp())
        g = laurent_gcd(n0, d0)
        if not g.is_one():
            n0 = n0.exact_div(g)
            d0 = d0.exact_div(g)
        u = canonical_unit(d0.leading_coeff())
        if not u.is_one():
            n0 = n0.scale(u)
            d0 = d0.scale(u)
        self.num = n0.shifted(shift)
        self.den = d0

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_laurent(a: GaussianLaurent) -> "RationalFunction":
        return RationalFunction(a)

    @staticmethod
    def from_int(n: int) -> "RationalFunction":
        return RationalFunction(GaussianLaurent.from_int(n))

    @staticmethod
    def zero() -> "RationalFunction":
        return RF_ZERO

    @staticmethod
    def one() -> "RationalFunction":
        return RF_ONE

    @staticmethod
    def unit(k: int = 0) -> "RationalFunction":
        return RationalFunction(GaussianLaurent.unit(k))

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_laurent(self) -> bool:
        """True iff the value lies in Z[i][v, v^-1] (trivial denominator)."""
        return self.den.is_one()

    def to_laurent(self) -> GaussianLaurent:
        if not self.den.is_one():
            raise NotDivisible(f"{self} has a nontrivial denominator")
        return self.num

    def complexity(self) -> tuple[int, int]:
        """A crude size measure used for pivot selection in exact solvers."""
        n = self.num.n_terms() + self.den.n_terms()
        span = 0
        if not self.num.is_zero():
            span = self.num.max_exp() - self.num.min_exp()
        return (n, span)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num + other.num)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        if other.num.is_zero():
            return self
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num - other.num)
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.__new__(RationalFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        if self.den.is_one() and other.den.is_one():
            out = RationalFunction.__new__(RationalFunction)
            out.num = self.num * other.num
            out.den = _L_ONE
            return out
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RationalFunction":
        return RF_ONE / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        out = RF_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale_laurent(self, a: GaussianLaurent) -> "RationalFunction":
        return RationalFunction(self.num * a, self.den)

    def bar(self) -> "RationalFunction":
        return RationalFunction(self.num.bar(), self.den.bar())

    # -- comparisons / rendering ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.is_one():
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def to_json_obj(self):
        if self.den.is_one():
            return self.num.to_json_obj()
        return {"num": self.num.to_json_obj(), "den": self.den.to_json_obj()}

    @staticmethod
    def from_json_obj(obj) -> "RationalFunction":
        if isinstance(obj, dict):
            return RationalFunction(
                GaussianLaurent.from_json_obj(obj["num"]),
                GaussianLaurent.from_json_obj(obj["den"]),
            )
        return RationalFunction(GaussianLaurent.from_json_obj(obj))


RF_ZERO = RationalFunction(_L_ZERO)
RF_ONE = RationalFunction(_L_ONE)


# ---------------------------------------------------------------------------
# quantum integers, factorials, binomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def qint_v(n: int) -> GaussianLaurent:
    """[n]_v = (v^n - v^-n)/(v - v^-1) = v^(n-1) + v^(n-3) + ... + v^(1-n).

    >>> print(qint_v(3))
    v^2 + 1 + v^-2
    """
    if n < 0:
        raise ValueError("qint_v requires n >= 0")
    return GaussianLaurent({n - 1 - 2 * k: G_ONE for k in range(n)})


def qint_v_signed(n: int) -> GaussianLaurent:
    """[n]_v for any integer n (odd in n: [-n]_v = -[n]_v)."""
    if n >= 0:
        return qint_v(n)
    return -qint_v(-n)


@lru_cache(maxsize=None)
def qfact_v(n: int) -> GaussianLaurent:
    if n < 0:
        raise ValueError("qfact_v requires n >= 0")
    out = _L_ONE
    for k in range(1, n + 1):
        out = out * qint_v(k)
    return out


@lru_cache(maxsize=None)
def qbinom_v(n: int, k: int) -> GaussianLaurent:
    if not 0 <= k <= n:
        raise ValueError("qbinom_v requires 0 <= k <= n")
    return qfact_v(n).exact_div(qfact_v(k) * qfact_v(n - k))


def qint_vt(n: int) -> GaussianLaurent:
    """[n]_{v,t} = t^(n-1) [n]_v with t = i.

    >>> print(qint_vt(3))
    -v^2 - 1 - v^-2
    """
    if n < 0:
        raise ValueError("qint_vt requires n >= 0")
    if n == 0:
        return _L_ZERO
    return qint_v(n).scale(unit_pow(n - 1))


def qint_vt_defining(n: int) -> GaussianLaurent:
    """[n]_{v,t} straight from the defining fraction
    ((vt)^n - (vt^-1)^-n) / (vt - (vt^-1)^-1); must agree with qint_vt."""
    if n < 0:
        raise ValueError("qint_vt_defining requires n >= 0")
    vt = GaussianLaurent.monomial(1, G_I)
    # (v * t^-1)^-1 = v^-1 * t
    vti_inv = GaussianLaurent.monomial(-1, G_I)
    num = vt**n - vti_inv**n
    den = vt - vti_inv
    if num.is_zero():
        return _L_ZERO
    return num.exact_div(den)


@lru_cache(maxsize=None)
def qfact_vt(n: int) -> GaussianLaurent:
    """[n]!_{v,t} = t^(n(n-1)/2) [n]!_v."""
    if n < 0:
        raise ValueError("qfact_vt requires n >= 0")
    return qfact_v(n).scale(unit_pow(n * (n - 1) // 2))


@lru_cache(maxsize=None)
def qbinom_vt(n: int, k: int) -> GaussianLaurent:
    """[n choose k]_{v,t} = t^(k(n-k)) [n choose k]_v."""
    if not 0 <= k <= n:
        raise ValueError("qbinom_vt requires 0 <= k <= n")
    return qbinom_v(n, k).scale(unit_pow(k * (n - k)))


@lru_cache(maxsize=None)
def qbinom_v_gen(m: int, k: int) -> GaussianLaurent:
    """Generalized Gaussian binomial [m choose k]_v for any integer m, k >= 0:
    prod_{s=1..k} [m - s + 1]_v / [s]_v.  Needed for weight-dependent
    commutation formulas, where m can be negative."""
    if k < 0:
        raise ValueError("qbinom_v_gen requires k >= 0")
    num = _L_ONE
    for s in range(1, k + 1):
        f = qint_v_signed(m - s + 1)
        if f.is_zero():
            return _L_ZERO
        num = num * f
    return num.exact_div(qfact_v(k))
