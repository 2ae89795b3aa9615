"""Homogeneous binary forms in t0, t1 over Q(zeta_20).

Carries the three fundamental degree-30/20/12 forms of the icosahedral
group, the substitution action of 2x2 matrices, exact gcd / squarefree /
divisibility machinery, conic discriminants, and the balanced-bidegree
lift onto the quadric xw = yz.
"""

from __future__ import annotations

from math import gcd as _int_gcd

from . import modp
from .cyclo import (
    CycNum,
    FALLBACK_PRIMES,
    MINUS_ONE,
    ONE,
    ZERO,
    as_cyc,
    reduce_mod_p,
    BadPrimeError,
)


class DegreeMismatchError(ValueError):
    """Operands have incompatible degrees."""


class NotLiftableError(ValueError):
    """Bidegree is not balanced, so no lift through the Segre quadric exists."""


def _cyc(value) -> CycNum:
    c = as_cyc(value)
    if c is NotImplemented:
        raise TypeError(f"cannot coerce {value!r} to CycNum")
    return c


class BinForm:
    """Homogeneous form of declared degree n; coeffs[k] multiplies t0^k t1^(n-k)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = tuple(_cyc(c) for c in coeffs)
        if len(coeffs) != degree + 1:
            raise DegreeMismatchError(
                f"degree {degree} needs {degree + 1} coefficients, got {len(coeffs)}"
            )
        self.degree = degree
        self.coeffs = coeffs

    @staticmethod
    def zero(degree: int) -> "BinForm":
        return BinForm(degree, (ZERO,) * (degree + 1))

    @staticmethod
    def monomial(degree: int, k: int, coeff=1) -> "BinForm":
        coeffs = [ZERO] * (degree + 1)
        coeffs[k] = _cyc(coeff)
        return BinForm(degree, coeffs)

    @staticmethod
    def from_terms(degree: int, terms: dict[int, object]) -> "BinForm":
        coeffs = [ZERO] * (degree + 1)
        for k, c in terms.items():
            coeffs[k] = _cyc(c)
        return BinForm(degree, coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def top_index(self) -> int:
        """Largest k with a nonzero coefficient; -1 for the zero form."""
        for k in range(self.degree, -1, -1):
            if not self.coeffs[k].is_zero():
                return k
        return -1

    def low_index(self) -> int:
        for k in range(self.degree + 1):
            if not self.coeffs[k].is_zero():
                return k
        return -1

    def __eq__(self, other):
        return (
            isinstance(other, BinForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other):
        if self.degree != other.degree:
            raise DegreeMismatchError("cannot add forms of different degrees")
        return BinForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if self.degree != other.degree:
            raise DegreeMismatchError("cannot subtract forms of different degrees")
        return BinForm(self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinForm(self.degree, [-c for c in self.coeffs])

    def scale(self, scalar) -> "BinForm":
        s = _cyc(scalar)
        return BinForm(self.degree, [s * c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinForm):
            out = [ZERO] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if not a.is_zero():
                    for j, b in enumerate(other.coeffs):
                        if not b.is_zero():
                            out[i + j] = out[i + j] + a * b
            return BinForm(self.degree + other.degree, out)
        return self.scale(other)

    __rmul__ = __mul__

    def shift(self, dt0: int, dt1: int) -> "BinForm":
        """Multiply by the monomial t0^dt0 t1^dt1."""
        out = [ZERO] * (self.degree + dt0 + dt1 + 1)
        for k, c in enumerate(self.coeffs):
            out[k + dt0] = c
        return BinForm(self.degree + dt0 + dt1, out)

    def deriv_t0(self) -> "BinForm":
        if self.degree == 0:
            raise DegreeMismatchError("derivative of a constant form")
        return BinForm(
            self.degree - 1, [(k + 1) * self.coeffs[k + 1] for k in range(self.degree)]
        )

    def deriv_t1(self) -> "BinForm":
        if self.degree == 0:
            raise DegreeMismatchError("derivative of a constant form")
        n = self.degree
        return BinForm(n - 1, [(n - k) * self.coeffs[k] for k in range(n)])

    def evaluate(self, t0, t1) -> CycNum:
        t0, t1 = _cyc(t0), _cyc(t1)
        total = ZERO
        p0 = ONE
        pows0 = []
        for _ in range(self.degree + 1):
            pows0.append(p0)
            p0 = p0 * t0
        p1 = ONE
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c.is_zero():
                total = total + c * pows0[k] * p1
            p1 = p1 * t1
        return total

    def to_text(self) -> str:
        return f"deg={self.degree}; " + "; ".join(c.to_text() for c in self.coeffs)

    @staticmethod
    def from_text(text: str) -> "BinForm":
        head, *rest = [part.strip() for part in text.split(";")]
        if not head.startswith("deg="):
            raise ValueError("binary form text must start with 'deg=<n>'")
        degree = int(head[4:])
        return BinForm(degree, [CycNum.from_text(part) for part in rest])

    def __repr__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c.is_zero():
                terms.append(f"({c})*t0^{k}*t1^{self.degree - k}")
        return " + ".join(terms) if terms else f"0[deg {self.degree}]"


def act(g, f: BinForm) -> BinForm:
    """Substitution action: f(a t0 + b t1, c t0 + d t1) for g = [[a, b], [c, d]].

    Satisfies act(h, act(g, f)) = act(g*h, f). Horner evaluation in the
    first variable keeps the cost quadratic in the degree.
    """
    a, b, c, d = g.entries()
    n = f.degree
    if n == 0:
        return f
    # f = sum_k c_k A^k B^(n-k), A = a t0 + b t1, B = c t0 + d t1.
    # Horner: H_n = c_n; H_j = H_{j+1} * A + c_j * B^(n-j).
    h = [f.coeffs[n]]
    bpow = [ONE]  # B^0
    for j in range(n - 1, -1, -1):
        new = [ZERO] * (len(h) + 1)
        for k, hk in enumerate(h):
            if not hk.is_zero():
                new[k + 1] = new[k + 1] + hk * a
                new[k] = new[k] + hk * b
        # bpow grows to B^(n-j)
        up = [ZERO] * (len(bpow) + 1)
        for k, pk in enumerate(bpow):
            if not pk.is_zero():
                up[k + 1] = up[k + 1] + pk * c
                up[k] = up[k] + pk * d
        bpow = up
        cj = f.coeffs[j]
        if not cj.is_zero():
            for k, pk in enumerate(bpow):
                if not pk.is_zero():
                    new[k] = new[k] + cj * pk
        h = new
    return BinForm(n, h)


# The fundamental forms of the binary icosahedral group: degrees 30, 20, 12.
_GRUNDFORM_TERMS = {
    1: (30, {30: 1, 0: 1, 25: 522, 5: -522, 20: -10005, 10: -10005}),
    2: (20, {20: -1, 0: -1, 15: 228, 5: -228, 10: -494}),
    3: (12, {11: 1, 6: 11, 1: -1}),
}


def grundform(i: int) -> BinForm:
    """The degree-30 / 20 / 12 fundamental invariant forms, for i = 1, 2, 3."""
    if i not in _GRUNDFORM_TERMS:
        raise ValueError("index must be 1, 2 or 3")
    degree, terms = _GRUNDFORM_TERMS[i]
    return BinForm.from_terms(degree, terms)


# --- exact gcd via the univariate picture ---------------------------------
#
# f = t1^(n-D) * homog(u) with u(z) = sum c_k z^k, D the top nonzero index.
# Univariate gcds are run fraction-free (subresultant PRS) after clearing
# denominators, which keeps intermediate coefficients determinant-bounded.


def _univ(f: BinForm) -> list[CycNum]:
    top = f.top_index()
    return [f.coeffs[k] for k in range(top + 1)]


def _clear_denominators(u: list[CycNum]) -> list[CycNum]:
    den = 1
    for c in u:
        den = den * c.den // _int_gcd(den, c.den)
    scale = CycNum.from_rational(den)
    return [c * scale for c in u]


def _prem(a: list[CycNum], b: list[CycNum]) -> list[CycNum]:
    """Pseudo-remainder lc(b)^(da-db+1) * a mod b."""
    da, db = len(a) - 1, len(b) - 1
    lcb = b[-1]
    r = list(a)
    for i in range(da - db + 1):
        dr = da - i
        coef = r[dr]
        r = [lcb * c for c in r]
        if not coef.is_zero():
            for j in range(db + 1):
                r[dr - db + j] = r[dr - db + j] - coef * b[j]
    out = r[:db]
    while out and out[-1].is_zero():
        out.pop()
    return out


def _gcd_univ(a: list[CycNum], b: list[CycNum]) -> list[CycNum]:
    a = _clear_denominators([c for c in a])
    b = _clear_denominators([c for c in b])
    while a and a[-1].is_zero():
        a.pop()
    while b and b[-1].is_zero():
        b.pop()
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    g = ONE
    h = ONE
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            return b
        if len(r) == 1:
            return [ONE]
        divisor = g * h ** delta
        inv = divisor.inverse()
        a = b
        b = [c * inv for c in r]
        g = a[-1]
        h = h * (g * h.inverse()) ** delta if delta else h
        # equivalent to h = g^delta * h^(1-delta), kept division-light


def gcd(f: BinForm, g: BinForm) -> BinForm:
    """Monic greatest common divisor of two binary forms."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) undefined")
    if f.is_zero():
        return monic(g)
    if g.is_zero():
        return monic(f)
    t1_val = min(f.degree - f.top_index(), g.degree - g.top_index())
    u = _gcd_univ(_univ(f), _univ(g))
    d = len(u) - 1
    # homogenize to degree d, then append the shared t1 valuation
    form = BinForm(d + t1_val, [u[k] if k <= d else ZERO for k in range(d + t1_val + 1)])
    return monic(form)


def monic(f: BinForm) -> BinForm:
    if f.is_zero():
        return f
    lead = f.coeffs[f.top_index()]
    return f.scale(lead.inverse())


def divides(f: BinForm, g: BinForm) -> bool:
    """Exact divisibility f | g via division with remainder."""
    if f.is_zero():
        raise ValueError("divisibility by the zero form")
    if g.is_zero():
        return True
    vf = f.degree - f.top_index()
    vg = g.degree - g.top_index()
    if vf > vg:
        return False
    a = _univ(g)
    b = _univ(f)
    if len(b) > len(a):
        return False
    # plain field division; remainder must vanish
    r = list(a)
    db = len(b) - 1
    inv_lead = b[-1].inverse()
    while len(r) - 1 >= db and r:
        factor = r[-1] * inv_lead
        shift = len(r) - 1 - db
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - factor * b[j]
        while r and r[-1].is_zero():
            r.pop()
    return not r


def _mod_p_image(f: BinForm, p: int):
    """Univariate image mod p, or None if the prime is inadmissible."""
    try:
        coeffs = [reduce_mod_p(c, p).value for c in f.coeffs]
    except BadPrimeError:
        return None
    top = f.top_index()
    low = f.low_index()
    if coeffs[top] == 0 or coeffs[low] == 0:
        return None  # degree or valuation not preserved
    return coeffs[: top + 1]


def is_squarefree(f: BinForm, primes=FALLBACK_PRIMES) -> tuple[bool, dict]:
    """Squarefreeness with a certificate.

    Fast path: a squarefree image modulo an admissible prime proves
    squarefreeness (one-sided). A negative verdict is only ever reported
    after the exact gcd confirms it.
    """
    if f.is_zero():
        raise ValueError("squarefreeness of the zero form")
    t1_val = f.degree - f.top_index()
    t0_val = f.low_index()
    if t1_val > 1 or t0_val > 1:
        return False, {"method": "valuation", "t0_val": t0_val, "t1_val": t1_val}
    for p in primes:
        image = _mod_p_image(f, p)
        if image is None:
            continue
        if modp.is_squarefree_fp(image, p):
            return True, {"method": "mod-p", "prime": p}
    # exact fallback; required for any negative verdict
    g1 = gcd(f, f.deriv_t0())
    g = gcd(g1, f.deriv_t1()) if not f.deriv_t1().is_zero() else g1
    ok = g.top_index() == 0 and g.degree - g.top_index() == 0
    return ok, {"method": "exact", "gcd_degree": g.degree if not ok else 0}


def disc_conic(p0: BinForm, p1: BinForm, p2: BinForm) -> BinForm:
    """p0*p2 - p1^2, the discriminant form of a conic over the t-line."""
    if p1.is_zero():
        return p0 * p2
    if p0.degree + p2.degree != 2 * p1.degree:
        raise DegreeMismatchError(
            f"degrees ({p0.degree}, {p1.degree}, {p2.degree}) are incompatible"
        )
    return p0 * p2 - p1 * p1


# --- bihomogeneous forms on P1 x P1 and the lift through xw = yz -----------


class BiForm:
    """Form of bidegree (a, b) in (x0, x1) and (t0, t1), sparse storage.

    Key (i, j) holds the coefficient of x0^i x1^(a-i) t0^j t1^(b-j).
    """

    __slots__ = ("bidegree", "coeffs")

    def __init__(self, bidegree: tuple[int, int], coeffs: dict):
        a, b = bidegree
        clean = {}
        for (i, j), c in coeffs.items():
            if not (0 <= i <= a and 0 <= j <= b):
                raise DegreeMismatchError(f"monomial ({i},{j}) outside grid {bidegree}")
            c = _cyc(c)
            if not c.is_zero():
                clean[(i, j)] = c
        self.bidegree = (a, b)
        self.coeffs = clean

    @staticmethod
    def from_rows(rows: list[BinForm]) -> "BiForm":
        """rows[i] is the coefficient form of x0^(a-i) x1^i, i = 0..a."""
        a = len(rows) - 1
        b = rows[0].degree
        coeffs = {}
        for i, row in enumerate(rows):
            if row.degree != b:
                raise DegreeMismatchError("rows must share one t-degree")
            for j, c in enumerate(row.coeffs):
                if not c.is_zero():
                    coeffs[(a - i, j)] = c
        return BiForm((a, b), coeffs)

    def row(self, i: int) -> BinForm:
        """Coefficient form of x0^i x1^(a-i)."""
        a, b = self.bidegree
        coeffs = [ZERO] * (b + 1)
        for (ii, j), c in self.coeffs.items():
            if ii == i:
                coeffs[j] = c
        return BinForm(b, coeffs)

    def conic_rows(self) -> tuple[BinForm, BinForm, BinForm]:
        """(p0, p1, p2) with the form equal to p0 x0^2 + 2 p1 x0 x1 + p2 x1^2."""
        if self.bidegree[0] != 2:
            raise DegreeMismatchError("x-degree must be 2")
        half = CycNum.from_rational(1) / CycNum.from_rational(2)
        return self.row(2), self.row(1).scale(half), self.row(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, BiForm)
            and self.bidegree == other.bidegree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.bidegree, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other):
        if self.bidegree != other.bidegree:
            raise DegreeMismatchError("bidegree mismatch")
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key, ZERO) + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return BiForm(self.bidegree, out)

    def scale(self, scalar) -> "BiForm":
        s = _cyc(scalar)
        if s.is_zero():
            return BiForm(self.bidegree, {})
        return BiForm(self.bidegree, {k: s * c for k, c in self.coeffs.items()})

    def mul_monomial(self, di: int, dj: int, extra_bidegree: tuple[int, int]) -> "BiForm":
        """Multiply by x0^di x1^(ea-di) t0^dj t1^(eb-dj) of bidegree extra_bidegree."""
        ea, eb = extra_bidegree
        a, b = self.bidegree
        return BiForm(
            (a + ea, b + eb),
            {(i + di, j + dj): c for (i, j), c in self.coeffs.items()},
        )


def act_biform(g, h, form: BiForm) -> BiForm:
    """Substitution action with g on (x0, x1) and h on (t0, t1)."""
    a_deg, b_deg = form.bidegree
    rows_out = None
    ax, bx, cx, dx = g.entries()
    # x0^i x1^(a-i) -> (ax x0 + bx x1)^i (cx x0 + dx x1)^(a-i), expanded once
    xmono = []
    for i in range(a_deg + 1):
        lin1 = BinForm(1, [bx, ax])  # index 1 = t0-coeff; reuse BinForm in x-vars
        lin2 = BinForm(1, [dx, cx])
        term = BinForm(0, [ONE])
        for _ in range(i):
            term = term * lin1
        for _ in range(a_deg - i):
            term = term * lin2
        xmono.append(term)  # degree a_deg form in (x0, x1)
    new_rows = [BinForm.zero(b_deg) for _ in range(a_deg + 1)]
    for i in range(a_deg + 1):
        row = form.row(i)
        if row.is_zero():
            continue
        acted = act(h, row)
        for k in range(a_deg + 1):
            c = xmono[i].coeffs[k]
            if not c.is_zero():
                new_rows[a_deg - k] = new_rows[a_deg - k] + acted.scale(c)
    return BiForm.from_rows(new_rows)


class QuadForm4:
    """Homogeneous polynomial in x, y, z, w; key (ex, ey, ez, ew)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict):
        clean = {}
        for key, c in coeffs.items():
            if sum(key) != degree:
                raise DegreeMismatchError(f"monomial {key} is not of degree {degree}")
            c = _cyc(c)
            if not c.is_zero():
                clean[key] = c
        self.degree = degree
        self.coeffs = clean

    def __eq__(self, other):
        return (
            isinstance(other, QuadForm4)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return not self.coeffs


def segre_lift(form: BiForm) -> QuadForm4:
    """A degree-N polynomial in x, y, z, w pulling back to the given (N, N) form.

    Pullback convention: x = x0 t0, y = x0 t1, z = x1 t0, w = x1 t1. When a
    monomial has several preimages the one with the largest x power (then y,
    then z) is taken, which makes the choice canonical.
    """
    a, b = form.bidegree
    if a != b:
        raise NotLiftableError(f"bidegree {form.bidegree} is not balanced")
    out: dict[tuple, CycNum] = {}
    for (alpha, gamma), c in form.coeffs.items():
        beta = a - alpha
        delta = b - gamma
        ex = min(alpha, gamma)
        ey = alpha - ex
        ez = gamma - ex
        ew = delta - ey
        key = (ex, ey, ez, ew)
        out[key] = out.get(key, ZERO) + c
    return QuadForm4(a, out)


def pullback(q: QuadForm4) -> BiForm:
    """Substitute x = x0 t0, y = x0 t1, z = x1 t0, w = x1 t1."""
    out: dict[tuple, CycNum] = {}
    for (ex, ey, ez, ew), c in q.coeffs.items():
        key = (ex + ey, ex + ez)
        out[key] = out.get(key, ZERO) + c
    return BiForm((q.degree, q.degree), {k: v for k, v in out.items() if not v.is_zero()})


# --- equivariant embeddings into bidegree (2, 2d) ---------------------------
#
# Under the diagonal action on P1 x P1, invariant (2, 2d)-forms decompose by
# degree-(2d+2), degree-2d and degree-(2d-2) invariant binary forms. The
# three maps below realize the summands: double polarization, polarization
# times the pairing form x0 t1 - x1 t0, and its square.


def embed_top(u: BinForm) -> BiForm:
    """u of degree 2d+2 -> (x . grad)^2 u, bidegree (2, 2d)."""
    u00 = u.deriv_t0().deriv_t0()
    u01 = u.deriv_t0().deriv_t1()
    u11 = u.deriv_t1().deriv_t1()
    return BiForm.from_rows([u11, u01.scale(2), u00])


def embed_mid(v: BinForm) -> BiForm:
    """v of degree 2d -> (x0 t1 - x1 t0) * (x . grad) v, bidegree (2, 2d)."""
    v0 = v.deriv_t0()
    v1 = v.deriv_t1()
    p0 = v0.shift(0, 1)
    mid = v1.shift(0, 1) - v0.shift(1, 0)
    p2 = -v1.shift(1, 0)
    return BiForm.from_rows([p2, mid, p0])


def embed_bottom(w: BinForm) -> BiForm:
    """w of degree 2d-2 -> (x0 t1 - x1 t0)^2 * w, bidegree (2, 2d)."""
    p0 = w.shift(0, 2)
    mid = w.shift(1, 1).scale(-2)
    p2 = w.shift(2, 0)
    return BiForm.from_rows([p2, mid, p0])
