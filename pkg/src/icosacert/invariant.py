"""The invariant ring of the binary icosahedral group on binary forms.

Graded dimensions come from two independent routes that must agree: the
exact Molien series, and the rank of the Reynolds-averaged monomial basis.
Large degrees are served by products of the three fundamental forms
reduced by the single degree-60 relation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .binform import BinForm, act, grundform
from .cyclo import CycNum, ONE, ZERO
from .matgrp import FinGroup, IntegrityError, binary_icosahedral

#: Largest degree served by honest Reynolds averaging before the
#: fundamental-form monomial basis takes over.
REYNOLDS_LIMIT = 64


@dataclass(frozen=True)
class InvariantBasis:
    degree: int
    forms: tuple


@dataclass(frozen=True)
class MolienTable:
    bound: int
    dims: tuple  # dims[n] = dimension in degree n


def reynolds(f: BinForm, group: FinGroup) -> BinForm:
    """Group average (1/|G|) sum_g of the substitution action on f."""
    total = BinForm.zero(f.degree)
    for g in group.elements:
        total = total + act(g, f)
    scale = CycNum.from_rational(Fraction(1, group.order))
    return total.scale(scale)


# --- Molien series ----------------------------------------------------------


def _trace_det_classes(group: FinGroup) -> list[tuple[CycNum, CycNum, int]]:
    counter = Counter()
    for g in group.elements:
        counter[(g.a + g.d, g.det())] += 1
    return [(tr, det, count) for (tr, det), count in counter.items()]


@lru_cache(maxsize=None)
def _molien_dims(bound: int) -> tuple:
    """Coefficients 0..bound of (1/|G|) sum_g 1/det(I - q g), exactly."""
    group = binary_icosahedral().group
    total = [ZERO] * (bound + 1)
    for tr, det, count in _trace_det_classes(group):
        # 1/(1 - tr q + det q^2): c_0 = 1, c_k = tr c_{k-1} - det c_{k-2}
        c_prev2, c_prev1 = ZERO, ONE
        weight = CycNum.from_rational(count)
        total[0] = total[0] + weight
        for k in range(1, bound + 1):
            c_k = tr * c_prev1 - det * c_prev2
            total[k] = total[k] + weight * c_k
            c_prev2, c_prev1 = c_prev1, c_k
    dims = []
    order = CycNum.from_rational(group.order)
    for k, c in enumerate(total):
        value = c / order
        if not value.is_rational() or value.as_rational().denominator != 1:
            raise IntegrityError(f"Molien coefficient at degree {k} is not an integer")
        dims.append(int(value.as_rational()))
    return tuple(dims)


def molien_dim(n: int) -> int:
    """Dimension of the degree-n invariants, by exact series expansion."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    bound = max(n, REYNOLDS_LIMIT)
    return _molien_dims(bound)[n]


def molien_table(bound: int = REYNOLDS_LIMIT) -> MolienTable:
    return MolienTable(bound, _molien_dims(bound))


# --- graded dimension via the fundamental forms ------------------------------


def phi_exponents(n: int) -> list[tuple[int, int, int]]:
    """All (a, b, c) with 30a + 20b + 12c = n."""
    out = []
    for a in range(n // 30 + 1):
        rest_a = n - 30 * a
        for b in range(rest_a // 20 + 1):
            rest = rest_a - 20 * b
            if rest % 12 == 0:
                out.append((a, b, c := rest // 12))
    return out


def invariant_dim(n: int) -> int:
    """Dimension from the hypersurface Hilbert series.

    Counts fundamental-form monomials of degree n minus multiples of the
    one degree-60 relation; equals the Molien dimension (cross-checked for
    every degree up to REYNOLDS_LIMIT by the acceptance suite).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    low = len(phi_exponents(n - 60)) if n >= 60 else 0
    return len(phi_exponents(n)) - low


@lru_cache(maxsize=None)
def _phi_power(i: int, e: int) -> BinForm:
    if e == 0:
        return BinForm(0, [ONE])
    if e == 1:
        return grundform(i)
    return _phi_power(i, e - 1) * grundform(i)


def phi_monomial(a: int, b: int, c: int) -> BinForm:
    """The product of fundamental forms with the given exponents."""
    form = _phi_power(1, a)
    if b:
        form = form * _phi_power(2, b)
    if c:
        form = form * _phi_power(3, c)
    if (a, b, c) == (0, 0, 0):
        return BinForm(0, [ONE])
    return form


def monomial_basis(n: int) -> list[BinForm]:
    """Fundamental-form monomials spanning degree n, syzygy-reduced (a <= 1)."""
    return [
        phi_monomial(a, b, c).shift(0, 0)
        for (a, b, c) in phi_exponents(n)
        if a <= 1
    ]


# --- Reynolds route ----------------------------------------------------------


@lru_cache(maxsize=1)
def _coset_data():
    """Right-coset representatives of the diagonal rotation subgroup.

    The full average equals (1/12) sum over representatives of the action
    on the subgroup average, and the subgroup average of a monomial is a
    congruence filter, so each degree costs 12 substitutions.
    """
    model = binary_icosahedral()
    group = model.group
    g1 = model.generators[0]
    subgroup = [g1]
    while True:
        nxt = subgroup[-1] * g1
        if nxt == subgroup[0]:
            break
        subgroup.append(nxt)
    used = set()
    reps = []
    for x in group.elements:
        if x not in used:
            reps.append(x)
            for h in subgroup:
                used.add(h * x)
    if len(reps) * len(subgroup) != group.order:
        raise IntegrityError("coset decomposition failed")
    return tuple(subgroup), tuple(reps)


def _surviving_monomials(n: int) -> list[int]:
    """Indices k with the diagonal subgroup average of t0^k t1^(n-k) nonzero."""
    return [k for k in range(n + 1) if (2 * k - n) % 10 == 0]


def reynolds_monomial(n: int, k: int) -> BinForm:
    """Full-group average of t0^k t1^(n-k), coset-accelerated."""
    subgroup, reps = _coset_data()
    if (2 * k - n) % 10 != 0:
        return BinForm.zero(n)
    mono = BinForm.monomial(n, k)
    total = BinForm.zero(n)
    for r in reps:
        total = total + act(r, mono)
    return total.scale(CycNum.from_rational(Fraction(1, len(reps))))


def _mul_lists(u: list, v: list) -> list:
    out = [ZERO] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if not a.is_zero():
            for j, b in enumerate(v):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
    return out


def _reynolds_rows(n: int) -> list[list[CycNum]]:
    """Averages of all surviving monomials, sharing power tables per coset."""
    subgroup, reps = _coset_data()
    ks = _surviving_monomials(n)
    if not ks:
        return []
    totals = {k: [ZERO] * (n + 1) for k in ks}
    for r in reps:
        a, b, c, d = r.entries()
        apow = [[ONE]]
        bpow = [[ONE]]
        for _ in range(n):
            prev = apow[-1]
            nxt = [ZERO] * (len(prev) + 1)
            for i, x in enumerate(prev):
                if not x.is_zero():
                    nxt[i + 1] = nxt[i + 1] + x * a
                    nxt[i] = nxt[i] + x * b
            apow.append(nxt)
            prev = bpow[-1]
            nxt = [ZERO] * (len(prev) + 1)
            for i, x in enumerate(prev):
                if not x.is_zero():
                    nxt[i + 1] = nxt[i + 1] + x * c
                    nxt[i] = nxt[i] + x * d
            bpow.append(nxt)
        for k in ks:
            image = _mul_lists(apow[k], bpow[n - k]) if 0 < k < n else (
                apow[n] if k == n else bpow[n]
            )
            acc = totals[k]
            for i, x in enumerate(image):
                if not x.is_zero():
                    acc[i] = acc[i] + x
    scale = CycNum.from_rational(Fraction(1, len(reps)))
    return [[scale * x for x in totals[k]] for k in ks]


def _row_reduce(rows: list[list[CycNum]]) -> list[list[CycNum]]:
    """Reduced row-echelon form over the field; exact, deterministic."""
    rows = [list(r) for r in rows if any(not c.is_zero() for c in r)]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if not rows[i][col].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [c * inv for c in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return [row for row in rows[:r]]


def invariant_basis(n: int, method: str = "auto") -> InvariantBasis:
    """Linearly independent invariant forms spanning degree n.

    method "reynolds": average the monomial basis and row-reduce; the
    dimension must match the Molien series. method "monomial": products of
    the fundamental forms with the degree-60 relation removed. "auto"
    switches at REYNOLDS_LIMIT.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if method == "auto":
        method = "reynolds" if n <= REYNOLDS_LIMIT else "monomial"
    if method == "monomial":
        forms = monomial_basis(n)
        if len(forms) != invariant_dim(n):
            raise IntegrityError("syzygy-reduced monomial count is off")
        return InvariantBasis(n, tuple(forms))
    if method != "reynolds":
        raise ValueError(f"unknown method {method!r}")
    rows = [row for row in _reynolds_rows(n) if any(not c.is_zero() for c in row)]
    reduced = _row_reduce(rows)
    expected = molien_dim(n) if n <= REYNOLDS_LIMIT else invariant_dim(n)
    if len(reduced) != expected:
        raise IntegrityError(
            f"Reynolds rank {len(reduced)} at degree {n} disagrees with the "
            f"series dimension {expected}"
        )
    return InvariantBasis(n, tuple(BinForm(n, row) for row in reduced))


def membership(f: BinForm) -> bool:
    """True iff f is fixed by every generator of the validated group."""
    if f.is_zero():
        return True
    for g in binary_icosahedral().generators:
        if act(g, f) != f:
            return False
    return True


def _rational_kernel(rows: list[list[Fraction]], ncols: int) -> list[tuple]:
    """Basis of the null space of the given rational matrix, exact RREF."""
    rows = [list(r) for r in rows]
    pivots = []  # column of each pivot row, in order
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row_i, col in enumerate(pivots):
            v[col] = -rows[row_i][fc]
        basis.append(tuple(v))
    return basis


# --- the degree-60 relation ---------------------------------------------------


@lru_cache(maxsize=1)
def syzygy_60() -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (l1, l2, l3), l1 = 1, with
    l1*Phi1^2 + l2*Phi2^3 + l3*Phi3^5 = 0, discovered by exact elimination.
    """
    f1 = phi_monomial(2, 0, 0)
    f2 = phi_monomial(0, 3, 0)
    f3 = phi_monomial(0, 0, 5)
    columns = []
    for form in (f1, f2, f3):
        columns.append([c.as_rational() for c in form.coeffs])
    n_rows = len(columns[0])
    matrix = [
        [columns[j][i] for j in range(3)]
        for i in range(n_rows)
        if any(columns[j][i] for j in range(3))
    ]
    kernel = _rational_kernel(matrix, 3)
    if len(kernel) != 1:
        raise IntegrityError(
            f"relation space among the squared/cubed/fifth powers has "
            f"dimension {len(kernel)}, expected 1"
        )
    solution = list(kernel[0])
    if solution[0] == 0:
        raise IntegrityError("relation does not involve the degree-30 form squared")
    scale = Fraction(1) / solution[0]
    solution = tuple(s * scale for s in solution)
    # verify exactly
    combo = (
        f1.scale(CycNum.from_rational(solution[0]))
        + f2.scale(CycNum.from_rational(solution[1]))
        + f3.scale(CycNum.from_rational(solution[2]))
    )
    if not combo.is_zero():
        raise IntegrityError("claimed relation does not vanish")
    return solution
