"""Orbits and stabilizers of finite Moebius groups on the projective line.

Rational points (over Q(zeta_20)) are enumerated directly. The two special
orbits whose points live in an extension field are handled through their
vanishing forms: a squarefree invariant form is a union of orbits, and the
exact gcd of the form against every element's fixed-point quadric counts
stabilizer incidences without ever leaving the base field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .binform import BinForm, gcd, grundform, is_squarefree, monic
from .cyclo import CycNum, ONE, ZERO, as_cyc
from .matgrp import FinGroup, IntegrityError, ProjMat2, binary_icosahedral


class NotAPointError(ValueError):
    """Both homogeneous coordinates vanish."""


@dataclass(frozen=True)
class P1Point:
    """Point of the projective line, scaled so its first nonzero coordinate is 1."""

    a: CycNum
    b: CycNum

    def __post_init__(self):
        a, b = as_cyc(self.a), as_cyc(self.b)
        if not a.is_zero():
            scale = a.inverse()
            a, b = ONE, b * scale
        elif not b.is_zero():
            b = ONE
        else:
            raise NotAPointError("0:0 is not a projective point")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __str__(self):
        return f"({self.a}:{self.b})"

    @staticmethod
    def parse(text: str) -> "P1Point":
        parts = text.split(":")
        if len(parts) != 2:
            raise NotAPointError(f"cannot parse point {text!r}")
        return P1Point(
            CycNum.from_rational(Fraction(parts[0].strip())),
            CycNum.from_rational(Fraction(parts[1].strip())),
        )


def apply_point(g: ProjMat2, x: P1Point) -> P1Point:
    a, b, c, d = g.entries()
    return P1Point(a * x.a + b * x.b, c * x.a + d * x.b)


def fix_form(g: ProjMat2) -> BinForm:
    """Quadric whose roots are the fixed points of g: -c t0^2 + (a-d) t0 t1 + b t1^2."""
    a, b, c, d = g.entries()
    return BinForm(2, [b, a - d, -c])


@dataclass(frozen=True)
class OrbitCert:
    """Certificate for one orbit.

    Point data is present for orbits rational over the base field; orbits
    known only through their vanishing form carry the form instead.
    """

    base_point: P1Point | None
    points: tuple
    size: int
    stabilizer_gens: tuple
    stabilizer_order: int
    group_order: int
    vanishing_form: BinForm | None = None

    def __post_init__(self):
        if self.size * self.stabilizer_order != self.group_order:
            raise IntegrityError(
                f"orbit {self.size} x stabilizer {self.stabilizer_order} != "
                f"group order {self.group_order}"
            )


def orbit_of(x: P1Point, group: FinGroup) -> OrbitCert:
    """Full orbit and stabilizer of a rational point by direct enumeration."""
    seen = set()
    points = []
    stab = []
    for g in group.elements:
        y = apply_point(g, x)
        if y == x:
            stab.append(g)
        if y not in seen:
            seen.add(y)
            points.append(y)
    return OrbitCert(
        base_point=x,
        points=tuple(points),
        size=len(points),
        stabilizer_gens=tuple(stab),
        stabilizer_order=len(stab),
        group_order=group.order,
    )


def vanishing_form(points) -> BinForm:
    """Monic product of the linear forms b_i t0 - a_i t1 over the points."""
    form = BinForm(0, [ONE])
    for pt in points:
        form = form * BinForm(1, [-pt.a, pt.b])  # b*t0 - a*t1 vanishes at (a:b)
    return monic(form)


def form_orbit_stabilizer(form: BinForm, group: FinGroup) -> int:
    """Common stabilizer order of the roots of a single-orbit invariant form.

    Sums deg gcd(fixed-point quadric of g, form) over nontrivial g; each
    root contributes its stabilizer order minus one, so for a single orbit
    the total is deg(form) * (s - 1).
    """
    total = 0
    for g in group.elements[1:]:
        q = fix_form(g)
        if q.is_zero():
            raise IntegrityError("nontrivial element with identity fixed-point form")
        # the gcd comes back with degree equal to its exact root count
        total += gcd(q, form).degree
    deg = form.degree
    if total % deg != 0:
        raise IntegrityError(
            f"fixed-point incidences {total} do not divide evenly into degree {deg}"
        )
    s = total // deg + 1
    if group.order % s != 0:
        raise IntegrityError(f"stabilizer order {s} does not divide the group order")
    return s


def _single_orbit_sizes(group: FinGroup) -> set[int]:
    """Orbit sizes the group can realize: order / (element order)."""
    return {group.order // o for o in group.order_histogram()}


def _is_single_orbit_degree(deg: int, sizes: set[int]) -> bool:
    """True if deg equals one allowed size but no sum of two or more."""
    if deg not in sizes:
        return False
    reachable = {0}
    for _ in range(deg // min(sizes) + 1):
        reachable |= {r + s for r in reachable for s in sizes if r + s <= deg}
    multi = any(
        r in sizes and (deg - r) in reachable and deg - r > 0 for r in sizes if r < deg
    )
    return not multi


def special_orbits(group: FinGroup | None = None) -> tuple[OrbitCert, OrbitCert, OrbitCert]:
    """The orbits of sizes 12, 20 and 30, tied to the three fundamental forms.

    The size-12 orbit is rational and enumerated pointwise; its vanishing
    form must equal the degree-12 fundamental form up to scalar. The other
    two are certified through their forms: squarefree, invariant, degree
    equal to a realizable orbit size that admits no decomposition, and the
    stabilizer order read off the fixed-point incidence count.
    """
    if group is None:
        group = binary_icosahedral().projective
    certs = []
    sizes = _single_orbit_sizes(group)
    for size, index in ((12, 3), (20, 2), (30, 1)):
        phi = grundform(index)
        if phi.degree != size:
            raise IntegrityError("fundamental form degree drifted")
        ok, _cert = is_squarefree(phi)
        if not ok:
            raise IntegrityError(f"degree-{size} fundamental form is not squarefree")
        if not _is_single_orbit_degree(size, sizes):
            raise IntegrityError(f"degree {size} does not force a single orbit")
        s = form_orbit_stabilizer(phi, group)
        if size * s != group.order:
            raise IntegrityError(
                f"incidence stabilizer {s} inconsistent with orbit size {size}"
            )
        if index == 3:
            base = P1Point(ONE, ZERO)
            cert = orbit_of(base, group)
            if cert.size != 12 or cert.stabilizer_order != 5:
                raise IntegrityError("the rational orbit is not 12 points with 5-fold stabilizer")
            vform = vanishing_form(cert.points)
            if vform != monic(phi):
                raise IntegrityError(
                    "vanishing form of the rational orbit is not the degree-12 form"
                )
            certs.append(
                OrbitCert(
                    base_point=base,
                    points=cert.points,
                    size=size,
                    stabilizer_gens=cert.stabilizer_gens,
                    stabilizer_order=s,
                    group_order=group.order,
                    vanishing_form=phi,
                )
            )
        else:
            certs.append(
                OrbitCert(
                    base_point=None,
                    points=(),
                    size=size,
                    stabilizer_gens=(),
                    stabilizer_order=s,
                    group_order=group.order,
                    vanishing_form=phi,
                )
            )
    return tuple(certs)


def sample_points(count: int = 100, seed: int = 0) -> list[P1Point]:
    """Deterministic small-height rational sample points."""
    rng = random.Random(seed)
    points = []
    seen = set()
    while len(points) < count:
        num = rng.randint(-9, 9)
        den = rng.randint(1, 9)
        pt = P1Point(ONE, CycNum.from_rational(Fraction(num, den)))
        if pt not in seen:
            seen.add(pt)
            points.append(pt)
    return points


def stabilizer_orders(group: FinGroup | None = None, samples: int = 100, seed: int = 0) -> set[int]:
    """Set of stabilizer orders realized on the line.

    Sweep: the three special-orbit forms (through fixed-point incidences)
    plus seeded generic points. Point stabilizers in this action are cyclic,
    so every stabilizer order is an element order; the element-order check
    rules out everything outside the sweep.
    """
    if group is None:
        group = binary_icosahedral().projective
    orders = set()
    for cert in special_orbits(group):
        orders.add(cert.stabilizer_order)
    for pt in sample_points(samples, seed):
        orders.add(orbit_of(pt, group).stabilizer_order)
    element_orders = set(group.order_histogram())
    if not orders <= element_orders:
        raise IntegrityError(
            "a stabilizer order is not an element order; stabilizers must be cyclic"
        )
    return orders


def min_orbit_bound(group: FinGroup) -> int:
    """Smallest orbit size over the complex line: order / largest element order.

    Point stabilizers are cyclic (a finite stabilizer embeds into the
    multiplicative group at the fixed point), and every cyclic subgroup
    fixes its two eigenpoints, so the largest stabilizer order equals the
    largest element order.
    """
    return group.order // max(group.order_histogram())
