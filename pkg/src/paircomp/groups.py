"""Catalog of multiplicative structures and the orderability gate.

A ratio carrier is admissible for pairwise comparisons exactly when it is
an abelian group with no element of finite order (torsion-free). Each
descriptor in the catalog ships its known torsion witness, or the knowledge
that none exists, so the gate is an executable decision for the named
carriers rather than a general (undecidable) procedure.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import MembershipError, NotTotallyOrdered, UnknownGroup
from .scalars import ABS_TOL, canonical, close_abs, format_scalar, is_real

Op = Callable[[complex, complex], complex]
Sampler = Callable[[np.random.Generator], complex]


@dataclass(frozen=True)
class GroupDescriptor:
    """A named carrier with its operation, identity, inverse and metadata.

    ``additive`` distinguishes the one catalog group whose operation is +
    (identity 0); everything tolerance-related treats additive carriers
    with absolute rather than relative closeness.
    """

    name: str
    op: Op
    identity: complex
    inverse: Callable[[complex], complex]
    contains: Callable[[complex], bool]
    sample: Sampler
    abelian: bool = True
    additive: bool = False
    known_torsion: Optional[tuple[complex, int]] = None
    cyclic_n: Optional[int] = None

    def require_member(self, z: complex) -> None:
        if not self.contains(z):
            raise MembershipError(f"{z!r} is not a member of {self.name}")

    @property
    def elements(self) -> list[complex]:
        """Finite carrier listing; only cyclic root groups have one."""
        if self.cyclic_n is None:
            raise ValueError(f"{self.name} is not finite")
        return [unit_root(self.cyclic_n, k) for k in range(self.cyclic_n)]


@dataclass(frozen=True)
class TorsionWitness:
    """A non-identity element with element^order = identity."""

    element: complex
    order: int


@dataclass(frozen=True)
class OrderabilityVerdict:
    orderable: bool
    witness: Optional[TorsionWitness]
    reason: str


def _mul(a: complex, b: complex) -> complex:
    return canonical(a * b)


def _mul_inv(a: complex) -> complex:
    return canonical(1.0 / a)


def _is_real_tol(z: complex) -> bool:
    # membership admits float dust from prior arithmetic (e.g. exp(i*pi))
    return abs(z.imag) <= ABS_TOL * max(1.0, abs(z.real))


POSITIVE_REALS = GroupDescriptor(
    name="PositiveReals",
    op=_mul,
    identity=1.0 + 0.0j,
    inverse=_mul_inv,
    contains=lambda z: _is_real_tol(z) and z.real > 0.0,
    sample=lambda rng: complex(math.exp(rng.normal(0.0, 1.5)), 0.0),
)

NONZERO_REALS = GroupDescriptor(
    name="NonzeroReals",
    op=_mul,
    identity=1.0 + 0.0j,
    inverse=_mul_inv,
    contains=lambda z: _is_real_tol(z) and z.real != 0.0,
    sample=lambda rng: complex(
        (1.0 if rng.random() < 0.5 else -1.0) * math.exp(rng.normal(0.0, 1.5)), 0.0
    ),
    known_torsion=(-1.0 + 0.0j, 2),
)

NONZERO_COMPLEX = GroupDescriptor(
    name="NonzeroComplex",
    op=_mul,
    identity=1.0 + 0.0j,
    inverse=_mul_inv,
    contains=lambda z: abs(z) > 0.0,
    sample=lambda rng: cmath.rect(math.exp(rng.normal(0.0, 1.0)), rng.uniform(-math.pi, math.pi)),
    known_torsion=(1.0j, 4),
)

ADDITIVE_REALS = GroupDescriptor(
    name="AdditiveReals",
    op=lambda a, b: canonical(a + b),
    identity=0.0 + 0.0j,
    inverse=lambda a: canonical(-a),
    contains=_is_real_tol,
    sample=lambda rng: complex(rng.normal(0.0, 10.0), 0.0),
    additive=True,
)


def _snap_root(z: complex) -> complex:
    # rect() leaves ~1e-16 dust on the axis roots; the carrier is exact
    re_, im = z.real, z.imag
    if abs(re_ - round(re_)) <= 1e-12:
        re_ = float(round(re_))
    if abs(im - round(im)) <= 1e-12:
        im = float(round(im))
    return canonical(complex(re_, im))


def unit_root(n: int, k: int) -> complex:
    """exp(2*pi*i*k/n) with exact values on the real/imaginary axes."""
    return _snap_root(cmath.rect(1.0, 2.0 * math.pi * k / n))


def cyclic_roots_of_unity(n: int) -> GroupDescriptor:
    """The n-th roots of unity under multiplication; all torsion for n >= 2."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def contains(z: complex) -> bool:
        return abs(z) > 0.0 and close_abs(z**n, 1.0 + 0.0j, ABS_TOL)

    def sample(rng: np.random.Generator) -> complex:
        return unit_root(n, int(rng.integers(0, n)))

    witness = None
    if n >= 2:
        witness = (unit_root(n, 1), n)
    return GroupDescriptor(
        name=f"CyclicRootsOfUnity({n})",
        op=_mul,
        identity=1.0 + 0.0j,
        inverse=_mul_inv,
        contains=contains,
        sample=sample,
        known_torsion=witness,
        cyclic_n=n,
    )


def group_catalog(cyclic_n: int = 2) -> list[GroupDescriptor]:
    """The five named descriptors; the cyclic one parameterized by ``cyclic_n``."""
    return [
        POSITIVE_REALS,
        NONZERO_REALS,
        NONZERO_COMPLEX,
        cyclic_roots_of_unity(cyclic_n),
        ADDITIVE_REALS,
    ]


_CYCLIC_NAME = re.compile(r"^CyclicRootsOfUnity[(:](\d+)\)?$")

_BY_NAME = {
    g.name: g for g in (POSITIVE_REALS, NONZERO_REALS, NONZERO_COMPLEX, ADDITIVE_REALS)
}


def group_by_name(name: str) -> GroupDescriptor:
    """Resolve a group identifier; cyclic groups accept ``(n)`` or ``:n``."""
    if name in _BY_NAME:
        return _BY_NAME[name]
    m = _CYCLIC_NAME.match(name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise UnknownGroup(f"CyclicRootsOfUnity needs n >= 1, got {n}")
        return cyclic_roots_of_unity(n)
    raise UnknownGroup(f"unknown group {name!r}")


def element_order(g: GroupDescriptor, a: complex, max_m: int = 64) -> Optional[int]:
    """Least m in [1, max_m] with a^m = identity (absolute 1e-9 per component).

    Returns None when no such m exists up to the bound. Non-members are
    rejected.
    """
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    a = canonical(complex(a))
    g.require_member(a)
    acc = a
    for m in range(1, max_m + 1):
        if close_abs(acc, g.identity, ABS_TOL):
            return m
        acc = g.op(acc, a)
    return None


def find_torsion_witness(g: GroupDescriptor) -> Optional[TorsionWitness]:
    """The catalog's known finite-order element, re-verified, or None."""
    if g.known_torsion is None:
        return None
    element, order = g.known_torsion
    verified = element_order(g, element, max_m=max(order, 2))
    if verified != order or close_abs(element, g.identity, ABS_TOL):
        raise AssertionError(f"catalog witness for {g.name} failed verification")
    return TorsionWitness(element=element, order=order)


def check_orderability(g: GroupDescriptor) -> OrderabilityVerdict:
    """Linear order exists iff the group is abelian and torsion-free."""
    if not g.abelian:
        return OrderabilityVerdict(False, None, "non-abelian")
    witness = find_torsion_witness(g)
    if witness is None:
        return OrderabilityVerdict(True, None, "torsion-free abelian group")
    return OrderabilityVerdict(
        False,
        witness,
        f"torsion element: {format_scalar(witness.element)} has order {witness.order}",
    )


def standard_le(a: complex, b: complex) -> bool:
    """The usual <= on reals; undefined (raises) off the real line."""
    if not (is_real(canonical(a)) and is_real(canonical(b))):
        raise NotTotallyOrdered(f"no standard order for {a!r} vs {b!r}")
    return a.real <= b.real


def order_axiom_check(
    g: GroupDescriptor,
    le: Callable[[complex, complex], bool] = standard_le,
    samples: int = 1000,
    seed: int = 0,
    pool: Optional[list[complex]] = None,
) -> Optional[tuple[complex, complex, complex]]:
    """Probe translation invariance: A <= B must imply A@C <= B@C.

    Samples ``samples`` triples (from ``pool`` when given, else the group's
    own sampler), orients each pair so A <= B, and returns the first triple
    where applying C reverses the order strictly. None means no violation
    was found. Deterministic under a fixed seed.
    """
    rng = np.random.default_rng(seed)

    def draw() -> complex:
        if pool is not None:
            return complex(pool[int(rng.integers(0, len(pool)))])
        return g.sample(rng)

    for _ in range(samples):
        a, b, c = draw(), draw(), draw()
        for z in (a, b, c):
            g.require_member(z)
        try:
            if not le(a, b):
                a, b = b, a
            if not le(g.op(a, c), g.op(b, c)):
                return (a, b, c)
        except NotTotallyOrdered:
            raise
        except TypeError as exc:
            raise NotTotallyOrdered(str(exc)) from exc
    return None
