"""Affine symmetry groups of a polynomial map.

Two groups matter here.  Aut(p) is the group of affine sigma commuting with
p (sigma o p == p o sigma).  The larger group G(p) collects the affine
sigma for which p o sigma == nu o p has an affine solution nu; the map
gamma: sigma -> nu is then a homomorphism, and its (non-)bijectivity on
finite subgroups is what later decides left amenability of the associated
semigroups.

Everything is computed on the centered form, where both groups consist of
rotations z -> a z and membership turns into exponent congruences: a^(k-1)
= 1 for Aut over the support, and a^(k1-k2) = 1 over pairs of support
exponents for G.  So each group is cyclic (possibly infinite for G when the
positive support is a single exponent) and is reported as its order plus
the twist exponent r with gamma(a) = a^r.
"""

from dataclasses import dataclass
from math import gcd as igcd

from .errors import BadParams, InfiniteGroup, SpecialInput
from .forms import CenteredForm, NotSpecial, center, is_special
from .polynomials import Poly, iterate


@dataclass(frozen=True)
class CyclicTwist:
    """A cyclic group of rotations in the centered frame, with its twist.

    order None means the group is infinite (every rotation z -> a z works).
    The rotation sigma_j = zeta^j z maps under gamma to the rotation with
    index twist * j; the companion map nu fixes the centered constant term,
    so it is a rotation about that point rather than about the origin when
    the constant term is nonzero.
    """

    order: int | None
    twist: int
    frame: CenteredForm

    @property
    def is_infinite(self) -> bool:
        return self.order is None


def aut_group(p: Poly) -> CyclicTwist:
    """Commuting symmetries sigma o p == p o sigma.

    On the centered form the conditions are a^(k-1) == 1 for every support
    exponent k >= 1, plus a == 1 if the constant term is nonzero, so the
    order is the gcd of those exponents.  Always finite: the degree
    contributes n - 1.
    """
    cf = center(p)
    q = cf.centered
    ell = 0
    for k in q.support():
        ell = igcd(ell, k - 1 if k >= 1 else 1)
    return CyclicTwist(order=ell, twist=1, frame=cf)


def g_group(p: Poly) -> CyclicTwist:
    """Symmetries sigma admitting a companion: p o sigma == nu o p.

    Only differences of support exponents constrain a (the companion
    absorbs a common power), so the order is the gcd of pairwise
    differences of the positive support.  A singleton positive support
    means no constraint at all: the group is infinite, and p is a
    quasi-power (affine o z^n).  The twist is deg p reduced mod the order.
    """
    cf = center(p)
    q = cf.centered
    n = q.degree
    pos = [k for k in q.support() if k >= 1]
    if len(pos) == 1:
        return CyclicTwist(order=None, twist=n, frame=cf)
    ell = 0
    for k in pos[1:]:
        ell = igcd(ell, k - pos[0])
    return CyclicTwist(order=ell, twist=n % ell, frame=cf)


def gamma_apply(tw: CyclicTwist, j: int) -> int:
    """Index of gamma(sigma_j): rotation j maps to rotation twist*j mod order."""
    if tw.order is None:
        raise InfiniteGroup("gamma indices are only defined for a finite group")
    return (tw.twist * j) % tw.order


@dataclass(frozen=True)
class StabilizationReport:
    """Aut orders along iterates p, p o p, ...; orders[k-1] belongs to the
    k-th iterate.  settled_at is the first k whose order already equals
    every later observed one (within the computed window)."""

    orders: tuple[int, ...]
    settled_at: int


def aut_stabilization(p: Poly, kmax: int) -> StabilizationReport:
    """Observe how Aut grows along iterates of a non-special polynomial.

    For special polynomials the orders grow without bound, so those inputs
    are refused.  No claim is made beyond the computed window.
    """
    if kmax < 1:
        raise BadParams("kmax must be >= 1")
    if not isinstance(is_special(p), NotSpecial):
        raise SpecialInput("iterated symmetry orders of special polynomials do not settle")
    orders = tuple(aut_group(iterate(p, k)).order for k in range(1, kmax + 1))
    settled = len(orders)
    while settled > 1 and orders[settled - 2] == orders[-1]:
        settled -= 1
    return StabilizationReport(orders=orders, settled_at=settled)
