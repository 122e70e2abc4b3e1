"""Amenability classification for semigroups of polynomials under
composition, with machine-checkable certificates.

The decidable core: for polynomials of degree >= 2 with at least one
non-special generator, left amenability of the generated semigroup is
equivalent to the generators being pairwise power joined (some iterates
coincide: A^k = B^l as k-fold compositions), and right amenability is
equivalent to the pairwise power-twisted relations A^(2k) = A^k o B^l and
B^(2l) = B^l o A^k.  Both conditions can be certified positively by
exhibiting (k, l) and refuted exactly through two obstructions:

- degrees: A^k = B^l forces n^k = m^l, so n and m must be powers of a
  common base (multiplicative dependence);
- leading coefficients: lc(A^k) = lc(A)^((n^k-1)/(n-1)), and along the
  admissible grid (k, l) = (k0 t, l0 t) the resulting equation between
  lc(A) and lc(B) is t-independent in its prime part and depends only on
  t mod 2 in its sign, so failure for every t is a finite check.

Everything else is bounded search, reported honestly as Unknown with the
bounds that were exhausted.  All-special generator sets fall outside the
pivot theory; they are decided only when they commute (abelian semigroups
are amenable) and otherwise reported Unknown.

The semidirect section models the subsemigroups generated by one
polynomial together with a finite rotation subgroup of its symmetry group:
elements delta_j o R^s multiply through the twist, Folner windows give
exact invariance defects, and left amenability reduces to the twist being
invertible mod the subgroup order.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd

from .errors import (
    BadParams,
    BadSubgroup,
    DegreeTooLow,
    EmptyInput,
    InfiniteGroup,
    NotRational,
)
from .forms import CenteredForm, NotSpecial, is_special
from .polynomials import Poly, Z, compose, iterate
from .symmetry import g_group

YES = "Yes"
NO = "No"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SearchBounds:
    """Caps for the bounded searches; failure within these caps is Unknown."""

    tmax: int = 6
    lmax: int = 6
    wordmax: int = 8

    def __post_init__(self):
        if self.tmax < 1 or self.lmax < 1 or self.wordmax < 1:
            raise BadParams("all search bounds must be >= 1")


@dataclass(frozen=True)
class CommonIterate:
    """A^k == B^l, k-fold and l-fold composition."""

    k: int
    l: int


@dataclass(frozen=True)
class TwistedPair:
    """A^(2k) == A^k o B^l and B^(2l) == B^l o A^k."""

    k: int
    l: int


@dataclass(frozen=True)
class CommutesWithIterate:
    """A o B^l == B^l o A."""

    l: int


@dataclass(frozen=True)
class DegreeObstruction:
    """deg A = n and deg B = m admit no k, l with n^k == m^l."""

    n: int
    m: int


@dataclass(frozen=True)
class LeadingCoeffObstruction:
    """Along every admissible (k, l) = (k0 t, l0 t) the leading coefficients
    of the iterates differ.

    reason "prime": the exponent of `prime` in lc violates the t-independent
    condition a_p (m-1) == b_p (n-1).  reason "sign": no parity of t makes
    the iterate signs agree.
    """

    n: int
    m: int
    k0: int
    l0: int
    lc_a: Fraction
    lc_b: Fraction
    reason: str
    prime: int | None


@dataclass(frozen=True)
class BoundExhausted:
    bounds: SearchBounds


Certificate = (
    CommonIterate
    | TwistedPair
    | CommutesWithIterate
    | DegreeObstruction
    | LeadingCoeffObstruction
    | BoundExhausted
)


@dataclass(frozen=True)
class Outcome:
    """Yes/No/Unknown plus the certificate backing the answer."""

    status: str
    certificate: Certificate | None


@dataclass(frozen=True)
class Finding:
    """An Outcome tagged with which generators it is about."""

    subject: str
    outcome: Outcome


@dataclass(frozen=True)
class SideVerdict:
    status: str
    findings: tuple[Finding, ...]


@dataclass(frozen=True)
class Verdict:
    left_amenable: SideVerdict
    right_amenable: SideVerdict
    amenable: str
    notes: tuple[str, ...]


NOTE_PIVOT_LEFT = (
    "left amenability with a non-special generator present is equivalent to "
    "all generators sharing an iterate with the pivot (power joined)"
)
NOTE_PIVOT_RIGHT = (
    "right amenability is equivalent to the power-twisted relations holding "
    "against the pivot"
)
NOTE_DAY = "amenable means left and right amenable simultaneously"
NOTE_FREE = (
    "a pair of degree >= 2 polynomials without the twisted relations "
    "generates a free subsemigroup of rank two, ruling out right amenability"
)
NOTE_ALL_SPECIAL = (
    "every generator is special (affine conjugate of z^n or +-T_n); degree "
    "and leading-coefficient obstructions are inconclusive in that regime"
)
NOTE_ABELIAN = (
    "all generators commute, so the semigroup is abelian and amenable on "
    "both sides"
)
NOTE_COMMUTE_UPGRADE = (
    "commuting with an iterate of the non-special pivot forces a shared "
    "iterate, so the pair is power joined"
)
NOTE_SPECIAL_UNDECIDED = (
    "some special generators do not commute; no implemented criterion "
    "decides this case"
)

_SAMPLE_POINTS = (Fraction(2), Fraction(-3, 2), Fraction(5, 7))


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    k = 2
    while k * k <= n:
        while n % k == 0:
            out[k] = out.get(k, 0) + 1
            n //= k
        k += 1 if k == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _prime_exponents(r: Fraction) -> dict[int, int]:
    """Signed prime exponent vector of a nonzero rational."""
    out = dict(_factor(abs(r.numerator))) if abs(r.numerator) > 1 else {}
    if r.denominator > 1:
        for p, e in _factor(r.denominator).items():
            out[p] = out.get(p, 0) - e
    return out


def multiplicatively_dependent(n: int, m: int) -> tuple[int, int, int] | None:
    """Smallest d with n == d^p and m == d^q, as (d, p, q), else None."""
    if n < 2 or m < 2:
        raise BadParams("multiplicative dependence needs n, m >= 2")
    en, em = _factor(n), _factor(m)
    if set(en) != set(em):
        return None
    gp = 0
    for e in en.values():
        gp = igcd(gp, e)
    gq = 0
    for e in em.values():
        gq = igcd(gq, e)
    if any(en[p] // gp != em[p] // gq for p in en):
        return None
    d = 1
    for p, e in en.items():
        d *= p ** (e // gp)
    return d, gp, gq


def _iterate_grid(A: Poly, B: Poly) -> tuple[int, int] | None:
    """Minimal (k0, l0) with (deg A)^k0 == (deg B)^l0, or None."""
    dep = multiplicatively_dependent(A.degree, B.degree)
    if dep is None:
        return None
    _, p, q = dep
    g = igcd(p, q)
    return q // g, p // g


def _apply_iter(p: Poly, k: int, x: Fraction) -> Fraction:
    for _ in range(k):
        x = p(x)
    return x


def _sign_parities(A: Poly, B: Poly, k0: int, l0: int) -> list[int]:
    """Parities of t for which the iterate leading coefficients can agree
    in sign.  lc(A^k) = lc(A)^e with e = (n^k - 1)/(n - 1); e is odd for
    every k when n is even, and has the parity of k when n is odd."""
    n, m = A.degree, B.degree
    sa = 1 if A.lc > 0 else -1
    sb = 1 if B.lc > 0 else -1
    out = []
    for tp in (0, 1):
        e_odd = 1 if n % 2 == 0 else (k0 * tp) % 2
        f_odd = 1 if m % 2 == 0 else (l0 * tp) % 2
        if (sa if e_odd else 1) == (sb if f_odd else 1):
            out.append(tp)
    return out


def _lc_obstruction(A: Poly, B: Poly, k0: int, l0: int) -> LeadingCoeffObstruction | None:
    """Exact all-t refutation of lc(A^(k0 t)) == lc(B^(l0 t)), if one holds.

    With N = n^k0 = m^l0 the exponents are e(t) = (N^t - 1)/(n - 1) and
    f(t) = (N^t - 1)/(m - 1), so per prime the condition a_p e(t) == b_p f(t)
    reduces to the t-free a_p (m-1) == b_p (n-1); the sign condition only
    sees t mod 2.
    """
    n, m = A.degree, B.degree
    ea, eb = _prime_exponents(A.lc), _prime_exponents(B.lc)
    for pr in sorted(set(ea) | set(eb)):
        if ea.get(pr, 0) * (m - 1) != eb.get(pr, 0) * (n - 1):
            return LeadingCoeffObstruction(
                n=n, m=m, k0=k0, l0=l0, lc_a=A.lc, lc_b=B.lc, reason="prime", prime=pr
            )
    if not _sign_parities(A, B, k0, l0):
        return LeadingCoeffObstruction(
            n=n, m=m, k0=k0, l0=l0, lc_a=A.lc, lc_b=B.lc, reason="sign", prime=None
        )
    return None


def common_iterate(A: Poly, B: Poly, bounds: SearchBounds = SearchBounds()) -> Outcome:
    """Search for A^k == B^l; refute exactly via degrees or leading
    coefficients when possible.

    Any solution must sit on the grid (k, l) = (k0 t, l0 t), t >= 1, so the
    search walks t up to bounds.tmax, skipping t whose parity already fails
    the sign analysis, prefiltering by evaluation at sample points, and
    confirming candidates by exact composition.
    """
    if A.degree < 2 or B.degree < 2:
        raise DegreeTooLow("common iterate search needs degrees >= 2")
    grid = _iterate_grid(A, B)
    if grid is None:
        return Outcome(NO, DegreeObstruction(A.degree, B.degree))
    k0, l0 = grid
    obstruction = _lc_obstruction(A, B, k0, l0)
    if obstruction is not None:
        return Outcome(NO, obstruction)
    parities = _sign_parities(A, B, k0, l0)
    for t in range(1, bounds.tmax + 1):
        if t % 2 not in parities:
            continue
        k, l = k0 * t, l0 * t
        if any(_apply_iter(A, k, x) != _apply_iter(B, l, x) for x in _SAMPLE_POINTS):
            continue
        if iterate(A, k) == iterate(B, l):
            return Outcome(YES, CommonIterate(k=k, l=l))
    return Outcome(UNKNOWN, BoundExhausted(bounds))


def twisted_pair(A: Poly, B: Poly, bounds: SearchBounds = SearchBounds()) -> Outcome:
    """Search for the power-twisted relations
    A^(2k) == A^k o B^l and B^(2l) == B^l o A^k on the degree grid.

    The degree constraint is the same n^k == m^l as for a common iterate,
    so the only exact refutation is multiplicative independence of the
    degrees; there is no leading-coefficient refutation here.
    """
    if A.degree < 2 or B.degree < 2:
        raise DegreeTooLow("twisted relation search needs degrees >= 2")
    grid = _iterate_grid(A, B)
    if grid is None:
        return Outcome(NO, DegreeObstruction(A.degree, B.degree))
    k0, l0 = grid
    for t in range(1, bounds.tmax + 1):
        k, l = k0 * t, l0 * t
        ok = True
        for x in _SAMPLE_POINTS:
            ax = _apply_iter(A, k, x)
            bx = _apply_iter(B, l, x)
            if _apply_iter(A, k, ax) != _apply_iter(A, k, bx):
                ok = False
                break
            if _apply_iter(B, l, bx) != _apply_iter(B, l, ax):
                ok = False
                break
        if not ok:
            continue
        ak, bl = iterate(A, k), iterate(B, l)
        if compose(ak, ak) == compose(ak, bl) and compose(bl, bl) == compose(bl, ak):
            return Outcome(YES, TwistedPair(k=k, l=l))
    return Outcome(UNKNOWN, BoundExhausted(bounds))


def commutes_with_iterate(A: Poly, B: Poly, bounds: SearchBounds = SearchBounds()) -> int | None:
    """Smallest l <= bounds.lmax with A o B^l == B^l o A, else None."""
    if A.degree < 2 or B.degree < 2:
        raise DegreeTooLow("commutation search needs degrees >= 2")
    for l in range(1, bounds.lmax + 1):
        if any(
            _apply_iter(B, l, A(x)) != A(_apply_iter(B, l, x)) for x in _SAMPLE_POINTS
        ):
            continue
        bl = iterate(B, l)
        if compose(A, bl) == compose(bl, A):
            return l
    return None


def free_collision_search(A: Poly, B: Poly, bounds: SearchBounds = SearchBounds()) -> tuple[str, str] | None:
    """Look for two distinct words in A, B composing to the same polynomial.

    Words are enumerated by length then lexicographically; each word
    w = w1 w2 ... wk denotes w1 o w2 o ... o wk.  Candidates are matched by
    exact evaluation at fixed sample points and confirmed by composing the
    polynomials, so a returned pair is a genuine relation.  None means no
    relation was found within bounds.wordmax; on its own that proves
    nothing, though for pairs refuted by the twisted-relation obstructions
    a free pair of words is known to exist.
    """
    if A.degree < 2 or B.degree < 2:
        raise DegreeTooLow("collision search needs degrees >= 2")
    rng = random.Random(0x52697474)
    pts = [Fraction(rng.randint(2, 99), rng.randint(1, 9)) for _ in range(3)]
    letters = {"A": A, "B": B}

    def word_values(w: str) -> tuple[Fraction, ...]:
        vals = []
        for x in pts:
            for ch in reversed(w):
                x = letters[ch](x)
            vals.append(x)
        return tuple(vals)

    def word_poly(w: str) -> Poly:
        out = letters[w[-1]]
        for ch in reversed(w[:-1]):
            out = compose(letters[ch], out)
        return out

    seen: dict[tuple[Fraction, ...], str] = {}
    for length in range(1, bounds.wordmax + 1):
        for tup in itertools.product("AB", repeat=length):
            w = "".join(tup)
            key = word_values(w)
            prev = seen.get(key)
            if prev is None:
                seen[key] = w
                continue
            if word_poly(prev) == word_poly(w):
                return prev, w
    return None


def _aggregate(findings: list[Finding]) -> str:
    statuses = [f.outcome.status for f in findings]
    if NO in statuses:
        return NO
    if UNKNOWN in statuses:
        return UNKNOWN
    return YES


def _classify_all_special(gens: list[Poly], bounds: SearchBounds) -> Verdict:
    notes = [NOTE_ALL_SPECIAL]
    commuting = True
    findings: list[Finding] = []
    for i, j in itertools.combinations_with_replacement(range(len(gens)), 2):
        gi, gj = gens[i], gens[j]
        if compose(gi, gj) != compose(gj, gi):
            commuting = False
            findings.append(Finding(f"g{i}|g{j}", Outcome(UNKNOWN, None)))
            continue
        out = common_iterate(gi, gj, bounds)
        if out.status != YES:
            out = Outcome(YES, CommutesWithIterate(l=1))
        findings.append(Finding(f"g{i}|g{j}", out))
    if commuting:
        notes.append(NOTE_ABELIAN)
        notes.append(NOTE_DAY)
        side = SideVerdict(YES, tuple(findings))
        return Verdict(side, side, YES, tuple(notes))
    notes.append(NOTE_SPECIAL_UNDECIDED)
    side = SideVerdict(UNKNOWN, tuple(findings))
    return Verdict(side, side, UNKNOWN, tuple(notes))


def classify(gens: list[Poly], bounds: SearchBounds = SearchBounds()) -> Verdict:
    """Amenability verdict for the semigroup generated by gens under
    composition.

    With a non-special pivot generator available, left amenability reduces
    to every generator sharing an iterate with the pivot and right
    amenability to the twisted relations against the pivot; both reductions
    are exact, so No answers carry obstruction certificates and Yes answers
    carry relation certificates.  Without a non-special generator only the
    abelian case is decided.  Duplicate generators are dropped.
    """
    if not gens:
        raise EmptyInput("need at least one generator")
    unique: list[Poly] = []
    for g in gens:
        if g.degree < 2:
            raise DegreeTooLow("generators must have degree >= 2")
        if g not in unique:
            unique.append(g)
    gens = unique
    pivot_idx = next(
        (i for i, g in enumerate(gens) if isinstance(is_special(g), NotSpecial)), None
    )
    if pivot_idx is None:
        return _classify_all_special(gens, bounds)
    pivot = gens[pivot_idx]
    notes = [NOTE_PIVOT_LEFT, NOTE_PIVOT_RIGHT, NOTE_DAY]
    upgraded = False
    left_findings: list[Finding] = []
    right_findings: list[Finding] = []
    for i, q in enumerate(gens):
        subject = f"g{i}|g{pivot_idx}"
        out = common_iterate(q, pivot, bounds)
        if out.status == UNKNOWN:
            l = commutes_with_iterate(q, pivot, bounds)
            if l is not None:
                out = Outcome(YES, CommutesWithIterate(l=l))
                upgraded = True
        left_findings.append(Finding(subject, out))
        right_findings.append(Finding(subject, twisted_pair(q, pivot, bounds)))
    if upgraded:
        notes.append(NOTE_COMMUTE_UPGRADE)
    left = SideVerdict(_aggregate(left_findings), tuple(left_findings))
    right = SideVerdict(_aggregate(right_findings), tuple(right_findings))
    if right.status == NO:
        notes.append(NOTE_FREE)
    if left.status == YES and right.status == YES:
        amen = YES
    elif NO in (left.status, right.status):
        amen = NO
    else:
        amen = UNKNOWN
    return Verdict(left, right, amen, tuple(notes))


def verify_certificate(cert: Certificate, A: Poly, B: Poly) -> bool:
    """Re-check a certificate by direct exact computation."""
    if isinstance(cert, CommonIterate):
        return iterate(A, cert.k) == iterate(B, cert.l)
    if isinstance(cert, TwistedPair):
        ak, bl = iterate(A, cert.k), iterate(B, cert.l)
        return compose(ak, ak) == compose(ak, bl) and compose(bl, bl) == compose(bl, ak)
    if isinstance(cert, CommutesWithIterate):
        bl = iterate(B, cert.l)
        return compose(A, bl) == compose(bl, A)
    if isinstance(cert, DegreeObstruction):
        return (
            cert.n == A.degree
            and cert.m == B.degree
            and multiplicatively_dependent(cert.n, cert.m) is None
        )
    if isinstance(cert, LeadingCoeffObstruction):
        grid = _iterate_grid(A, B)
        if grid is None or grid != (cert.k0, cert.l0):
            return False
        redone = _lc_obstruction(A, B, cert.k0, cert.l0)
        return redone is not None
    if isinstance(cert, BoundExhausted):
        return True
    raise BadParams(f"unknown certificate type: {type(cert).__name__}")


# ---------------------------------------------------------------------------
# Semidirect products delta_j o R^s and their Folner windows
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemidirectElement:
    """delta_j o R^s: rotation index j (mod the subgroup order) and s >= 0."""

    j: int
    s: int


@dataclass(frozen=True)
class SemidirectContext:
    """Multiplication data for the semigroup generated by a rotation
    subgroup of order d inside a symmetry group of order ell (twist r),
    together with one polynomial.

    Moving R^s past delta_j twists the rotation index by r^s, which is the
    whole multiplication law.  base is the centered polynomial when the
    context was built from one (realize needs it); abstract contexts carry
    only the arithmetic.
    """

    d: int
    twist: int
    ell: int
    frame: CenteredForm | None = None
    base: Poly | None = None


def abstract_semidirect_context(ell: int, r: int, d: int) -> SemidirectContext:
    """Context from raw (ell, r, d) with d dividing ell; no polynomial."""
    if ell < 1 or d < 1:
        raise BadParams("group orders must be >= 1")
    if ell % d:
        raise BadSubgroup(f"subgroup order {d} does not divide {ell}")
    return SemidirectContext(d=d, twist=r % ell, ell=ell)


def semidirect_context(rpoly: Poly, d: int) -> SemidirectContext:
    """Context for the semigroup generated by rpoly (centered) and the
    order-d rotation subgroup of its symmetry group.

    Refused when the symmetry group is infinite (quasi-powers), when d does
    not divide its order, and when the companion maps of the subgroup are
    rotations about a nonzero center (then delta_j o R^s is not closed
    under composition in the claimed shape).
    """
    tw = g_group(rpoly)
    if tw.order is None:
        raise InfiniteGroup("quasi-power: the symmetry group is infinite")
    if d < 1 or tw.order % d:
        raise BadSubgroup(f"subgroup order {d} does not divide {tw.order}")
    c0 = tw.frame.centered[0]
    if c0 != 0 and tw.twist % d != 0:
        raise BadSubgroup(
            "subgroup action is not realizable: companion rotations are "
            "centered away from the origin"
        )
    return SemidirectContext(
        d=d, twist=tw.twist, ell=tw.order, frame=tw.frame, base=tw.frame.centered
    )


def _check_element(ctx: SemidirectContext, x: SemidirectElement) -> None:
    if x.s < 0:
        raise BadParams("iteration exponent must be >= 0")
    if not 0 <= x.j < ctx.d:
        raise BadParams(f"rotation index must lie in 0..{ctx.d - 1}")


def semidirect_mul(ctx: SemidirectContext, x: SemidirectElement, y: SemidirectElement) -> SemidirectElement:
    """(delta_{j1} o R^{s1}) o (delta_{j2} o R^{s2})
    == delta_{j1 + r^{s1} j2} o R^{s1+s2}."""
    _check_element(ctx, x)
    _check_element(ctx, y)
    j = (x.j + pow(ctx.twist, x.s, ctx.d) * y.j) % ctx.d
    return SemidirectElement(j=j, s=x.s + y.s)


def semidirect_realize(ctx: SemidirectContext, x: SemidirectElement) -> Poly:
    """The polynomial delta_j o R^s in centered coordinates.

    Only rotation subgroups of order <= 2 consist of rational maps
    (delta in {z, -z}); larger d would need complex roots of unity.
    """
    if ctx.base is None:
        raise BadParams("abstract context has no polynomial to realize")
    if ctx.d > 2:
        raise NotRational(f"rotations of order {ctx.d} are not rational")
    _check_element(ctx, x)
    delta = Z if x.j == 0 else -Z
    if x.s == 0:
        return delta
    it = iterate(ctx.base, x.s)
    return compose(delta, it)


def sgr_left_amenable(ctx: SemidirectContext) -> bool:
    """Left amenability of the modeled semigroup: the twist must permute
    the subgroup, i.e. gcd(r, d) == 1."""
    return igcd(ctx.twist, ctx.d) == 1


def folner_window(ctx: SemidirectContext, n: int) -> list[SemidirectElement]:
    """F_N = all (j, s) with s <= N: the canonical right-Folner candidates."""
    if n < 0:
        raise BadParams("window size must be >= 0")
    return [
        SemidirectElement(j=j, s=s) for j in range(ctx.d) for s in range(n + 1)
    ]


def folner_ratio(ctx: SemidirectContext, x: SemidirectElement, n: int) -> Fraction:
    """Exact right-invariance defect |F_N minus F_N x| / |F_N|.

    Right translation shifts the s-levels up by s(x) and permutes each
    level, so the defect is exactly s(x)/(N+1): the windows are a right
    Folner sequence whenever that tends to zero, which it always does.
    """
    _check_element(ctx, x)
    window = folner_window(ctx, n)
    image = {semidirect_mul(ctx, y, x) for y in window}
    missing = sum(1 for y in window if y not in image)
    return Fraction(missing, len(window))
