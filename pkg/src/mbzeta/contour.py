"""Adaptive contour integration for three meromorphic integrand families:

    gamma_power       Gamma(z) Gamma(s-z) u^{-z}
    zeta_zeta_gamma   zeta(z) zeta(s-z) Gamma(z) Gamma(s-z)
    zeta_gamma_power  zeta(z) Gamma(z) Gamma(s-z) (a-1)^{z-s}

supported along vertical lines (with an analytic truncation bound), straight
segments, axis-aligned rectangles, and the positive real axis. All poles of
every family lie on the real axis, which the pole-guard logic relies on.

Quadrature is adaptive bisection on an embedded 15-point Kronrod / 7-point
Gauss pair; panels are accepted when the local estimate is below
tol * (panel length / total length), and panel contributions accumulate in
compensated (Neumaier) sums in a fixed left-to-right order.
"""
import cmath
import math
from dataclasses import dataclass

from ._backend import kernels
from ._kernel_constants import (BERNOULLI_FRACTIONS, GAUSS_WEIGHTS, GK_NODES,
                                GK_WEIGHTS)
from .errors import (DomainViolation, PoleOnPath, PoleProximity,
                     ToleranceUnreachable)
from .specfun import POLE_GUARD
from .zeta import DEFAULT_CONFIG

__all__ = [
    "GAMMA_POWER", "ZETA_ZETA_GAMMA", "ZETA_GAMMA_POWER", "FAMILY_TAGS",
    "IntegrandFamily", "gamma_power", "zeta_zeta_gamma", "zeta_gamma_power",
    "VerticalLineSpec", "RectangleSpec", "QuadratureResult",
    "integrand_eval", "integrate_vertical", "integrate_segment",
    "integrate_rectangle", "integrate_real_improper",
    "DEFAULT_MAX_EVALUATIONS",
]

GAMMA_POWER = "gamma_power"
ZETA_ZETA_GAMMA = "zeta_zeta_gamma"
ZETA_GAMMA_POWER = "zeta_gamma_power"
FAMILY_TAGS = (GAMMA_POWER, ZETA_ZETA_GAMMA, ZETA_GAMMA_POWER)

_KERNEL_TAG = {GAMMA_POWER: 0, ZETA_ZETA_GAMMA: 1, ZETA_GAMMA_POWER: 2}

TWO_PI = 2.0 * math.pi
DEFAULT_MAX_EVALUATIONS = 2_000_000


@dataclass(frozen=True)
class IntegrandFamily:
    """Tagged integrand; u is gamma_power-only, a is zeta_gamma_power-only."""
    tag: str
    s: complex
    u: float | None = None
    a: float | None = None

    def __post_init__(self):
        s = complex(self.s)
        object.__setattr__(self, "s", s)
        if not (math.isfinite(s.real) and math.isfinite(s.imag)):
            raise DomainViolation("s must be finite")
        if self.tag == GAMMA_POWER:
            if self.u is None or not 0.0 < self.u <= 1.0:
                raise DomainViolation(f"gamma_power needs u in (0, 1], got {self.u}")
            if self.a is not None:
                raise DomainViolation("gamma_power takes no parameter a")
        elif self.tag == ZETA_ZETA_GAMMA:
            if s.real <= 2.0:
                raise DomainViolation(f"zeta_zeta_gamma needs Re(s) > 2, got {s}")
            if self.u is not None or self.a is not None:
                raise DomainViolation("zeta_zeta_gamma takes no u or a")
        elif self.tag == ZETA_GAMMA_POWER:
            if s.real <= 2.0:
                raise DomainViolation(f"zeta_gamma_power needs Re(s) > 2, got {s}")
            if self.a is None or self.a < 2.0:
                raise DomainViolation(f"zeta_gamma_power needs a >= 2, got {self.a}")
            if self.u is not None:
                raise DomainViolation("zeta_gamma_power takes no parameter u")
        else:
            raise DomainViolation(f"unknown family tag {self.tag!r}")

    @property
    def param(self):
        if self.tag == GAMMA_POWER:
            return self.u
        if self.tag == ZETA_GAMMA_POWER:
            return self.a
        return 0.0

    def is_pole(self, n):
        """Whether the integer n is a pole of this family."""
        if n != int(n):
            return False
        n = int(n)
        if self.tag == GAMMA_POWER:
            return n <= 0
        if n == 1 or n == 0:
            return True
        return n < 0 and n % 2 != 0  # even negatives killed by trivial zeros

    def nearest_pole(self, z):
        """Closest pole to z (poles are integers on the real axis)."""
        z = complex(z)
        best, bestd = None, math.inf
        base = round(z.real)
        for n in range(base - 2, base + 3):
            m = min(n, 0) if self.tag == GAMMA_POWER else min(n, 1)
            if self.is_pole(m):
                d = abs(z - m)
                if d < bestd:
                    best, bestd = m, d
        # the pole field is bounded on the right; the two candidates above
        # cover every case because consecutive poles are at most 2 apart
        return complex(best)


def gamma_power(s, u):
    return IntegrandFamily(GAMMA_POWER, complex(s), u=float(u))


def zeta_zeta_gamma(s):
    return IntegrandFamily(ZETA_ZETA_GAMMA, complex(s))


def zeta_gamma_power(s, a):
    return IntegrandFamily(ZETA_GAMMA_POWER, complex(s), a=float(a))


@dataclass(frozen=True)
class VerticalLineSpec:
    """Line Re z = c for a 1/(2*pi*i) principal-value-free line integral."""
    c: float
    tol: float = 1e-8

    def validate_for(self, family):
        if self.tol <= 0.0:
            raise DomainViolation("tol must be positive")
        sigma = family.s.real
        if family.tag == GAMMA_POWER:
            if not (self.c >= 0.5 and sigma - self.c >= 0.5):
                raise DomainViolation(
                    f"gamma_power line needs c >= 1/2 and Re(s)-c >= 1/2; "
                    f"c={self.c}, Re(s)={sigma}")
        else:
            if not (self.c > 1.0 and sigma - self.c > 1.0):
                raise DomainViolation(
                    f"{family.tag} line needs c > 1 and Re(s)-c > 1; "
                    f"c={self.c}, Re(s)={sigma}")


@dataclass(frozen=True)
class RectangleSpec:
    """Counterclockwise rectangle: right edge at c, left at c-k, height 2T."""
    c: float
    k: float
    T: float

    def __post_init__(self):
        if not (self.k > 0.0 and self.T > 0.0):
            raise DomainViolation("rectangle needs k > 0 and T > 0")

    @property
    def left(self):
        return self.c - self.k

    def corners(self):
        c, le, T = self.c, self.left, self.T
        return (complex(c, -T), complex(c, T), complex(le, T), complex(le, -T))


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    err_estimate: float
    tail_bound: float
    evaluations: int

    @property
    def total_error(self):
        return self.err_estimate + self.tail_bound


def integrand_eval(f, z, cfg=DEFAULT_CONFIG):
    """Point evaluation of the family integrand, pole-guarded."""
    z = complex(z)
    pole = f.nearest_pole(z)
    if abs(z - pole) <= POLE_GUARD:
        raise PoleProximity(z, pole)
    em_min, em_per_im = cfg._term_args()
    return kernels.integrand(_KERNEL_TAG[f.tag], f.s, f.param, z, em_min,
                             em_per_im, cfg.correction_order, cfg.reflect_below)


class _CompensatedSum:
    """Neumaier accumulator; order-sensitive but error-free to ~1 ulp."""
    __slots__ = ("s", "c")

    def __init__(self):
        self.s = 0.0
        self.c = 0.0

    def add(self, x):
        t = self.s + x
        if abs(self.s) >= abs(x):
            self.c += (self.s - t) + x
        else:
            self.c += (x - t) + self.s
        self.s = t

    def total(self):
        return self.s + self.c


def _gk15(f, a, b):
    """15-point Kronrod value plus |K-G| error estimate on the segment [a, b]."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    vk = 0j
    vg = 0j
    for i, x in enumerate(GK_NODES):
        if x == 0.0:
            v = f(mid)
            vk += GK_WEIGHTS[i] * v
            vg += GAUSS_WEIGHTS[3] * v
        else:
            v = f(mid - half * x) + f(mid + half * x)
            vk += GK_WEIGHTS[i] * v
            if i % 2 == 1:
                vg += GAUSS_WEIGHTS[i // 2] * v
    return vk * half, abs(vk - vg) * abs(half)


def _adaptive_segment(f, z0, z1, tol_abs, max_evaluations):
    """Raw oriented integral along [z0, z1]; returns (value, err, evals).

    LIFO bisection stack pushed right-then-left gives deterministic
    left-to-right panel acceptance order.
    """
    total_len = abs(z1 - z0)
    if total_len == 0.0:
        return 0j, 0.0, 0
    re_sum, im_sum, err_sum = _CompensatedSum(), _CompensatedSum(), _CompensatedSum()
    evals = 0
    stack = [(z0, z1)]
    while stack:
        a, b = stack.pop()
        seg = abs(b - a)
        v, e = _gk15(f, a, b)
        evals += 15
        if evals > max_evaluations:
            raise ToleranceUnreachable(
                f"evaluation budget {max_evaluations} exceeded on segment "
                f"[{z0}, {z1}]", evaluations=evals,
                partial_value=complex(re_sum.total(), im_sum.total()))
        if e <= tol_abs * seg / total_len or seg <= 1e-13 * total_len:
            re_sum.add(v.real)
            im_sum.add(v.imag)
            err_sum.add(e)
        else:
            m = 0.5 * (a + b)
            stack.append((m, b))
            stack.append((a, m))
    return complex(re_sum.total(), im_sum.total()), err_sum.total(), evals


def _segment_pole_distance(f, z0, z1):
    """Min distance from the family's (real, integer) poles to segment [z0, z1]."""
    lo = min(z0.real, z1.real) - 2.0
    hi = max(z0.real, z1.real) + 2.0
    top = 1 if f.tag != GAMMA_POWER else 0
    best = math.inf
    n = min(top, math.floor(hi))
    while n >= math.floor(lo):
        if f.is_pole(n):
            best = min(best, _point_segment_distance(complex(n), z0, z1))
        n -= 1
    return best


def _point_segment_distance(p, z0, z1):
    d = z1 - z0
    L2 = d.real * d.real + d.imag * d.imag
    if L2 == 0.0:
        return abs(p - z0)
    t = ((p - z0).real * d.real + (p - z0).imag * d.imag) / L2
    t = max(0.0, min(1.0, t))
    return abs(p - (z0 + t * d))


def integrate_segment(f, z0, z1, tol=1e-10, cfg=DEFAULT_CONFIG,
                      max_evaluations=DEFAULT_MAX_EVALUATIONS,
                      pole_guard=POLE_GUARD):
    """Oriented straight-line integral of the integrand, normalized by 1/(2*pi*i)."""
    z0 = complex(z0)
    z1 = complex(z1)
    if _segment_pole_distance(f, z0, z1) <= pole_guard:
        raise PoleOnPath(f"segment [{z0}, {z1}] passes within {pole_guard} of a pole")
    em_min, em_per_im = cfg._term_args()
    tag = _KERNEL_TAG[f.tag]
    s, p = f.s, f.param
    kern = kernels.integrand

    def fn(z):
        return kern(tag, s, p, z, em_min, em_per_im, cfg.correction_order,
                    cfg.reflect_below)

    raw, err, n = _adaptive_segment(fn, z0, z1, tol * TWO_PI, max_evaluations)
    return QuadratureResult(raw / (2j * math.pi), err / TWO_PI, 0.0, n)


_MODULUS_K = math.sqrt(TWO_PI) * 1.25  # |Gamma(x+iy)| <= K|y|^{x-1/2}e^{-pi|y|/2}, |y|>=10


def _pair_tail_bound(x0, s, T, extra):
    """Bound on (1/2pi) |int over |y| >= T| of the Gamma-pair integrand times
    factors bounded by `extra` on the line Re z = x0."""
    sig, ts = s.real, abs(s.imag)
    a = x0 - 0.5            # |y| exponent from Gamma(z)
    c = sig - x0 - 0.5      # |y -+ Im s| exponent from Gamma(s-z)
    if T <= ts + 5.0 or T < 10.0:
        return math.inf
    pre = _MODULUS_K * _MODULUS_K * math.exp(math.pi * ts / 2.0)
    growth = max(a, 0.0) + max(c, 0.0)
    pre *= T ** min(a, 0.0) * (T + ts) ** min(c, 0.0)
    denom = math.pi - growth / (T + ts)
    if denom <= 0.5:
        return math.inf
    one_side = pre * (T + ts) ** growth * math.exp(-math.pi * T) / denom
    return 2.0 * extra * one_side / TWO_PI


def _line_extra_const(f, x0):
    """Max modulus of the non-Gamma-pair factors along Re z = x0."""
    if f.tag == GAMMA_POWER:
        return f.u ** (-x0)
    z_left = abs(kernels.riemann_zeta(complex(x0)))
    z_right = abs(kernels.riemann_zeta(complex(f.s.real - x0)))
    if f.tag == ZETA_ZETA_GAMMA:
        return z_left * z_right
    return z_left * (f.a - 1.0) ** (x0 - f.s.real)


def _integrate_vertical_unchecked(f, x0, tol, cfg=DEFAULT_CONFIG,
                                  max_evaluations=DEFAULT_MAX_EVALUATIONS):
    # Core of integrate_vertical without the convergence-strip validation.
    # _line_extra_const must bound the non-Gamma factors at x0, which holds
    # for gamma_power at any real x0 but for zeta families only inside their
    # admissible strip -- callers shifting left of it pass gamma_power only.
    extra = _line_extra_const(f, x0)
    T = max(abs(f.s.imag) + 10.0, 15.0)
    while _pair_tail_bound(x0, f.s, T, extra) > 0.5 * tol:
        T += 2.0
        if T > 500.0:
            raise ToleranceUnreachable(
                f"tail bound will not reach {tol} at practical heights")
    em_min, em_per_im = cfg._term_args()
    tag = _KERNEL_TAG[f.tag]
    s, p = f.s, f.param
    kern = kernels.integrand

    def fn(z):
        return kern(tag, s, p, z, em_min, em_per_im, cfg.correction_order,
                    cfg.reflect_below)

    raw, err, n = _adaptive_segment(fn, complex(x0, -T), complex(x0, T),
                                    0.5 * tol * TWO_PI, max_evaluations)
    return QuadratureResult(raw / (2j * math.pi), err / TWO_PI,
                            _pair_tail_bound(x0, f.s, T, extra), n)


def integrate_vertical(f, line, cfg=DEFAULT_CONFIG,
                       max_evaluations=DEFAULT_MAX_EVALUATIONS):
    """(1/2*pi*i) integral over the full vertical line Re z = line.c.

    The line is truncated at the smallest height T (stepped by 2 from
    max(|Im s| + 10, 15)) whose analytic Gamma-pair tail bound is <= tol/2;
    the finite part is integrated adaptively to err_estimate <= tol/2.
    """
    line.validate_for(f)
    return _integrate_vertical_unchecked(f, line.c, line.tol, cfg,
                                         max_evaluations)


def integrate_rectangle(f, rect, tol=1e-9, cfg=DEFAULT_CONFIG,
                        max_evaluations=DEFAULT_MAX_EVALUATIONS,
                        pole_guard=POLE_GUARD):
    """Counterclockwise boundary integral, normalized by 1/(2*pi*i); equals the
    sum of residues strictly inside by the residue theorem."""
    c1, c2, c3, c4 = rect.corners()
    edges = ((c1, c2), (c2, c3), (c3, c4), (c4, c1))
    for a, b in edges:
        if _segment_pole_distance(f, a, b) <= pole_guard:
            raise PoleOnPath(
                f"rectangle edge [{a}, {b}] passes within {pole_guard} of a pole")
    em_min, em_per_im = cfg._term_args()
    tag = _KERNEL_TAG[f.tag]
    s, p = f.s, f.param
    kern = kernels.integrand

    def fn(z):
        return kern(tag, s, p, z, em_min, em_per_im, cfg.correction_order,
                    cfg.reflect_below)

    budget = max_evaluations
    value = 0j
    err = 0.0
    evals = 0
    for a, b in edges:
        raw, e, n = _adaptive_segment(fn, a, b, 0.25 * tol * TWO_PI, budget)
        value += raw
        err += e
        evals += n
        budget -= n
    return QuadratureResult(value / (2j * math.pi), err / TWO_PI, 0.0, evals)


def _axis_coefficients():
    # 1/(e^t - 1)^2 = t^{-2} - t^{-1} + 5/12 - sum_{k>=1} B_{2k} [(2k-1) t^{2k-2}
    #                 + t^{2k-1}] / (2k)! + 1/12-offset; derived from the
    #                 Bernoulli expansion of 1/(e^t - 1) and its derivative
    out = []
    fact = 2
    for k in range(1, 6):
        b2k = BERNOULLI_FRACTIONS[2 * k]
        out.append((float(b2k * (2 * k - 1) / fact), float(b2k / fact)))
        fact *= (2 * k + 1) * (2 * k + 2)
    return tuple(out)


_AXIS_SERIES = _axis_coefficients()


def integrate_real_improper(s, tol=1e-10, cfg=DEFAULT_CONFIG,
                            max_evaluations=DEFAULT_MAX_EVALUATIONS):
    """integral_0^inf t^{s-1} / (e^t - 1)^2 dt for Re(s) > 2.

    The algebraic t->0 endpoint is handled by integrating the first three
    expansion terms t^{-2} - t^{-1} + 5/12 analytically on (0, eps] and the
    (smooth, O(t)) remainder numerically; the far tail is cut where an
    exponential bound falls below tol.
    """
    s = complex(s)
    if s.real <= 2.0:
        raise DomainViolation(f"integrate_real_improper needs Re(s) > 2, got {s}")
    eps = 1e-3
    head = (eps ** (s - 2.0) / (s - 2.0) - eps ** (s - 1.0) / (s - 1.0)
            + (5.0 / 12.0) * eps ** s / s)

    def remainder(t):
        # 1/(e^t-1)^2 minus the three analytic terms, via the Bernoulli series
        acc = 1.0 / 12.0
        for k, (c_even, c_odd) in enumerate(_AXIS_SERIES, start=1):
            tp = t ** (2 * k - 2)
            acc -= c_even * tp + c_odd * tp * t
        return acc * t ** (s - 1.0)

    def middle(t):
        t = t.real
        em1 = math.expm1(t)
        return t ** (s - 1.0) / (em1 * em1)

    sig = s.real

    def tail_cut_bound(Tc):
        # integrand <= t^{sig-1} e^{-2t} / (1-e^{-Tc})^2 beyond Tc; integrate by
        # parts once for the polynomial factor
        d = 2.0 - max(sig - 1.0, 0.0) / Tc
        if d <= 0.5:
            return math.inf
        return Tc ** (sig - 1.0) * math.exp(-2.0 * Tc) / ((1.0 - math.exp(-Tc)) ** 2 * d)

    Tc = max(30.0, 2.0 * sig)
    while tail_cut_bound(Tc) > 0.25 * tol:
        Tc += 5.0
    v1, e1, n1 = _adaptive_segment(remainder, complex(0.0), complex(eps),
                                   0.25 * tol, max_evaluations)
    v2, e2, n2 = _adaptive_segment(middle, complex(eps), complex(1.0),
                                   0.25 * tol, max_evaluations - n1)
    v3, e3, n3 = _adaptive_segment(middle, complex(1.0), complex(Tc),
                                   0.25 * tol, max_evaluations - n1 - n2)
    return QuadratureResult(head + v1 + v2 + v3, e1 + e2 + e3,
                            tail_cut_bound(Tc), n1 + n2 + n3)
