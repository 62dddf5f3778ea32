"""Pole enumeration and closed-form residues for the three integrand families,
a small-circle numerical residue oracle, and the asymptotic tail study that
witnesses the divergence of the infinite residue series.

Pole structure on the real axis:
    gamma_power       simple poles at 0, -1, -2, ... (Gamma factor)
    zeta families     zeta pole at 1, Gamma pole at 0, and combined poles at
                      negative odd integers; negative even integers are
                      regular because the trivial zeta zeros cancel them.
"""
import cmath
import math
from dataclasses import dataclass

from ._backend import kernels
from .contour import GAMMA_POWER, ZETA_GAMMA_POWER, ZETA_ZETA_GAMMA
from .errors import (DomainViolation, NotAPole, OverflowRegime, PoleOnBoundary,
                     PoleOnCircle, ToleranceUnreachable)
from .specfun import POLE_GUARD
from .zeta import DEFAULT_CONFIG, zeta_negative_integer

__all__ = [
    "ZETA_POLE", "GAMMA_POLE", "ODD_COMBINED", "PoleLocation", "ResidueTerm",
    "TailStudy", "classify_pole", "enumerate_poles", "residue_at",
    "numerical_residue", "asymptotic_tail_terms",
]

ZETA_POLE = "ZetaPole"
GAMMA_POLE = "GammaPole"
ODD_COMBINED = "OddCombined"


@dataclass(frozen=True)
class PoleLocation:
    position: int
    kind: str


@dataclass(frozen=True)
class ResidueTerm:
    location: PoleLocation
    value: complex


@dataclass(frozen=True)
class TailStudy:
    """Terms t_m of the infinite residue series for m = 0..M.

    min_index: index of the smallest |t_m|; growth_onset: smallest m0 with
    |t_m| strictly increasing for all m >= m0 in range. The series diverges
    (Gamma growth beats the (2pi)^{2m} decay of zeta at negative odd
    integers), which is exactly what this table documents.
    """
    s: complex
    terms: tuple
    min_index: int
    growth_onset: int


def classify_pole(f, position):
    """PoleLocation for an integer position, or NotAPole."""
    if position != int(position) or not f.is_pole(position):
        raise NotAPole(f"z = {position} is not a pole of {f.tag}")
    n = int(position)
    if f.tag == GAMMA_POWER:
        kind = GAMMA_POLE
    elif n == 1:
        kind = ZETA_POLE
    elif n == 0:
        kind = GAMMA_POLE
    else:
        kind = ODD_COMBINED
    return PoleLocation(n, kind)


def enumerate_poles(f, rect):
    """Poles strictly inside the rectangle, ascending by position."""
    right, left = rect.c, rect.left
    for edge in (right, left):
        n = round(edge)
        if f.is_pole(n) and abs(edge - n) <= POLE_GUARD:
            raise PoleOnBoundary(f"pole at {n} lies on the rectangle edge {edge}")
    if rect.T <= POLE_GUARD:
        raise PoleOnBoundary("rectangle height too small to clear real-axis poles")
    out = []
    n = math.ceil(left + POLE_GUARD)
    top = min(1, math.floor(right - POLE_GUARD))
    while n <= top:
        if f.is_pole(n):
            out.append(classify_pole(f, n))
        n += 1
    return out


def _gamma_value(w):
    if w.real > 170.0:
        raise OverflowRegime(f"Gamma({w}) overflows binary64")
    return cmath.exp(kernels.loggamma(w))


def residue_at(f, p, cfg=DEFAULT_CONFIG):
    """Closed-form residue of the family integrand at the pole p.

    p may be a PoleLocation or a bare integer position.
    """
    if not isinstance(p, PoleLocation):
        p = classify_pole(f, p)
    elif not f.is_pole(p.position) or classify_pole(f, p.position).kind != p.kind:
        raise NotAPole(f"{p} is not a pole of {f.tag}")
    s = f.s
    n = p.position
    em_min, em_per_im = cfg._term_args()

    def zeta(w):
        return kernels.riemann_zeta(complex(w), em_min, em_per_im,
                                    cfg.correction_order, cfg.reflect_below)

    if f.tag == GAMMA_POWER:
        m = -n
        value = (((-1) ** m) / math.factorial(m)) * _gamma_value(s + m) * f.u ** m
        return ResidueTerm(p, value)
    am1 = (f.a - 1.0) if f.tag == ZETA_GAMMA_POWER else None
    if n == 1:
        value = _gamma_value(s - 1.0)
        value *= zeta(s - 1.0) if f.tag == ZETA_ZETA_GAMMA else am1 ** (1.0 - s)
    elif n == 0:
        value = -0.5 * _gamma_value(s)
        value *= zeta(s) if f.tag == ZETA_ZETA_GAMMA else am1 ** (-s)
    else:
        m = (-n - 1) // 2
        value = (-float(zeta_negative_integer(2 * m + 1)) * _gamma_value(s + 2 * m + 1)
                 / math.factorial(2 * m + 1))
        value *= (zeta(s + 2 * m + 1) if f.tag == ZETA_ZETA_GAMMA
                  else am1 ** (-s - 2 * m - 1))
    return ResidueTerm(p, value)


def numerical_residue(f, z0, radius=0.3, tol=1e-10, cfg=DEFAULT_CONFIG,
                      pole_guard=POLE_GUARD):
    """(1/2*pi*i) integral over the counterclockwise circle |z - z0| = radius.

    Independent oracle for residue_at: trapezoid sums on the circle converge
    geometrically for analytic integrands, so the point count doubles until
    two successive levels agree within tol. Equals the residue when z0 is the
    only enclosed pole, and 0 over regular points.
    """
    z0 = complex(z0)
    if radius <= 0.0:
        raise DomainViolation("radius must be positive")
    enclosed = []
    for n in range(math.floor(z0.real - radius) - 1, math.ceil(z0.real + radius) + 2):
        if not f.is_pole(n):
            continue
        d = abs(z0 - n)
        if abs(d - radius) <= pole_guard:
            raise PoleOnCircle(f"pole at {n} within {pole_guard} of the circle")
        if d < radius:
            enclosed.append(n)
    # the disk may contain at most the candidate pole at/near z0 itself
    if len(enclosed) > 1:
        raise PoleOnCircle(f"disk around {z0} encloses multiple poles {enclosed}")
    em_min, em_per_im = cfg._term_args()
    tag_map = {GAMMA_POWER: 0, ZETA_ZETA_GAMMA: 1, ZETA_GAMMA_POWER: 2}
    tag, s, prm = tag_map[f.tag], f.s, f.param
    kern = kernels.integrand
    n_pts = 16
    prev = None
    evals = 0
    while n_pts <= 16384:
        acc = 0j
        for j in range(n_pts):
            w = cmath.exp(2j * math.pi * j / n_pts)
            acc += kern(tag, s, prm, z0 + radius * w, em_min, em_per_im,
                        cfg.correction_order, cfg.reflect_below) * radius * w
        evals += n_pts
        cur = acc / n_pts
        if prev is not None and abs(cur - prev) < tol:
            return cur
        prev = cur
        n_pts *= 2
    raise ToleranceUnreachable(
        f"circle quadrature did not stabilize to {tol}", partial_value=prev,
        evaluations=evals)


def asymptotic_tail_terms(s, M=20, cfg=DEFAULT_CONFIG):
    """Terms t_m = zeta(-2m-1) zeta(s+2m+1) Gamma(s+2m+1) / (2m+1)!, m = 0..M.

    |t_m| eventually grows without bound; the study reports where the minimum
    sits and where monotone growth sets in.
    """
    s = complex(s)
    if s.real <= 2.0:
        raise DomainViolation(f"tail study needs Re(s) > 2, got {s}")
    if not 0 <= M <= 30:
        raise DomainViolation(f"M must be within 0..30, got {M}")
    if s.real + 2 * M + 1 > 170.0:
        raise OverflowRegime(f"Gamma(s + {2 * M + 1}) overflows binary64")
    em_min, em_per_im = cfg._term_args()
    terms = []
    for m in range(M + 1):
        w = s + (2 * m + 1)
        t = (float(zeta_negative_integer(2 * m + 1))
             * kernels.riemann_zeta(w, em_min, em_per_im, cfg.correction_order,
                                    cfg.reflect_below)
             * cmath.exp(kernels.loggamma(w)) / math.factorial(2 * m + 1))
        terms.append(t)
    mags = [abs(t) for t in terms]
    min_index = mags.index(min(mags))
    growth_onset = M
    for m0 in range(M, -1, -1):
        if all(mags[i + 1] > mags[i] for i in range(m0, M)):
            growth_onset = m0
    return TailStudy(s, tuple(terms), min_index, growth_onset)
