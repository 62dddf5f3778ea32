"""Riemann and Hurwitz zeta on complex arguments, exact zeta values at
negative integers, and an independent truncated double-sum oracle.

Both zeta functions run on one Euler-Maclaurin engine: direct Dirichlet terms
plus an EM tail with Bernoulli corrections; below the critical line the
Riemann function switches to the functional equation. The double-sum oracle
never calls riemann_zeta - it exists to cross-check it.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

from ._backend import kernels
from ._kernel_constants import BERNOULLI_FRACTIONS, BERNOULLI_MAX_INDEX, EM_COEFFS
from .errors import DomainViolation, IndexBeyondTable, OverflowRegime, PoleProximity
from .specfun import POLE_GUARD

__all__ = [
    "ZetaEvalConfig", "DEFAULT_CONFIG", "riemann_zeta", "hurwitz_zeta",
    "zeta_negative_integer", "double_sum_oracle",
]

# validity window of the EM/reflection evaluation at binary64: beyond these
# heights the reflection prefactors overflow / term counts explode
_IM_MAX_DIRECT = 1.0e5
_IM_MAX_REFLECT = 400.0


@dataclass(frozen=True)
class ZetaEvalConfig:
    """Evaluation knobs.

    em_terms: directly summed Dirichlet terms; None means the adaptive
        default max(20, ceil(2|Im s|)).
    correction_order: number of Euler-Maclaurin Bernoulli corrections, even.
    reflect_below: switch to the functional equation for Re(s) below this.
    """
    em_terms: int | None = None
    correction_order: int = 12
    reflect_below: float = 0.5

    def __post_init__(self):
        if self.em_terms is not None and self.em_terms < 1:
            raise DomainViolation("em_terms must be >= 1")
        if self.correction_order % 2 or not (
                0 < self.correction_order <= 2 * len(EM_COEFFS)):
            raise DomainViolation(
                f"correction_order must be even and <= {2 * len(EM_COEFFS)}")
        if self.reflect_below > 0.5:
            raise DomainViolation("reflect_below must not exceed 1/2")

    def _term_args(self):
        # kernel encodes "max(em_min, ceil(em_per_im * |Im s|))"
        if self.em_terms is None:
            return 20, 2.0
        return self.em_terms, 0.0


DEFAULT_CONFIG = ZetaEvalConfig()


def riemann_zeta(s, cfg=DEFAULT_CONFIG):
    s = complex(s)
    if abs(s - 1.0) <= POLE_GUARD:
        raise PoleProximity(s, complex(1.0))
    t = abs(s.imag)
    if t > _IM_MAX_DIRECT or (s.real < cfg.reflect_below and t > _IM_MAX_REFLECT):
        raise OverflowRegime(f"|Im s| = {t} outside the validity window")
    em_min, em_per_im = cfg._term_args()
    return kernels.riemann_zeta(s, em_min, em_per_im, cfg.correction_order,
                                cfg.reflect_below)


def hurwitz_zeta(s, a, cfg=DEFAULT_CONFIG):
    """sum_{n>=0} (n+a)^{-s}, convergent region only (Re s > 1, a >= 1)."""
    s = complex(s)
    if s.real <= 1.0:
        raise DomainViolation(f"hurwitz_zeta needs Re(s) > 1, got {s}")
    if not (a >= 1.0):
        raise DomainViolation(f"hurwitz_zeta needs a >= 1, got a = {a}")
    if abs(s.imag) > _IM_MAX_DIRECT:
        raise OverflowRegime(f"|Im s| = {abs(s.imag)} outside the validity window")
    em_min, em_per_im = cfg._term_args()
    return kernels.hurwitz_zeta(s, float(a), em_min, em_per_im,
                                cfg.correction_order)


def zeta_negative_integer(n):
    """Exact zeta(-n) = (-1)^n B_{n+1} / (n+1) as a Fraction."""
    if n < 1 or n != int(n):
        raise DomainViolation("n must be a positive integer")
    n = int(n)
    if n + 1 > BERNOULLI_MAX_INDEX:
        raise IndexBeyondTable(f"need B_{n + 1}, table ends at B_{BERNOULLI_MAX_INDEX}")
    return Fraction(-1) ** n * BERNOULLI_FRACTIONS[n + 1] / (n + 1)


def _em_tail(K, w, order):
    # sum_{n>=K} n^{-w} by Euler-Maclaurin, plus the magnitude of the first
    # omitted correction term as a remainder estimate
    x = float(K)
    xs = x ** (-w)
    out = xs * x / (w - 1.0) + 0.5 * xs
    poch = w
    pw = xs / x
    half = order // 2
    for k in range(1, half + 1):
        out += EM_COEFFS[k - 1] * poch * pw
        poch *= (w + (2 * k - 1)) * (w + 2 * k)
        pw /= x * x
    remainder = abs(EM_COEFFS[half] * poch * pw)
    return out, remainder


def double_sum_oracle(s, tol=1e-12):
    """sum over m,n >= 1 of (m+n)^{-s}, rearranged as sum_{k>=2} (k-1) k^{-s}.

    Truncated direct sum plus EM tails for the exponents s-1 and s; K grows
    until the EM remainder estimate is within tol. Independent of
    riemann_zeta by construction.
    """
    s = complex(s)
    if s.real <= 2.0:
        raise DomainViolation(f"double_sum_oracle needs Re(s) > 2, got {s}")
    K = max(20, math.ceil(2.0 * abs(s.imag)))
    order = 12
    while True:
        tail1, rem1 = _em_tail(K, s - 1.0, order)
        tail0, rem0 = _em_tail(K, s, order)
        if rem1 + rem0 <= 0.5 * tol or K > 1_000_000:
            break
        K *= 2
    acc = 0j
    for k in range(2, K):
        acc += (k - 1) * k ** (-s)
    return acc + tail1 - tail0
