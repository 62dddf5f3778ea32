# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled scalar kernels; twin of ``_purepy`` (same API, same algorithms)."""
from libc.math cimport ceil, fabs, log, M_PI

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex clog(double complex)
    double complex csin(double complex)

from mbzeta._kernel_constants import EM_COEFFS as _PY_EM, STIRLING_COEFFS as _PY_ST

BACKEND_NAME = "compiled"

cdef double[10] _ST
cdef double[16] _EM
cdef int _i
for _i in range(10):
    _ST[_i] = _PY_ST[_i]
for _i in range(16):
    _EM[_i] = _PY_EM[_i]

cdef double _LOG_PI = log(M_PI)
cdef double _HALF_LOG_TWO_PI = 0.5 * log(2.0 * M_PI)
cdef double _LOG_TWO_PI = log(2.0 * M_PI)
cdef double _ASYM_RADIUS = 16.0


cdef inline double complex _loggamma_asym(double complex z) nogil:
    cdef double complex rz2 = 1.0 / (z * z)
    cdef double complex acc = _ST[9]
    cdef int k
    for k in range(8, -1, -1):
        acc = acc * rz2 + _ST[k]
    return (z - 0.5) * clog(z) - z + _HALF_LOG_TWO_PI + acc / z


cdef inline double complex _logsinpi(double complex z) nogil:
    return (-log(2.0) + 0.5j * M_PI) - 1j * M_PI * z + clog(1.0 - cexp(2j * M_PI * z))


cpdef double complex loggamma(double complex z):
    """Principal-lift log Gamma (real on the positive real axis)."""
    cdef double complex shift = 0
    cdef double complex r
    if z.imag < 0.0:
        return loggamma(z.conjugate()).conjugate()
    if z.real < 0.5:
        r = _LOG_PI - _logsinpi(z) - loggamma(1.0 - z)
        if z.imag == 0.0 and z.real > 0.0:
            # Gamma > 0 on (0, 1/2): kill the reflection's rounding residue
            r = r.real
        return r
    while abs(z) < _ASYM_RADIUS:
        shift = shift + clog(z)
        z = z + 1.0
    return _loggamma_asym(z) - shift


cpdef double complex gamma(double complex z):
    if z.real < 0.5:
        return M_PI / (csin(M_PI * z) * cexp(loggamma(1.0 - z)))
    return cexp(loggamma(z))


cpdef double complex zeta_em(double complex s, double a, long n_terms, long order):
    """sum_{n=0}^{n_terms-1} (n+a)^{-s} plus the Euler-Maclaurin tail at n_terms+a."""
    cdef double complex acc = 0
    cdef long n, k
    for n in range(n_terms):
        acc = acc + cexp(-s * log(n + a))
    cdef double x = n_terms + a
    cdef double complex xs = cexp(-s * log(x))
    acc = acc + xs * x / (s - 1.0) + 0.5 * xs
    cdef double complex poch = s
    cdef double complex pw = xs / x
    for k in range(1, order // 2 + 1):
        acc = acc + _EM[k - 1] * poch * pw
        poch = poch * (s + (2 * k - 1)) * (s + 2 * k)
        pw = pw / (x * x)
    return acc


cpdef double complex riemann_zeta(double complex s, long em_min=20,
                                  double em_per_im=2.0, long order=12,
                                  double reflect_below=0.5):
    if s == 0.0:
        return -0.5  # reflection path would hit the zeta pole
    cdef long n
    cdef double complex w, pref
    if s.real >= reflect_below:
        n = <long> ceil(em_per_im * fabs(s.imag))
        if n < em_min:
            n = em_min
        return zeta_em(s, 1.0, n - 1, order)
    w = 1.0 - s
    pref = 2.0 * cexp((s - 1.0) * _LOG_TWO_PI) * csin(0.5 * M_PI * s)
    return pref * cexp(loggamma(w)) * riemann_zeta(w, em_min, em_per_im, order,
                                                   reflect_below)


cpdef double complex hurwitz_zeta(double complex s, double a, long em_min=20,
                                  double em_per_im=2.0, long order=12):
    cdef long n = <long> ceil(em_per_im * fabs(s.imag))
    if n < em_min:
        n = em_min
    return zeta_em(s, a, n, order)


TAG_GAMMA_POWER = 0
TAG_ZETA_ZETA_GAMMA = 1
TAG_ZETA_GAMMA_POWER = 2


cpdef double complex integrand(long tag, double complex s, double p,
                               double complex z, long em_min=20,
                               double em_per_im=2.0, long order=12,
                               double reflect_below=0.5):
    """Meromorphic line integrands; see the pure-Python twin for the catalog."""
    cdef double complex expo = loggamma(z) + loggamma(s - z)
    if tag == 0:
        return cexp(expo - z * log(p))
    if tag == 1:
        return (riemann_zeta(z, em_min, em_per_im, order, reflect_below)
                * riemann_zeta(s - z, em_min, em_per_im, order, reflect_below)
                * cexp(expo))
    if tag == 2:
        return (riemann_zeta(z, em_min, em_per_im, order, reflect_below)
                * cexp(expo + (z - s) * log(p - 1.0)))
    raise ValueError(f"unknown integrand tag {tag}")
