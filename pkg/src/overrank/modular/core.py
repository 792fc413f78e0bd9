"""Double-precision evaluation of theta, mu, the Mordell integral and Appell sums.

Conventions: q = e^{2 pi i tau}; theta is the odd Jacobi form with
theta(z; tau) = sum_{n in 1/2 + Z} e^{pi i n^2 tau + 2 pi i n (z + 1/2)};
square roots of -i tau use the principal branch (Re > 0 on the upper half-plane).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ..errors import ConvergenceError, DomainError, PoleError, QuadratureError
from .quadrature import integrate

PI = math.pi
TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class UpperHalfPoint:
    """A point tau of the upper half-plane."""

    tau: complex

    def __post_init__(self):
        tau = complex(self.tau)
        if not tau.imag > 0:
            raise DomainError(f"tau must lie in the upper half-plane, got {tau}")
        object.__setattr__(self, "tau", tau)

    @property
    def q(self) -> complex:
        return cmath.exp(TWO_PI_I * self.tau)

    @property
    def q0(self) -> complex:
        return cmath.exp(-1j * PI / self.tau)

    def s_image(self) -> "UpperHalfPoint":
        """-1/tau."""
        return UpperHalfPoint(-1 / self.tau)

    @classmethod
    def from_nome(cls, q: complex) -> "UpperHalfPoint":
        """The tau with e^{2 pi i tau} = q (principal logarithm), 0 < |q| < 1."""
        q = complex(q)
        if not 0 < abs(q) < 1:
            raise DomainError(f"nome must satisfy 0 < |q| < 1, got {q}")
        return cls(cmath.log(q) / TWO_PI_I)


@dataclass(frozen=True)
class EvalContext:
    tol: float = 1e-13
    max_terms: int = 4000
    pole_guard: float = 1e-8

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError("tol must be positive")
        if self.max_terms < 8:
            raise DomainError("max_terms must be at least 8")
        if not self.pole_guard > 0:
            raise DomainError("pole_guard must be positive")


DEFAULT_CONTEXT = EvalContext()


@dataclass(frozen=True)
class ConeSpec:
    """eps = x + iy inside the cone |y| <= delta x, x > 0; tau = i eps / (2 pi)."""

    delta: float
    eps: complex

    def __post_init__(self):
        eps = complex(self.eps)
        if not self.delta > 0:
            raise DomainError("cone aperture must be positive")
        if not eps.real > 0:
            raise DomainError(f"Re eps must be positive, got {eps}")
        if abs(eps.imag) > self.delta * eps.real * (1 + 1e-12):
            raise DomainError(f"eps={eps} lies outside the cone |Im eps| <= {self.delta} Re eps")
        object.__setattr__(self, "eps", eps)

    @property
    def tau(self) -> UpperHalfPoint:
        return UpperHalfPoint(1j * self.eps / (2 * PI))


def _point(tau) -> UpperHalfPoint:
    return tau if isinstance(tau, UpperHalfPoint) else UpperHalfPoint(tau)


def _ctx(ctx) -> EvalContext:
    return DEFAULT_CONTEXT if ctx is None else ctx


def sqrt_minus_i_tau(tau: complex) -> complex:
    """Principal square root of -i tau."""
    return cmath.sqrt(-1j * complex(tau))


def bilateral_sum(term, center: int, ctx: EvalContext, rel: float = None, what: str = "series") -> complex:
    """Sum ``term(n)`` over all integers with a symmetric window around ``center``.

    The window [center-M, center+M] grows until both edge terms stay below
    the threshold for two consecutive M: tol/4 in absolute mode, or
    ``rel`` times the largest term seen in relative mode. Centring on the
    vertex of the Gaussian envelope keeps the edge terms monotone.
    """
    total = term(center)
    peak = abs(total)
    quiet = 0
    for m in range(1, ctx.max_terms + 1):
        hi = term(center + m)
        lo = term(center - m)
        total += hi + lo
        edge = max(abs(hi), abs(lo))
        peak = max(peak, edge)
        limit = ctx.tol / 4 if rel is None else rel * peak
        if edge <= limit:
            quiet += 1
            if quiet >= 2:
                return total
        else:
            quiet = 0
    raise ConvergenceError(f"{what}: no convergence within {ctx.max_terms} terms")


def _lerch_quotient(log_num: complex, w_exp: complex, guard: float, n: int, what: str) -> complex:
    """e^{log_num} / (1 - e^{w_exp}) evaluated without overflow."""
    if w_exp.real > 0:
        # 1/(1 - e^W) = -e^{-W}/(1 - e^{-W})
        den = 1 - cmath.exp(-w_exp)
        if abs(den) * math.exp(min(w_exp.real, 700.0)) < guard:
            raise PoleError(f"{what}: denominator vanishes at n={n}", index=n)
        return -cmath.exp(log_num - w_exp) / den
    den = 1 - cmath.exp(w_exp)
    if abs(den) < guard:
        raise PoleError(f"{what}: denominator vanishes at n={n}", index=n)
    re = log_num.real
    if re < -745:
        return 0j
    return cmath.exp(log_num) / den


# ---------------------------------------------------------------------------
# theta


def theta_log(z: complex, tau, ctx=None, log_prefactor: complex = 0j, rel: float = None) -> complex:
    """e^{log_prefactor} * theta(z; tau), the prefactor folded into every term."""
    ctx = _ctx(ctx)
    t = _point(tau).tau
    z = complex(z)
    center = round(-z.imag / t.imag - 0.5)

    def term(k):
        n = k + 0.5
        e = log_prefactor + 1j * PI * n * n * t + TWO_PI_I * n * (z + 0.5)
        return 0j if e.real < -745 else cmath.exp(e)

    return bilateral_sum(term, center, ctx, rel, "theta")


def theta(z: complex, tau, ctx=None) -> complex:
    """Jacobi theta(z; tau), summed over n in 1/2 + Z.

    Pairing n with -n gives -2 sum_{m >= 0} (-1)^m e^{pi i n^2 tau} sin(2 pi n z),
    n = m + 1/2, which is odd in z term by term. Terms are added until two
    consecutive ones are below tol/8 and no longer growing.
    """
    ctx = _ctx(ctx)
    t = _point(tau).tau
    z = complex(z)
    total = 0j
    quiet = 0
    prev = math.inf
    for m in range(ctx.max_terms):
        n = m + 0.5
        e = 1j * PI * n * n * t
        term = 0j if e.real < -745 else cmath.exp(e) * cmath.sin(2 * PI * n * z)
        total += term if m % 2 == 0 else -term
        size = abs(term)
        if size <= ctx.tol / 8 and size <= prev:
            quiet += 1
            if quiet >= 2:
                return -2 * total
        else:
            quiet = 0
        prev = size
    raise ConvergenceError(f"theta: no convergence within {ctx.max_terms} terms")


# ---------------------------------------------------------------------------
# mu


def mu(u: complex, v: complex, tau, ctx=None) -> complex:
    """Zwegers' mu(u, v; tau) straight from its Lerch-sum definition."""
    ctx = _ctx(ctx)
    t = _point(tau).tau
    u, v = complex(u), complex(v)
    th = theta(v, t, ctx)
    if abs(th) < ctx.pole_guard:
        raise PoleError(f"mu: theta(v) vanishes at v={v}", index=None)
    center = round(-v.imag / t.imag - 0.5)

    def term(n):
        sign = -1 if n % 2 else 1
        num = 1j * PI * (n * n + n) * t + TWO_PI_I * n * v
        return sign * _lerch_quotient(num, TWO_PI_I * (n * t + u), ctx.pole_guard, n, "mu")

    s = bilateral_sum(term, center, ctx, None, "mu")
    return cmath.exp(1j * PI * u) * s / th


# ---------------------------------------------------------------------------
# Appell functions of level l


def appell_log(level: int, u: complex, v: complex, tau, ctx=None, log_prefactor: complex = 0j, rel: float = None) -> complex:
    """e^{log_prefactor} * A_l(u, v; tau), the prefactor folded into every term."""
    if level < 1:
        raise DomainError("level must be >= 1")
    ctx = _ctx(ctx)
    t = _point(tau).tau
    u, v = complex(u), complex(v)
    base = log_prefactor + 1j * PI * level * u
    center = round(-v.imag / (level * t.imag) - 0.5)

    def term(n):
        num = base + 1j * PI * level * n * (n + 1) * t + TWO_PI_I * n * v + 1j * PI * level * n
        return _lerch_quotient(num, TWO_PI_I * (u + n * t), ctx.pole_guard, n, f"A_{level}")

    return bilateral_sum(term, center, ctx, rel, f"A_{level}")


def appell(level: int, u: complex, v: complex, tau, ctx=None) -> complex:
    """A_l(u, v; tau) = e^{pi i l u} sum_n (-1)^{ln} q^{l n(n+1)/2} e^{2 pi i n v} / (1 - e^{2 pi i u} q^n)."""
    return appell_log(level, u, v, tau, ctx)


# ---------------------------------------------------------------------------
# Mordell integral


def mordell_window(z: complex, tau: complex, tol: float) -> float:
    """X with the integrand tail beyond |x| = X below tol/8.

    |integrand| <= 2 exp(g(|x|)), g(x) = -pi Im(tau) x^2 + 2 pi |Re z| x - pi x,
    and for g'(X) < 0 the tail integral is at most 2 e^{g(X)} / |g'(X)|.
    """
    t = tau.imag
    b = 2 * PI * abs(z.real) - PI
    x = max(1.0, -b / (2 * PI * t) + 1.0)
    while True:
        g = -PI * t * x * x + b * x
        slope = -2 * PI * t * x + b
        if slope < 0 and math.log(4.0) + g - math.log(-slope) < math.log(tol / 8):
            return x
        x *= 1.25


def mordell_h_with_error(z: complex, tau, ctx=None, rel: float = 0.0) -> tuple:
    """(h(z; tau), quadrature error estimate).

    The target accuracy is ctx.tol, or rel times the integral of the
    integrand's modulus when that is larger.
    """
    ctx = _ctx(ctx)
    t = _point(tau).tau
    z = complex(z)
    big_x = mordell_window(z, t, ctx.tol)
    a = 1j * PI * t
    b = -2 * PI * z

    def f(x):
        ax = np.abs(x)
        return 2 * np.exp(a * x * x + b * x - PI * ax) / (1 + np.exp(-2 * PI * ax))

    freq = abs(t.real) * 2 * PI * big_x + 2 * PI * abs(z.imag) + 1
    width = min(1.0, 2 * PI / freq)
    value, err, target = integrate(f, -big_x, big_x, ctx.tol * 0.5, panel_width=width, rel=rel * 0.5)
    if err > 2 * target:
        raise QuadratureError(f"Mordell integral error estimate {err:.3g} above tol", estimate=err)
    return value, err


def mordell_h(z: complex, tau, ctx=None, rel: float = 0.0) -> complex:
    """h(z; tau) = int_R e^{pi i tau x^2 - 2 pi z x} / cosh(pi x) dx."""
    return mordell_h_with_error(z, tau, ctx, rel)[0]
