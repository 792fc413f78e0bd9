"""Residual checks of the modular transformation laws and the rank identity."""

from __future__ import annotations

import cmath
import math

from ..errors import DomainError
from ..report import ScanReport
from .core import (
    PI,
    TWO_PI_I,
    _ctx,
    _point,
    appell,
    appell_log,
    mordell_h,
    mu,
    sqrt_minus_i_tau,
    theta,
    theta_log,
)

GRID_TAUS = (1j, 0.1 + 0.9j, -0.3 + 0.7j, 0.5j)
WHICH = ("theta", "mu", "h", "appell")


def theta_residual(z, tau, ctx=None) -> float:
    """theta(z; tau) against i (-i tau)^{-1/2} e^{-pi i z^2/tau} theta(z/tau; -1/tau)."""
    t = _point(tau).tau
    z = complex(z)
    lhs = theta(z, t, ctx)
    rhs = 1j / sqrt_minus_i_tau(t) * cmath.exp(-1j * PI * z * z / t) * theta(z / t, -1 / t, ctx)
    return abs(lhs - rhs)


def mu_residual(u, v, tau, ctx=None) -> float:
    """mu against its S-transform plus the Mordell correction h(u - v; tau) / 2i."""
    t = _point(tau).tau
    u, v = complex(u), complex(v)
    lhs = mu(u, v, t, ctx)
    rhs = -1 / sqrt_minus_i_tau(t) * cmath.exp(1j * PI * (u - v) ** 2 / t) * mu(u / t, v / t, -1 / t, ctx)
    rhs += mordell_h(u - v, t, ctx) / 2j
    return abs(lhs - rhs)


def h_residual(z, tau, ctx=None) -> float:
    """h(z; tau) against (-i tau)^{-1/2} e^{pi i z^2/tau} h(z/tau; -1/tau)."""
    t = _point(tau).tau
    z = complex(z)
    lhs = mordell_h(z, t, ctx)
    rhs = cmath.exp(1j * PI * z * z / t) / sqrt_minus_i_tau(t) * mordell_h(z / t, -1 / t, ctx)
    return abs(lhs - rhs)


def appell_residual(level, u, v, tau, ctx=None) -> float:
    """A_l(u, v; tau) against sum_k e^{2 pi i u k} theta(v_k; l tau) mu(l u, v_k; l tau), v_k = v + k tau + (l-1)/2."""
    t = _point(tau).tau
    u, v = complex(u), complex(v)
    lhs = appell(level, u, v, t, ctx)
    rhs = 0j
    for k in range(level):
        vk = v + k * t + (level - 1) / 2
        rhs += cmath.exp(TWO_PI_I * u * k) * theta(vk, level * t, ctx) * mu(level * u, vk, level * t, ctx)
    return abs(lhs - rhs)


def transform_residual(which: str, *, tau, z=None, u=None, v=None, level: int = 1, ctx=None) -> float:
    """|LHS - RHS| of the named identity at one point.

    ``which`` is ``theta`` or ``h`` (needs ``z``), ``mu`` (needs ``u``, ``v``)
    or ``appell`` (needs ``u``, ``v`` and ``level``).
    """
    if which == "theta":
        return theta_residual(z, tau, ctx)
    if which == "h":
        return h_residual(z, tau, ctx)
    if which == "mu":
        return mu_residual(u, v, tau, ctx)
    if which == "appell":
        return appell_residual(level, u, v, tau, ctx)
    raise DomainError(f"unknown identity {which!r}; expected one of {WHICH}")


_Z_POINTS = (0.3, 0.2 + 0.1j, -0.15 + 0.05j, 0.41, 0.05 - 0.2j)
_UV_POINTS = ((0.17, 0.31), (0.23 + 0.05j, -0.12), (-0.31, 0.08 + 0.1j), (0.11 - 0.04j, 0.27 + 0.03j), (0.37, -0.21))


def transform_grid(which: str, level: int = 1) -> list:
    """Deterministic 20-point grid (four taus x five points) for an identity."""
    if which not in WHICH:
        raise DomainError(f"unknown identity {which!r}; expected one of {WHICH}")
    grid = []
    for tau in GRID_TAUS:
        if which in ("theta", "h"):
            grid.extend({"tau": tau, "z": z} for z in _Z_POINTS)
        else:
            for u, v in _UV_POINTS:
                point = {"tau": tau, "u": u, "v": v}
                if which == "appell":
                    point["level"] = level
                grid.append(point)
    return grid


def residual_scan(which: str, level: int = 1, tol: float = 1e-9, ctx=None, mapper=map) -> ScanReport:
    """Evaluate the residual of ``which`` on its grid; pass when every residual < tol."""
    grid = transform_grid(which, level)
    name = which if which != "appell" else f"appell{level}"
    report = ScanReport(f"transform_{name}", rule="lt", params={"which": which, "level": level, "tol": tol})
    values = list(mapper(lambda p: transform_residual(which, ctx=ctx, **p), grid))
    for point, res in zip(grid, values):
        report.add(point, res, tol)
    return report


# ---------------------------------------------------------------------------
# A_1 on (z, tau; 2 tau) and the rank identity


def appell1_transformed(u, v, tau, ctx=None, rel: float = 1e-17) -> complex:
    """A_1(u, v; tau) through the S-transformation, for small Im tau.

    A_1(u,v;tau) = tau^{-1} e^{pi i (u^2 - 2uv)/tau} A_1(u/tau, v/tau; -1/tau)
                 + e^{-pi i v^2/tau} theta(v/tau; -1/tau) h(u - v; tau) / (2 sqrt(-i tau)),
    which follows from the theta and mu transformation laws. Exponential
    prefactors are folded into the summands so that tiny results do not
    underflow; summation uses a relative cut-off, and h, which only enters
    through a small prefactor, is computed to relative accuracy.
    """
    ctx = _ctx(ctx)
    t = _point(tau).tau
    u, v = complex(u), complex(v)
    s = -1 / t
    log1 = -cmath.log(t) + 1j * PI * (u * u - 2 * u * v) / t
    first = appell_log(1, u / t, v / t, s, ctx, log_prefactor=log1, rel=rel)
    log2 = -cmath.log(2 * sqrt_minus_i_tau(t)) - 1j * PI * v * v / t
    second = theta_log(v / t, s, ctx, log_prefactor=log2, rel=rel) * mordell_h(u - v, t, ctx, rel=1e-12)
    return first + second


def appell1_on_double(z, tau, ctx=None, method: str = "auto") -> complex:
    """A_1(z, tau; 2 tau); ``method`` is ``direct``, ``transformed`` or ``auto``."""
    t = _point(tau).tau
    if method == "auto":
        method = "direct" if t.imag >= 0.25 else "transformed"
    if method == "direct":
        return appell(1, z, t, 2 * t, ctx)
    if method == "transformed":
        return appell1_transformed(z, t, 2 * t, ctx)
    raise DomainError(f"unknown method {method!r}")


def qpoch_ratio(q: complex, tol: float) -> complex:
    """(-q; q)_inf / (q; q)_inf as a truncated product with tail below tol."""
    q = complex(q)
    out = 1 + 0j
    n = 1
    r = abs(q)
    while True:
        qn = q**n
        out *= (1 + qn) / (1 - qn)
        # remaining factors change log|out| by at most ~2.1 r^{n+1}/(1-r)^2
        if 2.1 * r ** (n + 1) / (1 - r) ** 2 < tol:
            return out
        n += 1


def rank_eval_appell(z: float, tau, ctx=None, method: str = "auto") -> complex:
    """R2(zeta, q) through A_1 with zeta = e^{2 pi i z}, zeta^{1/2} = e^{pi i z}.

    R2 = (-q;q)_inf/(q;q)_inf * (1 - zeta)/(1 + zeta)
         * (zeta^{1/2} A_1(z, tau; 2 tau) - zeta^{-1/2} A_1(-z, tau; 2 tau)).
    """
    if not 0 < z < 0.5:
        raise DomainError(f"z must lie in (0, 1/2), got {z}")
    ctx = _ctx(ctx)
    p = _point(tau)
    zeta = cmath.exp(TWO_PI_I * z)
    half = cmath.exp(1j * PI * z)
    bracket = half * appell1_on_double(z, p, ctx, method) - appell1_on_double(-z, p, ctx, method) / half
    return qpoch_ratio(p.q, ctx.tol) * (1 - zeta) / (1 + zeta) * bracket


def partial_fraction_residual(zeta: complex, w: complex) -> float:
    """zeta/(1 - zeta w) - zeta^{-1}/(1 - zeta^{-1} w) against (zeta - zeta^{-1})/((1 - zeta w)(1 - zeta^{-1} w))."""
    zi = 1 / zeta
    lhs = zeta / (1 - zeta * w) - zi / (1 - zi * w)
    rhs = (zeta - zi) / ((1 - zeta * w) * (1 - zi * w))
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# Mordell-term bound


def mordell_term(z: float, eps: complex, sign: int = 1, ctx=None) -> complex:
    """(i/(4 tau)) h((sign z - tau)/(2 tau); -1/(2 tau)) with tau = i eps / (2 pi)."""
    t = 1j * complex(eps) / (2 * PI)
    return 1j / (4 * t) * mordell_h((sign * z - t) / (2 * t), -1 / (2 * t), ctx)


def mordell_bound_real_form(z: float, eps: complex) -> float:
    """|sec(pi z)| |exp(-pi^2 z^2/eps + eps/4)| sqrt(pi) / (2 |sqrt(eps)|).

    Valid for real eps; for complex eps in a cone it can be exceeded.
    """
    eps = complex(eps)
    sec = 1 / abs(math.cos(PI * z))
    return sec * abs(cmath.exp(-PI * PI * z * z / eps + eps / 4)) * math.sqrt(PI) / (2 * abs(cmath.sqrt(eps)))


def mordell_bound(z: float, eps: complex) -> float:
    """Upper bound for |mordell_term(z, eps, +-1)| on the cone.

    With r = Re(1/eps), shifting the contour by i z and bounding
    |1/cosh(pi(w - i z))| <= sec(pi z) leaves a Gaussian integral:
    sec(pi z) e^{-pi^2 z^2 r} e^{1/(4 r)} sqrt(1/(pi r)) pi / (2 |eps|).
    For real eps this equals :func:`mordell_bound_real_form`.
    """
    eps = complex(eps)
    r = (1 / eps).real
    sec = 1 / abs(math.cos(PI * z))
    return sec * math.exp(-PI * PI * z * z * r + 1 / (4 * r)) * math.sqrt(1 / (PI * r)) * PI / (2 * abs(eps))
