"""Sphere-plate Casimir force from Lifshitz theory.

The finite-temperature force is a Matsubara sum

    F(a) = -(kT R / c^2) sum'_{n>=0} zeta_n^2
           int_1^inf dp p ln[(1 - g_te)(1 - g_tm)],

with zeta_n = 2 pi n k T / hbar, s = sqrt(eps(i zeta_n) - 1 + p^2) and
round-trip factors

    g_te = ((p - s)/(p + s))^2 exp(-2 p zeta_n a / c),
    g_tm = ((eps p - s)/(eps p + s))^2 exp(-2 p zeta_n a / c).

The primed n=0 term is evaluated in the ideal-conductor static limit
(`classical_term`); an alternative prescription that halves it is provided
as a switch.  The zero-temperature force replaces kT sum' by
(hbar / 2 pi) int dzeta.  The sphere enters through the proximity force
treatment, which is taken as exact for R >> a.

Conventions: geometry in meters, temperature in kelvin, every force is the
attraction magnitude in piconewtons.  All evaluations are pure functions of
immutable inputs; Matsubara terms are mutually independent but are summed
in ascending n for reproducibility.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np
from scipy.constants import Boltzmann as k_B, c, hbar
from scipy.special import zeta as _riemann_zeta

from ._quadrature import checked_quad
from .errors import ConvergenceError

ZETA3 = float(_riemann_zeta(3))
_N_TO_PN = 1e12


@dataclass(frozen=True)
class Geometry:
    """Sphere radius and surface-to-surface separation, in meters."""

    sphere_radius: float
    separation: float

    def __post_init__(self):
        if not self.sphere_radius > 0:
            raise ValueError("sphere_radius must be positive")
        if not self.separation > 0:
            raise ValueError("separation must be positive")
        if self.sphere_radius / self.separation < 100:
            warnings.warn(
                "sphere_radius / separation < 100: the proximity force "
                "treatment assumes R >> a", stacklevel=2)


@dataclass(frozen=True)
class ThermalState:
    """Equilibrium temperature in kelvin."""

    temperature: float

    def __post_init__(self):
        if self.temperature < 0:
            raise ValueError("temperature must be non-negative")


@dataclass(frozen=True)
class QuadratureSettings:
    """Accuracy knobs for the p-integral, the zeta-integral and the sum.

    zeta_min/zeta_max bound the log-spaced panels of the zero-temperature
    frequency integral; the region below zeta_min, where the integrand
    levels off, is added as the rectangle zeta_min * integrand(zeta_min).
    The Matsubara sum stops once `sum_consecutive` successive terms each
    fall below sum_rel_tol times the accumulated total (terms decay
    exponentially, but the stop rule must not trigger on rounding noise).
    """

    p_epsrel: float = 1e-9
    zeta_epsrel: float = 1e-9
    zeta_min: float = 1e11
    zeta_max: float = 1e19
    panels_per_decade: int = 4
    sum_rel_tol: float = 1e-10
    sum_consecutive: int = 3
    n_max: int = 1_000_000

    def tightened(self, factor: float = 10.0) -> "QuadratureSettings":
        """Strictly more demanding settings, for convergence checks."""
        return replace(self,
                       p_epsrel=self.p_epsrel / factor,
                       zeta_epsrel=self.zeta_epsrel / factor,
                       sum_rel_tol=self.sum_rel_tol / factor,
                       zeta_min=self.zeta_min / 10.0,
                       panels_per_decade=2 * self.panels_per_decade)


DEFAULT_SETTINGS = QuadratureSettings()


@dataclass(frozen=True)
class ForceResult:
    """Finite-temperature force [pN] and its decomposition.

    total = n0_term + sum_terms; n_terms_used counts the n >= 1 Matsubara
    terms actually summed.
    """

    total: float
    n0_term: float
    sum_terms: float
    n_terms_used: int
    prescription: str


def matsubara_frequency(n: int, t: ThermalState) -> float:
    """zeta_n = 2 pi n k T / hbar, in rad/s."""
    return 2.0 * math.pi * n * k_B * t.temperature / hbar


def ideal_force(g: Geometry) -> float:
    """Perfect-conductor sphere-plate force pi^3 hbar c R / (360 a^3), in pN."""
    return (math.pi**3 * hbar * c / 360.0
            * g.sphere_radius / g.separation**3 * _N_TO_PN)


def classical_term(g: Geometry, t: ThermalState,
                   prescription: str = "schwinger") -> float:
    """The n=0 (static) term of the Matsubara sum, in pN.

    "schwinger": ideal-conductor static limit, kT R zeta(3) / (4 a^2).
    "halved": half of that, the alternative prescription for nonideal
    metals.  Returns 0 at zero temperature.
    """
    if prescription not in ("schwinger", "halved"):
        raise ValueError(f"unknown prescription {prescription!r}")
    if t.temperature == 0:
        return 0.0
    f = k_B * t.temperature * g.sphere_radius * ZETA3 / (4.0 * g.separation**2)
    if prescription == "halved":
        f *= 0.5
    return f * _N_TO_PN


def round_trip_factors(p: float, eps_value: float, y: float) -> tuple[float, float]:
    """(g_te, g_tm) at momentum parameter p, with y = zeta a / c."""
    s = math.sqrt(eps_value - 1.0 + p * p)
    r_te = (p - s) / (p + s)
    r_tm = (eps_value * p - s) / (eps_value * p + s)
    damping = math.exp(-2.0 * y * p)
    return r_te * r_te * damping, r_tm * r_tm * damping


def _p_integral(eps_value: float, y: float, epsrel: float) -> float:
    """-int_1^inf dp p ln[(1 - g_te)(1 - g_tm)]  (positive).

    Substituting u = exp(-(p-1) y) maps the infinite range onto (0, 1] and
    absorbs the exponential damping: exp(-2 p y) = exp(-2y) u^2.  The
    integrand vanishes at u -> 0 and QUADPACK nodes stay interior, so the
    endpoint is never evaluated.
    """
    em1 = eps_value - 1.0
    q = math.exp(-2.0 * y)

    def integrand(u: float) -> float:
        p = 1.0 - math.log(u) / y
        s = math.sqrt(em1 + p * p)
        r_te = (p - s) / (p + s)
        r_tm = (eps_value * p - s) / (eps_value * p + s)
        damping = q * u * u
        g_te = r_te * r_te * damping
        g_tm = r_tm * r_tm * damping
        return p * (math.log1p(-g_te) + math.log1p(-g_tm)) / (u * y)

    return -checked_quad(integrand, 0.0, 1.0, epsrel=epsrel,
                         what="p-integral")


def matsubara_term(n: int, g: Geometry, t: ThermalState,
                   eps: Callable[[float], float],
                   p_epsrel: float = 1e-9) -> float:
    """Force contribution of the n-th Matsubara frequency (n >= 1), in pN.

    `eps` maps zeta [rad/s] to eps(i zeta) and must return a value above 1
    (any causal absorptive medium does).
    """
    if n < 1:
        raise ValueError("matsubara_term is defined for n >= 1")
    if t.temperature <= 0:
        raise ValueError("finite-temperature term needs temperature > 0")
    zeta_n = matsubara_frequency(n, t)
    eps_value = eps(zeta_n)
    if not eps_value > 1.0:
        raise ValueError(f"eps(i zeta) must exceed 1, got {eps_value} at "
                         f"zeta={zeta_n:.4g}")
    y = zeta_n * g.separation / c
    integral = _p_integral(eps_value, y, p_epsrel)
    return (k_B * t.temperature * g.sphere_radius / c**2
            * zeta_n**2 * integral * _N_TO_PN)


def force_finite_T(g: Geometry, t: ThermalState,
                   eps: Callable[[float], float],
                   prescription: str = "schwinger",
                   settings: QuadratureSettings = DEFAULT_SETTINGS) -> ForceResult:
    """Finite-temperature sphere-plate force: n=0 term plus Matsubara sum.

    Parameters
    ----------
    g, t : Geometry, ThermalState
        Geometry and temperature; temperature must be positive (use
        `force_zero_T` for T = 0).
    eps : callable
        eps(i zeta) evaluator, zeta in rad/s.
    prescription : str
        Handling of the n=0 term, "schwinger" or "halved".
    settings : QuadratureSettings
        Accuracy knobs; see the class docstring for the stop rule.

    Returns
    -------
    ForceResult
        Total force and decomposition, in pN.
    """
    if t.temperature <= 0:
        raise ValueError("force_finite_T needs temperature > 0")
    n0 = classical_term(g, t, prescription)
    running = n0
    tail = 0.0
    quiet = 0
    n = 0
    while n < settings.n_max:
        n += 1
        term = matsubara_term(n, g, t, eps, p_epsrel=settings.p_epsrel)
        tail += term
        running = n0 + tail
        if term < settings.sum_rel_tol * running:
            quiet += 1
            if quiet >= settings.sum_consecutive:
                return ForceResult(total=running, n0_term=n0, sum_terms=tail,
                                   n_terms_used=n, prescription=prescription)
        else:
            quiet = 0
    raise ConvergenceError(
        f"Matsubara sum not converged after {settings.n_max} terms "
        f"(last term {term:.3e} pN, accumulated {running:.6e} pN)")


def force_zero_T(g: Geometry, eps: Callable[[float], float],
                 settings: QuadratureSettings = DEFAULT_SETTINGS) -> float:
    """Zero-temperature force: the Matsubara sum replaced by an integral, in pN.

    The zeta-integral runs over log-spaced panels between settings.zeta_min
    and settings.zeta_max.  Below zeta_min the integrand is nearly constant
    (for a Drude metal the transverse-electric part has died off and the
    transverse-magnetic part tends to its static value), so that region is
    added as a single rectangle; at the default zeta_min this contributes
    ~1e-5 of the total.
    """
    a = g.separation

    def integrand(zeta: float) -> float:
        eps_value = eps(zeta)
        if not eps_value > 1.0:
            raise ValueError(f"eps(i zeta) must exceed 1, got {eps_value}")
        return zeta * zeta * _p_integral(eps_value, zeta * a / c,
                                         settings.p_epsrel)

    # Above zeta a / c ~ 45 the damping exp(-2 p zeta a / c) leaves less
    # than ~1e-39 of the integrand; past that the panels would only chase
    # relative accuracy of underflowed values.
    zeta_top = min(settings.zeta_max, 45.0 * c / a)
    zeta_top = max(zeta_top, 10.0 * settings.zeta_min)
    n_decades = math.log10(zeta_top / settings.zeta_min)
    n_panels = max(1, int(math.ceil(settings.panels_per_decade * n_decades)))
    edges = np.logspace(math.log10(settings.zeta_min),
                        math.log10(zeta_top), n_panels + 1)
    total = settings.zeta_min * integrand(settings.zeta_min)
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += checked_quad(integrand, lo, hi, epsrel=settings.zeta_epsrel,
                              what=f"zeta panel [{lo:.3g}, {hi:.3g}]")
    return hbar * g.sphere_radius / (2.0 * math.pi * c**2) * total * _N_TO_PN


def reduction_factor(force_pn: float, g: Geometry) -> float:
    """eta = F / F_ideal, the deviation from the perfect-conductor force."""
    if not force_pn > 0:
        raise ValueError("force must be positive")
    return force_pn / ideal_force(g)


def temperature_correction(g: Geometry, t: ThermalState,
                           eps: Callable[[float], float],
                           prescription: str = "schwinger",
                           settings: QuadratureSettings = DEFAULT_SETTINGS) -> float:
    """Finite-T force minus zero-T force, in pN.

    Positive for Drude metals under the schwinger prescription in the
    separation range studied here.
    """
    finite = force_finite_T(g, t, eps, prescription, settings)
    return finite.total - force_zero_T(g, eps, settings)
