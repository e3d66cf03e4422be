"""Dielectric function of gold on the imaginary frequency axis.

eps(i zeta) is what the Lifshitz formula consumes.  It is assembled from
three spectral regions of the dispersion relation

    eps(i zeta) = 1 + (2/pi) int_0^inf  omega eps''(omega) / (omega^2 + zeta^2) d omega

  * [0, omega0]   : no tabulated data; a Drude extrapolation integrated in
                    closed form (`epsilon1_analytic`),
  * [omega0, omega1] and [omega1, omega_max] : tabulated eps'' integrated
                    numerically with log-log interpolation,
  * above omega_max : a power-law tail eps'' ~ omega^(-tail_exponent).

The low-frequency Drude parameters dominate the result and are either given
directly or fitted to the data (`fit_drude`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize
from scipy.constants import epsilon_0

from ._quadrature import checked_quad
from .errors import ConvergenceError
from .optical import FrequencyBoundaries, OpticalDataset, drude_eps2, interpolate_eps2

#: ohm m -> micro-ohm cm
_OHM_M_TO_UOHM_CM = 1e8

#: relative distance from zeta = omega_tau below which the removable
#: singularity in epsilon1_analytic is evaluated by series expansion
_SINGULAR_SWITCH = 1e-4


@dataclass(frozen=True)
class DrudeParameters:
    """Free-electron parameters: plasma frequency and relaxation frequency [rad/s]."""

    omega_p: float
    omega_tau: float

    def __post_init__(self):
        if not self.omega_p > 0:
            raise ValueError(f"omega_p must be positive, got {self.omega_p}")
        if not 0 < self.omega_tau < self.omega_p:
            raise ValueError(
                f"need 0 < omega_tau < omega_p, got omega_tau={self.omega_tau}")

    @classmethod
    def from_resistivity(cls, omega_p: float,
                         rho_micro_ohm_cm: float) -> "DrudeParameters":
        """Parameters with omega_tau chosen to match a static resistivity."""
        rho_si = rho_micro_ohm_cm / _OHM_M_TO_UOHM_CM
        return cls(omega_p, rho_si * epsilon_0 * omega_p**2)

    def epsilon(self, zeta: float) -> float:
        """eps(i zeta) for this pure Drude model (imaginary-axis evaluator)."""
        return drude_eps_imag_axis(self, zeta)


def drude_eps_real_axis(p: DrudeParameters, omega: float) -> complex:
    """Drude dielectric function on the real axis: 1 - omega_p^2/(omega(omega + i omega_tau)))."""
    if omega <= 0:
        raise ValueError("omega must be positive (omega=0 is singular)")
    return 1.0 - p.omega_p**2 / (omega * (omega + 1j * p.omega_tau))


def drude_eps_imag_axis(p: DrudeParameters, zeta: float) -> float:
    """Drude dielectric function at imaginary frequency: 1 + omega_p^2/(zeta(zeta + omega_tau))."""
    if zeta <= 0:
        raise ValueError("zeta must be positive (static limit is singular)")
    return 1.0 + p.omega_p**2 / (zeta * (zeta + p.omega_tau))


def resistivity(p: DrudeParameters) -> float:
    """Static resistivity omega_tau / (eps0 omega_p^2), in micro-ohm cm."""
    return p.omega_tau / (epsilon_0 * p.omega_p**2) * _OHM_M_TO_UOHM_CM


def epsilon1_analytic(p: DrudeParameters, omega0: float, zeta: float) -> float:
    """Low-frequency Drude contribution to eps(i zeta) from [0, omega0].

    Closed form of the dispersion integral with the Drude eps'':

        (2/pi) omega_p^2/(zeta^2 - omega_tau^2)
            * [ atan(omega0/omega_tau) - (omega_tau/zeta) atan(omega0/zeta) ]

    The point zeta = omega_tau is a removable singularity; near it the
    value is computed from a series expansion to keep full precision.
    """
    if zeta <= 0:
        raise ValueError("zeta must be positive")
    if omega0 < 0:
        raise ValueError("omega0 must be non-negative")
    if omega0 == 0.0:
        return 0.0
    wt = p.omega_tau
    arctan_wt = math.atan(omega0 / wt)

    t = zeta - wt
    if abs(t) >= _SINGULAR_SWITCH * wt:
        bracket = arctan_wt - (wt / zeta) * math.atan(omega0 / zeta)
        return (2.0 / math.pi) * p.omega_p**2 / (zeta**2 - wt**2) * bracket

    # Series around zeta = omega_tau.  With N(zeta) the bracket above and
    # D = zeta^2 - omega_tau^2, N(omega_tau) = 0, so
    #   N/D = (N' + N'' t/2 + O(t^2)) / (2 omega_tau + t).
    w2 = wt * wt + omega0 * omega0
    n1 = arctan_wt / wt + omega0 / w2
    n2 = (-omega0 / (wt * w2)
          - 2.0 * arctan_wt / (wt * wt)
          - omega0 * (3.0 * wt * wt + omega0 * omega0) / (wt * w2 * w2))
    ratio = (n1 + 0.5 * n2 * t) / (2.0 * wt + t)
    return (2.0 / math.pi) * p.omega_p**2 * ratio


@dataclass(frozen=True)
class EpsilonDecomposition:
    """eps(i zeta) split by spectral origin; total = 1 + sum of the parts."""

    eps1: float       # analytic Drude segment, [0, omega0]
    eps2_part: float  # tabulated data, [omega0, omega1]
    eps3_part: float  # tabulated data above omega1 plus the power-law tail

    def __post_init__(self):
        for name in ("eps1", "eps2_part", "eps3_part"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")

    @property
    def total(self) -> float:
        return 1.0 + self.eps1 + self.eps2_part + self.eps3_part


@dataclass(frozen=True)
class DielectricModel:
    """Composite eps(i zeta): Drude segment plus transformed tabulated data.

    The dataset must cover [omega0, omega1]; above its last sample eps'' is
    extended as a power law with the given exponent (must exceed 1 so the
    dispersion integral converges; the true Drude tail falls off as
    omega^-3).
    """

    drude: DrudeParameters
    dataset: OpticalDataset
    boundaries: FrequencyBoundaries = FrequencyBoundaries()
    tail_exponent: float = 3.0

    def __post_init__(self):
        if not self.tail_exponent > 1:
            raise ValueError("tail_exponent must exceed 1 for integrability")
        # the slack covers decimal round-trips of omega0 through data files
        if self.dataset.omega_min > self.boundaries.omega0 * (1.0 + 1e-9):
            raise ValueError(
                f"dataset starts at {self.dataset.omega_min:.4g}, above "
                f"omega0={self.boundaries.omega0:.4g}; no data for the "
                f"[omega0, omega1] integral")
        if self.dataset.omega_max < self.boundaries.omega1:
            raise ValueError(
                f"dataset ends at {self.dataset.omega_max:.4g}, below "
                f"omega1={self.boundaries.omega1:.4g}")

    def decompose(self, zeta: float, epsrel: float = 1e-9) -> EpsilonDecomposition:
        return kk_epsilon(self, zeta, epsrel=epsrel)

    def epsilon(self, zeta: float, epsrel: float = 1e-9) -> float:
        return kk_epsilon(self, zeta, epsrel=epsrel).total


def kk_epsilon(model: DielectricModel, zeta: float,
               epsrel: float = 1e-9) -> EpsilonDecomposition:
    """Evaluate eps(i zeta) through the dispersion relation, by region.

    The data integrals use adaptive quadrature split at omega = zeta where
    the Lorentzian weight peaks; the tail integral is mapped onto (0, 1]
    with t = omega_max/omega, which keeps the integrand finite for any
    tail exponent above 1.
    """
    if zeta <= 0:
        raise ValueError("zeta must be positive")
    b = model.boundaries
    ds = model.dataset
    zeta_sq = zeta * zeta

    def weighted(w: float) -> float:
        return w * interpolate_eps2(ds, w) / (w * w + zeta_sq)

    # the interpolant has derivative kinks at every data node, so the nodes
    # (and the Lorentzian peak at omega = zeta) are passed as break points
    nodes = ds.omega.tolist()

    # the model validator tolerates data starting an ulp above omega0
    lower = max(b.omega0, ds.omega_min)
    eps2_part = (2.0 / math.pi) * checked_quad(
        weighted, lower, b.omega1, epsrel=epsrel, points=nodes + [zeta],
        limit=4 * len(nodes) + 100, what="eps2 dispersion integral")

    data_top = (2.0 / math.pi) * checked_quad(
        weighted, b.omega1, ds.omega_max, epsrel=epsrel, points=nodes + [zeta],
        limit=4 * len(nodes) + 100, what="eps3 data integral")

    w_max = ds.omega_max
    eps2_at_max = ds.eps2[-1]
    q = model.tail_exponent

    def tail(t: float) -> float:
        # omega = w_max / t; integrand transformed so t -> 0 is regular
        return eps2_at_max * w_max**2 * t**(q - 1.0) / (w_max**2 + zeta_sq * t * t)

    tail_part = (2.0 / math.pi) * checked_quad(
        tail, 0.0, 1.0, epsrel=epsrel,
        points=[w_max / zeta] if zeta > w_max else None,
        what="eps3 tail integral")

    eps1 = epsilon1_analytic(model.drude, b.omega0, zeta)
    return EpsilonDecomposition(eps1, eps2_part, data_top + tail_part)


@dataclass(frozen=True)
class DrudeFit:
    """Result of a Drude fit: parameters, rms residual in log space, point count."""

    parameters: DrudeParameters
    rms_log_residual: float
    n_points: int


def fit_drude(ds: OpticalDataset, fit_range: tuple[float, float],
              omega_p_fixed: float | None = None,
              max_evaluations: int = 500) -> DrudeFit:
    """Least-squares fit of the Drude eps'' to the data over `fit_range`.

    The objective is log eps''(model) - log eps''(data), which weights the
    decades evenly.  With `omega_p_fixed` only omega_tau varies.  Requires
    the range to lie inside the data coverage and to contain at least three
    samples.
    """
    lo, hi = fit_range
    if not 0 < lo < hi:
        raise ValueError("fit_range must satisfy 0 < lo < hi")
    if lo < ds.omega_min or hi > ds.omega_max:
        raise ValueError(
            f"fit_range [{lo:.4g}, {hi:.4g}] not within data coverage "
            f"[{ds.omega_min:.4g}, {ds.omega_max:.4g}]")
    mask = (ds.omega >= lo) & (ds.omega <= hi)
    w = ds.omega[mask]
    ln_data = np.log(ds.eps2[mask])
    if len(w) < 3:
        raise ValueError(f"need at least 3 samples in fit_range, got {len(w)}")

    def ln_model(omega_p, omega_tau):
        return np.log(drude_eps2(omega_p, omega_tau, w))

    # log parametrization keeps both frequencies positive
    w_mid = math.sqrt(lo * hi)
    tau0 = min(w_mid, 5e13)
    eps2_mid = float(np.exp(np.interp(math.log(w_mid), np.log(w), ln_data)))
    wp0 = math.sqrt(eps2_mid * w_mid * (w_mid**2 + tau0**2) / tau0)

    if omega_p_fixed is None:
        def residuals(x):
            return ln_model(math.exp(x[0]), math.exp(x[1])) - ln_data
        x0 = [math.log(wp0), math.log(tau0)]
    else:
        if omega_p_fixed <= 0:
            raise ValueError("omega_p_fixed must be positive")

        def residuals(x):
            return ln_model(omega_p_fixed, math.exp(x[0])) - ln_data
        x0 = [math.log(tau0)]

    result = optimize.least_squares(residuals, x0, method="lm",
                                    xtol=1e-15, ftol=1e-15, gtol=1e-15,
                                    max_nfev=max_evaluations)
    if not result.success:
        raise ConvergenceError(
            f"Drude fit did not converge after {result.nfev} evaluations: "
            f"{result.message}")
    if omega_p_fixed is None:
        params = DrudeParameters(math.exp(result.x[0]), math.exp(result.x[1]))
    else:
        params = DrudeParameters(omega_p_fixed, math.exp(result.x[0]))
    rms = float(np.sqrt(np.mean(result.fun**2)))
    return DrudeFit(params, rms, len(w))
