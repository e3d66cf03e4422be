"""Run configuration: a flat key-value file with sections (INI syntax).

A config pins everything a computation depends on -- dielectric model,
geometry, temperature, prescription, and numerical tolerances -- so that a
run is reproducible from the file alone.  Dataset paths are resolved
against the config file directory, the working directory, the
CASIMIR_DATA_DIR environment variable, and finally the bundled package
data, in that order.
"""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .dielectric import DielectricModel, DrudeParameters, fit_drude
from .errors import ConfigError
from .lifshitz import QuadratureSettings
from .optical import FrequencyBoundaries, OpticalDataset, load_dataset, merge_datasets

DATA_DIR_ENV = "CASIMIR_DATA_DIR"


def package_data_dir() -> Path:
    return Path(str(resources.files("aucasimir") / "data"))


def resolve_data_path(name, search_dirs: tuple[Path, ...] = ()) -> Path:
    """Locate a data file: absolute path, given dirs, cwd, $CASIMIR_DATA_DIR,
    then the bundled package data."""
    p = Path(name)
    if p.is_absolute():
        if not p.is_file():
            raise FileNotFoundError(f"data file not found: {p}")
        return p
    candidates = [d / p for d in search_dirs]
    candidates.append(Path.cwd() / p)
    env_dir = os.environ.get(DATA_DIR_ENV)
    if env_dir:
        candidates.append(Path(env_dir) / p)
    candidates.append(package_data_dir() / p)
    for cand in candidates:
        if cand.is_file():
            return cand
    raise FileNotFoundError(
        f"data file not found: {name} (searched {', '.join(str(c.parent) for c in candidates)})")


@dataclass(frozen=True)
class RunConfig:
    """Validated run configuration."""

    model_kind: str                      # "drude" or "tabulated"
    drude: DrudeParameters | None        # None -> fit from data
    fit_range: tuple[float, float] | None
    fit_fixed_omega_p: float | None
    dataset_paths: tuple[Path, ...]
    boundaries: FrequencyBoundaries
    tail_exponent: float
    kk_epsrel: float
    sphere_radius: float
    temperature: float
    prescription: str
    settings: QuadratureSettings

    def load_dataset(self) -> OpticalDataset | None:
        """Merged optical dataset; earlier paths take precedence on overlap."""
        if not self.dataset_paths:
            return None
        merged = load_dataset(self.dataset_paths[0])
        for path in self.dataset_paths[1:]:
            merged = merge_datasets(merged, load_dataset(path), precedence="a")
        return merged

    def drude_parameters(self, dataset: OpticalDataset | None) -> DrudeParameters:
        if self.drude is not None:
            return self.drude
        if dataset is None:
            raise ConfigError("a Drude fit needs a dataset")
        fit = fit_drude(dataset, self.fit_range,
                        omega_p_fixed=self.fit_fixed_omega_p)
        return fit.parameters

    def build_evaluator(self) -> tuple[Callable[[float], float],
                                       DrudeParameters,
                                       DielectricModel | None]:
        """(eps(i zeta) evaluator, Drude parameters, model or None)."""
        dataset = self.load_dataset()
        drude = self.drude_parameters(dataset)
        if self.model_kind == "drude":
            return drude.epsilon, drude, None
        model = DielectricModel(drude, dataset, self.boundaries,
                                self.tail_exponent)

        def evaluator(zeta: float) -> float:
            return model.epsilon(zeta, epsrel=self.kk_epsrel)

        return evaluator, drude, model


def _get_float(cp, section, key, default=None):
    raw = cp.get(section, key, fallback=None)
    if raw is None or raw.strip() == "":
        if default is None:
            raise ConfigError(f"missing required key [{section}] {key}")
        return default
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"[{section}] {key}: not a number: {raw!r}") from None


def _get_int(cp, section, key, default):
    return int(_get_float(cp, section, key, float(default)))


def _check_tolerance(name, value):
    if not 0.0 < value < 1.0:
        raise ConfigError(f"{name} must be in (0, 1), got {value}")


def load_run_config(path) -> RunConfig:
    """Parse and fully validate a config file (fail fast, before computing)."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"config file not found: {path}")
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        cp.read(path)
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from None
    if not cp.has_section("dielectric"):
        raise ConfigError(f"{path}: missing [dielectric] section")

    dataset_raw = cp.get("dielectric", "dataset", fallback="").strip()
    dataset_names = [s.strip() for s in dataset_raw.split(",") if s.strip()]
    dataset_paths = tuple(resolve_data_path(n, (path.parent,))
                          for n in dataset_names)

    model_kind = cp.get("dielectric", "model",
                        fallback="tabulated" if dataset_paths else "drude").strip()
    if model_kind not in ("drude", "tabulated"):
        raise ConfigError(f"[dielectric] model must be 'drude' or 'tabulated', "
                          f"got {model_kind!r}")
    if model_kind == "tabulated" and not dataset_paths:
        raise ConfigError("[dielectric] model=tabulated needs a dataset")

    fit_raw = cp.get("dielectric", "fit_range", fallback="").split()
    fit_range = None
    if fit_raw:
        if len(fit_raw) != 2:
            raise ConfigError("[dielectric] fit_range needs two values (rad/s)")
        fit_range = (float(fit_raw[0]), float(fit_raw[1]))
        if not 0 < fit_range[0] < fit_range[1]:
            raise ConfigError("[dielectric] fit_range must be 0 < lo < hi")
    fixed_raw = cp.get("dielectric", "fit_fixed_omega_p", fallback="").strip()
    fit_fixed = float(fixed_raw) if fixed_raw else None

    has_params = cp.has_option("dielectric", "omega_p")
    if has_params:
        drude = DrudeParameters(_get_float(cp, "dielectric", "omega_p"),
                                _get_float(cp, "dielectric", "omega_tau"))
    else:
        if fit_range is None:
            raise ConfigError("[dielectric] needs omega_p/omega_tau or fit_range")
        drude = None

    try:
        boundaries = FrequencyBoundaries(
            _get_float(cp, "dielectric", "omega0", FrequencyBoundaries().omega0),
            _get_float(cp, "dielectric", "omega1", FrequencyBoundaries().omega1))
    except ValueError as exc:
        raise ConfigError(f"[dielectric] boundaries: {exc}") from None
    tail_exponent = _get_float(cp, "dielectric", "tail_exponent", 3.0)
    if tail_exponent <= 1:
        raise ConfigError("[dielectric] tail_exponent must exceed 1")
    kk_epsrel = _get_float(cp, "dielectric", "kk_epsrel", 1e-9)
    _check_tolerance("[dielectric] kk_epsrel", kk_epsrel)

    sphere_radius = _get_float(cp, "geometry", "sphere_radius") \
        if cp.has_section("geometry") else None
    if sphere_radius is None:
        raise ConfigError("missing [geometry] sphere_radius")
    if sphere_radius <= 0:
        raise ConfigError("[geometry] sphere_radius must be positive")

    temperature = _get_float(cp, "thermal", "temperature", 300.0) \
        if cp.has_section("thermal") else 300.0
    if temperature < 0:
        raise ConfigError("[thermal] temperature must be non-negative")

    prescription = cp.get("force", "prescription", fallback="schwinger").strip() \
        if cp.has_section("force") else "schwinger"
    if prescription not in ("schwinger", "halved"):
        raise ConfigError(f"[force] prescription must be 'schwinger' or "
                          f"'halved', got {prescription!r}")

    defaults = QuadratureSettings()
    if cp.has_section("numerics"):
        settings = QuadratureSettings(
            p_epsrel=_get_float(cp, "numerics", "p_epsrel", defaults.p_epsrel),
            zeta_epsrel=_get_float(cp, "numerics", "zeta_epsrel",
                                   defaults.zeta_epsrel),
            zeta_min=_get_float(cp, "numerics", "zeta_min", defaults.zeta_min),
            zeta_max=_get_float(cp, "numerics", "zeta_max", defaults.zeta_max),
            panels_per_decade=_get_int(cp, "numerics", "panels_per_decade",
                                       defaults.panels_per_decade),
            sum_rel_tol=_get_float(cp, "numerics", "sum_rel_tol",
                                   defaults.sum_rel_tol),
            sum_consecutive=_get_int(cp, "numerics", "sum_consecutive",
                                     defaults.sum_consecutive),
            n_max=_get_int(cp, "numerics", "n_max", defaults.n_max),
        )
    else:
        settings = defaults
    _check_tolerance("[numerics] p_epsrel", settings.p_epsrel)
    _check_tolerance("[numerics] zeta_epsrel", settings.zeta_epsrel)
    _check_tolerance("[numerics] sum_rel_tol", settings.sum_rel_tol)
    if not 0 < settings.zeta_min < settings.zeta_max:
        raise ConfigError("[numerics] need 0 < zeta_min < zeta_max")
    if settings.panels_per_decade < 1 or settings.sum_consecutive < 1 \
            or settings.n_max < 1:
        raise ConfigError("[numerics] counts must be >= 1")

    return RunConfig(model_kind=model_kind, drude=drude, fit_range=fit_range,
                     fit_fixed_omega_p=fit_fixed, dataset_paths=dataset_paths,
                     boundaries=boundaries, tail_exponent=tail_exponent,
                     kk_epsrel=kk_epsrel, sphere_radius=sphere_radius,
                     temperature=temperature, prescription=prescription,
                     settings=settings)
