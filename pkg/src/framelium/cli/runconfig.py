"""
Run configuration for `framelium run`.

A configuration is one JSON document:

    {
      "space": "hardy" | {"type": "dirichlet_alpha", "alpha": 0.5} | ...,
      "points": [[0.1, 0.0], 0.2] | {"type": "radial_exponential", "q": 0.5, "count": 30},
      "analysis": {"section_sizes": [10, 20, 40], "tau": 0.5, "cnp_omega0": 0.0},
      "output": {"dir": "out"}
    }

Complex numbers are written as [re, im] or as plain reals. Validation failures
are raised as ConfigError carrying the path of the offending field.
"""

from framelium.core.config import FrameliumSettings
from framelium.core.errors import ConfigError
from framelium.kernels import PointMass, PointMassMeasure
from framelium.manifest import Manifest
from framelium.manifest.types.value import ComplexValue
from framelium.sequences import TridiagMode

import cmath
import json
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import AfterValidator, Field, TypeAdapter, ValidationError, field_validator, model_validator

import logging
logger = logging.getLogger(__name__)

DEFAULT_SECTION_SIZES = [10, 20, 40]


def _inside_disc(z: complex) -> complex:
    if abs(z) >= 1.0:
        raise ValueError(f"point {z} lies outside the open unit disc (|z| = {abs(z):.6g})")
    return z


DiscPoint = Annotated[ComplexValue, AfterValidator(_inside_disc)]


# --- spaces -----------------------------------------------------------------

class HardySpec(Manifest.XObject):
    type: Literal["hardy"] = "hardy"


class DirichletAlphaSpec(Manifest.XObject):
    type: Literal["dirichlet_alpha"] = "dirichlet_alpha"
    alpha: float = Field(ge=0.0, le=1.0)


class DirichletMuSpec(Manifest.XObject):
    type: Literal["dirichlet_mu"] = "dirichlet_mu"
    masses: Tuple[PointMass, ...] = Field(min_length=1)
    truncation: Optional[int] = Field(default=None, ge=0)

    @property
    def measure(self) -> PointMassMeasure:
        return PointMassMeasure(masses=self.masses)


class ExplicitVectorsSpec(Manifest.XObject):
    type: Literal["explicit_vectors"] = "explicit_vectors"
    vectors: List[List[ComplexValue]] = Field(min_length=1)

    @field_validator("vectors")
    @classmethod
    def _same_dimension(cls, vectors: List[List[complex]]) -> List[List[complex]]:
        dims = {len(v) for v in vectors}
        if len(dims) != 1 or 0 in dims:
            raise ValueError(f"all vectors need the same positive dimension, got {sorted(dims)}")
        return vectors


class TridiagSpec(Manifest.XObject):
    type: Literal["tridiag_example"] = "tridiag_example"
    mode: TridiagMode = TridiagMode.Interleaved
    half_width: Optional[int] = Field(default=None, ge=0)


SpaceSpec = Annotated[
    Union[HardySpec, DirichletAlphaSpec, DirichletMuSpec, ExplicitVectorsSpec, TridiagSpec],
    Field(discriminator="type"),
]

KERNEL_SPACES = ("hardy", "dirichlet_alpha", "dirichlet_mu")
_TAGS = {"hardy", "dirichlet_alpha", "dirichlet_mu", "explicit_vectors", "tridiag_example", "radial_exponential", "rays", "explicit"}


# --- points -----------------------------------------------------------------

class RadialExponential(Manifest.XObject):
    """lambda_n = (1 - q^n) e^{i theta}, n = 1..count."""
    type: Literal["radial_exponential"] = "radial_exponential"
    q: float = Field(gt=0.0, lt=1.0)
    theta: float = 0.0
    count: int = Field(ge=1)


class Rays(Manifest.XObject):
    """Radial exponential sequences along several rays, concatenated in the order of `thetas`."""
    type: Literal["rays"] = "rays"
    q: float = Field(gt=0.0, lt=1.0)
    thetas: List[float] = Field(min_length=1)
    count_per_ray: int = Field(ge=1)


class ExplicitPoints(Manifest.XObject):
    type: Literal["explicit"] = "explicit"
    values: List[DiscPoint] = Field(min_length=1)


PointGenerator = Annotated[Union[RadialExponential, Rays, ExplicitPoints], Field(discriminator="type")]


def _radial(q: float, theta: float, count: int) -> List[complex]:
    rotation = cmath.exp(1j * theta)
    return [(1.0 - q ** n) * rotation for n in range(1, count + 1)]


def generate_points(spec: Union[RadialExponential, Rays, ExplicitPoints, Dict[str, Any]]) -> List[complex]:
    """Expand a point generator into its deterministic list of points."""
    if isinstance(spec, dict):
        try:
            spec = TypeAdapter(PointGenerator).validate_python(spec)
        except ValidationError as e:
            raise _config_error(e, prefix=("points",)) from e
    if isinstance(spec, RadialExponential):
        return _radial(spec.q, spec.theta, spec.count)
    if isinstance(spec, Rays):
        return [z for theta in spec.thetas for z in _radial(spec.q, theta, spec.count_per_ray)]
    return list(spec.values)


# --- analysis / output ------------------------------------------------------

class AnalysisSpec(Manifest.XObject):
    section_sizes: List[int] = Field(default_factory=lambda: list(DEFAULT_SECTION_SIZES), min_length=1)
    tau: float = Field(default=0.5, gt=0.0, le=1.0)
    size: Optional[int] = Field(default=None, ge=1, description="Leading section analysed; defaults to the sequence length")
    cnp_omega0: Optional[DiscPoint] = Field(default=None, description="Base point of the Pick diagnostic; omitted means no diagnostic")
    tolerances: Dict[str, float] = Field(default_factory=dict)

    @field_validator("section_sizes")
    @classmethod
    def _ascending(cls, sizes: List[int]) -> List[int]:
        if sizes[0] < 1 or any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ValueError(f"section sizes must be positive and strictly ascending, got {sizes}")
        return sizes

    @field_validator("tolerances")
    @classmethod
    def _known_tolerances(cls, values: Dict[str, float]) -> Dict[str, float]:
        unknown = sorted(set(values) - set(FrameliumSettings.model_fields))
        if unknown:
            raise ValueError(f"unknown tolerance names {unknown}")
        try:
            FrameliumSettings(**{**FrameliumSettings.default.model_dump(), **values})
        except ValidationError as e:
            first = e.errors()[0]
            name = ".".join(str(p) for p in first["loc"]) or "tolerances"
            raise ValueError(f"{name}: {first['msg']}") from e
        return values


class OutputSpec(Manifest.XObject):
    dir: str = "out"
    report: str = "report.json"
    gramian: str = "gramian.csv"
    profile: str = "profile.csv"


class RunConfig(Manifest.XObject):
    """Validated run configuration."""
    __style__ = Manifest.XObject.Style.TREE

    space: SpaceSpec
    points: Optional[List[DiscPoint]] = None
    generator: Optional[PointGenerator] = Field(default=None, description="Point generator (written as `points` in the document)")
    analysis: AnalysisSpec = Field(default_factory=AnalysisSpec)
    output: OutputSpec = Field(default_factory=OutputSpec)

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        if isinstance(data.get("space"), str):
            data["space"] = {"type": data["space"]}
        if isinstance(data.get("points"), dict):
            data["generator"] = data.pop("points")
        return data

    @model_validator(mode="after")
    def _points_for_kernels(self) -> "RunConfig":
        if self.space.type in KERNEL_SPACES and self.points is None and self.generator is None:
            raise ValueError(f"space '{self.space.type}' needs points")
        return self

    def resolved_points(self) -> Optional[List[complex]]:
        if self.generator is not None:
            return generate_points(self.generator)
        return None if self.points is None else list(self.points)


def _format_loc(loc: Tuple[Any, ...]) -> str:
    path = ""
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            part = "points" if part == "generator" else str(part)
            path += f".{part}" if path else part
    return path


def _config_error(error: ValidationError, prefix: Tuple[str, ...] = ()) -> ConfigError:
    first = error.errors()[0]
    # discriminated unions insert their tag into the location
    loc = tuple(p for p in first["loc"] if p not in _TAGS)
    return ConfigError(first["msg"], _format_loc(prefix + loc))


def parse_config(text: str) -> RunConfig:
    """Parse and validate a JSON configuration document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"malformed document: {e.msg} at line {e.lineno} column {e.colno}") from e
    if not isinstance(data, dict):
        raise ConfigError("the configuration must be a JSON object")
    try:
        config = RunConfig.model_validate(data)
    except ValidationError as e:
        raise _config_error(e) from e
    logger.debug(f"parsed config: space={config.space.type}, tau={config.analysis.tau}")
    return config
