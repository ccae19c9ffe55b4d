"""Run configuration: accuracy, zone boundaries, method and output format.

Values come from three layers, later ones winning: built-in defaults, the
file named by ``RYDBERG_RENYI_CONFIG`` (``key = value`` lines, ``#``
comments), then command-line flags.
"""

from __future__ import annotations

import configparser
import dataclasses
import os
from dataclasses import dataclass

from .entropy import Method
from .errors import DomainError
from .laguerre import ZoneConfig
from .special import Accuracy

__all__ = ["ENV_VAR", "RunConfig", "load_config_file", "build_config"]

ENV_VAR = "RYDBERG_RENYI_CONFIG"

_FLOAT_KEYS = ("abs_tol", "rel_tol", "eps", "t_max", "theta")
_KEYS = _FLOAT_KEYS + ("method", "format", "output")


@dataclass(frozen=True)
class RunConfig:
    abs_tol: float = Accuracy.abs_tol
    rel_tol: float = Accuracy.rel_tol
    eps: float = ZoneConfig.eps
    t_max: float = ZoneConfig.t_max
    theta: float = ZoneConfig.theta
    method: Method = Method.AUTO
    format: str = "csv"
    output: str | None = None

    def __post_init__(self):
        if self.format not in ("csv", "json"):
            raise DomainError(f"format must be csv or json, got {self.format!r}")
        # constructing these validates the numeric fields
        self.accuracy
        self.zones

    @property
    def accuracy(self) -> Accuracy:
        return Accuracy(self.abs_tol, self.rel_tol)

    @property
    def zones(self) -> ZoneConfig:
        return ZoneConfig(eps=self.eps, t_max=self.t_max, theta=self.theta)


def _parse_method(text):
    try:
        return Method[text.strip().upper()]
    except KeyError:
        raise DomainError(f"unknown method {text!r}; use exact, asymptotic or auto") from None


def load_config_file(path):
    """Parse a ``key = value`` file into a dict of typed overrides."""
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#",))
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_string("[run]\n" + fh.read(), source=str(path))
    except (OSError, configparser.Error) as exc:
        raise DomainError(f"cannot read config file {path}: {exc}") from None
    out = {}
    for key, raw in parser["run"].items():
        key = key.replace("-", "_")
        if key not in _KEYS:
            raise DomainError(f"unknown config key {key!r} in {path}")
        if key in _FLOAT_KEYS:
            try:
                out[key] = float(raw)
            except ValueError:
                raise DomainError(f"config key {key} needs a number, got {raw!r}") from None
        elif key == "method":
            out[key] = _parse_method(raw)
        else:
            out[key] = raw.strip()
    return out


def build_config(overrides=None, environ=None) -> RunConfig:
    """Defaults, then the environment's config file, then ``overrides`` (None values ignored)."""
    environ = os.environ if environ is None else environ
    values = {}
    path = environ.get(ENV_VAR)
    if path:
        values.update(load_config_file(path))
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = _parse_method(value) if key == "method" and isinstance(value, str) else value
    fields = {f.name for f in dataclasses.fields(RunConfig)}
    return RunConfig(**{k: v for k, v in values.items() if k in fields})
