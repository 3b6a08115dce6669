"""
Configuration reader for simulation documents.

A document is YAML (JSON being a subset) with the keys

    grid.L, grid.N, cutoff_n, weight.kind, weight.a, time.dt, time.T,
    quad.alpha_nodes_per_decade, quad.alpha_min, quad.alpha_max,
    init.modes, init.file, init.random, output.cadence, output.keep_states,
    seed, constants.*, sweep.amplitudes, sweep.cutoffs, sweep.dts

all optional. Unknown keys are rejected with their dotted path.
"""
import logging
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import yaml

from ..errors import ConfigError
from ..solver import Constants, InitialMode, RandomInit, SimConfig, WeightKind
from .sweep_spec import SweepSpec

logger = logging.getLogger(__name__)

# leaf parser names per key; nested dicts are sections
SCHEMA: Dict[str, Any] = {
    "grid": {"L": "number", "N": "integer"},
    "cutoff_n": "number",
    "weight": {"kind": "string", "a": "number"},
    "time": {"dt": "number", "T": "number"},
    "quad": {"alpha_nodes_per_decade": "integer", "alpha_min": "number", "alpha_max": "number"},
    "init": {
        "modes": "modes",
        "file": "string",
        "random": {"amplitude": "number", "decay": "number", "max_mode": "integer"},
    },
    "output": {"cadence": "integer", "keep_states": "boolean"},
    "seed": "integer",
    "constants": {"C1": "number", "C2": "number", "c0": "number", "gronwall_C": "number"},
    "sweep": {"amplitudes": "number_list", "cutoffs": "number_list", "dts": "number_list"},
}

MODE_KEYS = ("k", "amplitude", "phase")


@dataclass(frozen=True)
class ConfigDocument:
    """A parsed document: the simulation config and, when present, the sweep axes."""
    sim: SimConfig
    sweep: Optional[SweepSpec] = None
    source: str = "<string>"


def _key_lines(node: Optional[yaml.Node], prefix: str = "") -> Dict[str, int]:
    """Dotted path -> 1-based line of every mapping key in a composed YAML tree."""
    lines: Dict[str, int] = {}
    if isinstance(node, yaml.MappingNode):
        for key_node, value_node in node.value:
            path = f"{prefix}.{key_node.value}" if prefix else str(key_node.value)
            lines[path] = key_node.start_mark.line + 1
            lines.update(_key_lines(value_node, path))
    elif isinstance(node, yaml.SequenceNode):
        for i, item in enumerate(node.value):
            path = f"{prefix}[{i}]"
            lines[path] = item.start_mark.line + 1
            lines.update(_key_lines(item, path))
    return lines


class _Fields:
    """Typed access to the loaded document with errors located by path and line."""

    def __init__(self, lines: Dict[str, int]):
        self.lines = lines

    def error(self, message: str, path: str) -> ConfigError:
        return ConfigError(message, path, self.lines.get(path))

    def number(self, value: Any, path: str) -> float:
        if isinstance(value, bool):
            raise self.error(f"expected a number, got {value!r}", path)
        if isinstance(value, (int, float)):
            result = float(value)
        elif isinstance(value, str):
            # YAML 1.1 reads 1e-3 as a string
            try:
                result = float(value)
            except ValueError:
                raise self.error(f"expected a number, got {value!r}", path) from None
        else:
            raise self.error(f"expected a number, got {type(value).__name__}", path)
        if not math.isfinite(result):
            raise self.error(f"expected a finite number, got {value!r}", path)
        return result

    def integer(self, value: Any, path: str) -> int:
        number = self.number(value, path)
        if not number.is_integer():
            raise self.error(f"expected an integer, got {value!r}", path)
        return int(number)

    def string(self, value: Any, path: str) -> str:
        if not isinstance(value, str):
            raise self.error(f"expected a string, got {type(value).__name__}", path)
        return value

    def boolean(self, value: Any, path: str) -> bool:
        if not isinstance(value, bool):
            raise self.error(f"expected true or false, got {value!r}", path)
        return value

    def number_list(self, value: Any, path: str) -> Tuple[float, ...]:
        if not isinstance(value, list) or not value:
            raise self.error("expected a nonempty list of numbers", path)
        return tuple(self.number(v, f"{path}[{i}]") for i, v in enumerate(value))

    def modes(self, value: Any, path: str) -> Tuple[InitialMode, ...]:
        if not isinstance(value, list):
            raise self.error("expected a list of {k, amplitude, phase}", path)
        modes = []
        for i, item in enumerate(value):
            item_path = f"{path}[{i}]"
            if not isinstance(item, dict):
                raise self.error("expected a mapping with k and amplitude", item_path)
            unknown = sorted(set(item) - set(MODE_KEYS))
            if unknown:
                raise self.error("unknown key", f"{item_path}.{unknown[0]}")
            for required in ("k", "amplitude"):
                if required not in item:
                    raise self.error("missing required key", f"{item_path}.{required}")
            modes.append(InitialMode(
                k=self.number(item["k"], f"{item_path}.k"),
                amplitude=self.number(item["amplitude"], f"{item_path}.amplitude"),
                phase=self.number(item.get("phase", 0.0), f"{item_path}.phase"),
            ))
        return tuple(modes)


def _check_keys(data: Dict[str, Any], schema: Dict[str, Any], fields: _Fields, prefix: str = "") -> Dict[str, Any]:
    """Reject unknown keys and convert leaves; returns a flat {dotted path: value}."""
    flat: Dict[str, Any] = {}
    for key, value in data.items():
        path = f"{prefix}.{key}" if prefix else str(key)
        if key not in schema:
            raise fields.error("unknown key", path)
        kind = schema[key]
        if isinstance(kind, dict):
            if value is None:
                continue
            if not isinstance(value, dict):
                raise fields.error("expected a mapping", path)
            flat.update(_check_keys(value, kind, fields, path))
        elif value is not None:
            flat[path] = getattr(fields, kind)(value, path)
    return flat


def _apply(cfg: SimConfig, path: str, fields: _Fields, **changes) -> SimConfig:
    """replace() with validation errors attributed to path."""
    try:
        return replace(cfg, **changes)
    except ValueError as e:
        raise fields.error(str(e), path) from e


def _build(factory: Callable[[], Any], path: str, fields: _Fields) -> Any:
    try:
        return factory()
    except ValueError as e:
        raise fields.error(str(e), path) from e


def _to_sim_config(values: Dict[str, Any], fields: _Fields) -> SimConfig:
    cfg = SimConfig()
    if "grid.N" in values:
        cfg = _apply(cfg, "grid.N", fields, size=values["grid.N"])
    if "grid.L" in values:
        cfg = _apply(cfg, "grid.L", fields, half_length=values["grid.L"])

    simple = (
        ("cutoff_n", "cutoff"),
        ("weight.a", "weight_a"),
        ("time.dt", "dt"),
        ("time.T", "final_time"),
        ("quad.alpha_nodes_per_decade", "alpha_nodes_per_decade"),
        ("quad.alpha_min", "alpha_min"),
        ("quad.alpha_max", "alpha_max"),
        ("output.cadence", "cadence"),
        ("output.keep_states", "keep_states"),
        ("seed", "seed"),
        ("init.file", "init_file"),
        ("init.modes", "init_modes"),
    )
    for path, name in simple:
        if path in values:
            cfg = _apply(cfg, path, fields, **{name: values[path]})

    if "weight.kind" in values:
        try:
            kind = WeightKind(values["weight.kind"])
        except ValueError:
            choices = ", ".join(k.value for k in WeightKind)
            raise fields.error(f"expected one of {choices}, got {values['weight.kind']!r}", "weight.kind") from None
        cfg = _apply(cfg, "weight.kind", fields, weight_kind=kind)

    random_keys = {p.split(".")[-1]: v for p, v in values.items() if p.startswith("init.random.")}
    if random_keys:
        init_random = _build(lambda: RandomInit(**random_keys), "init.random", fields)
        cfg = _apply(cfg, "init.random", fields, init_random=init_random)

    constant_keys = {p.split(".")[-1]: v for p, v in values.items() if p.startswith("constants.")}
    if constant_keys:
        constants = _build(lambda: Constants(**constant_keys), "constants", fields)
        cfg = _apply(cfg, "constants", fields, constants=constants)

    if cfg.weight_kind is WeightKind.DATA_ADAPTED and not (cfg.init_modes or cfg.init_file or cfg.init_random):
        raise fields.error("data-adapted weights need initial data (init.modes, init.file or init.random)",
                           "weight.kind")
    if cfg.init_file is not None:
        if not Path(cfg.init_file).is_file():
            raise fields.error(f"file not found: {cfg.init_file}", "init.file")
        _build(cfg.initial_data, "init.file", fields)
    return cfg


def parse_config(text: str, source: str = "<string>") -> ConfigDocument:
    """
    Parse and validate a configuration document.

    Args:
        text: YAML or JSON text
        source: name used in log messages

    Raises:
        ConfigError: on syntax errors, unknown keys, type mismatches and constraint violations
    """
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        line = mark.line + 1 if mark is not None else None
        raise ConfigError(f"invalid YAML: {getattr(e, 'problem', None) or e}", "", line) from e

    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("top level must be a mapping", "", 1)

    fields = _Fields(_key_lines(node))
    values = _check_keys(data, SCHEMA, fields)
    sim = _to_sim_config(values, fields)

    sweep = None
    if any(p.startswith("sweep.") for p in values):
        missing = [a for a in ("amplitudes", "cutoffs", "dts") if f"sweep.{a}" not in values]
        if missing:
            raise fields.error("missing required key", f"sweep.{missing[0]}")
        sweep = _build(lambda: SweepSpec(values["sweep.amplitudes"], values["sweep.cutoffs"], values["sweep.dts"]),
                       "sweep", fields)
        for i, cutoff in enumerate(sweep.cutoffs):
            _apply(sim, f"sweep.cutoffs[{i}]", fields, cutoff=cutoff)

    logger.debug("parsed %s: N=%d L=%g n=%g dt=%g", source, sim.size, sim.half_length, sim.n, sim.time_step)
    return ConfigDocument(sim=sim, sweep=sweep, source=source)


class ConfigReader:
    """Run document on disk; parsed lazily and cached after the first load."""

    def __init__(self, config_path: str):
        """
        Args:
            config_path: simulate or sweep document, YAML or JSON. A relative
                init.file inside it is resolved against the working directory.
        """
        self.config_path = Path(config_path)
        self._document: Optional[ConfigDocument] = None

    def load_config(self) -> ConfigDocument:
        """Load and validate the configuration file."""
        if not self.config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {self.config_path}")
        try:
            text = self.config_path.read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise ConfigError(f"not UTF-8 text: {e}") from e
        self._document = parse_config(text, source=str(self.config_path))
        return self._document

    def get_sim_config(self) -> SimConfig:
        if self._document is None:
            self.load_config()
        return self._document.sim

    def get_sweep_spec(self) -> Optional[SweepSpec]:
        if self._document is None:
            self.load_config()
        return self._document.sweep

    def validate_config(self) -> List[str]:
        """The located error of the document as a one-element list, or [] when it parses."""
        try:
            self.load_config()
        except (FileNotFoundError, ConfigError) as e:
            return [str(e)]
        return []
