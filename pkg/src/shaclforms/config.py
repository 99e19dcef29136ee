"""Service configuration: one JSON file, fully validated at startup."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .rdf import Term, iri, literal
from .submission import MintingConfig
from .validators import (
    REQUIRED_VALIDATOR,
    Condition,
    ValidatorBinding,
    ValidatorRegistry,
    default_registry,
)


class ConfigError(Exception):
    pass


@dataclass
class ProbeConfig:
    mode: str = "live"  # "live" | "mock"
    fixtures_path: str | None = None


@dataclass
class ServiceConfig:
    shapes_path: str
    bindings: list[ValidatorBinding] = field(default_factory=list)
    label_overrides: dict[str, str] = field(default_factory=dict)
    minting: MintingConfig = field(default_factory=lambda: MintingConfig(base_iri="urn:uuid:"))
    endpoint_url: str | None = None
    probe: ProbeConfig = field(default_factory=ProbeConfig)
    listen_address: str = "127.0.0.1:8000"
    static_dir: str | None = None

    def listen_host_port(self) -> tuple[str, int]:
        host, _, port = self.listen_address.rpartition(":")
        if not host or not port.isdigit():
            raise ConfigError(f"listen_address must be host:port, got {self.listen_address!r}")
        return host, int(port)


def _parse_equals(data: object) -> Term:
    if isinstance(data, dict):
        if "iri" in data:
            return iri(data["iri"])
        if "literal" in data:
            return literal(data["literal"], datatype=data.get("datatype"), language=data.get("language"))
    raise ConfigError(f"a condition 'equals' must be an object with 'iri' or 'literal', got {data!r}")


def _parse_condition(data: object) -> Condition:
    if not isinstance(data, dict) or "path" not in data or "equals" not in data:
        raise ConfigError(f"a condition needs 'path' and 'equals', got {data!r}")
    return Condition(when_path=data["path"], equals=_parse_equals(data["equals"]))


def _parse_binding(data: object, registry: ValidatorRegistry) -> ValidatorBinding:
    if not isinstance(data, dict):
        raise ConfigError(f"a binding must be an object, got {data!r}")
    for key in ("validator", "shape", "path", "mode"):
        if key not in data:
            raise ConfigError(f"binding is missing {key!r}: {data!r}")
    name = data["validator"]
    mode = data["mode"]
    if not registry.knows(name):
        raise ConfigError(f"unknown validator name {name!r}")
    if mode not in ("syntactic", "external"):
        raise ConfigError(f"binding mode must be 'syntactic' or 'external', got {mode!r}")
    if registry.is_external(name) and mode != "external":
        raise ConfigError(f"validator {name!r} contacts external services and must be external-mode")
    condition = _parse_condition(data["condition"]) if data.get("condition") else None
    if name == REQUIRED_VALIDATOR and condition is None:
        raise ConfigError("a 'required' binding needs a condition (use sh:minCount otherwise)")
    return ValidatorBinding(
        validator_name=name,
        shape_id=data["shape"],
        path=data["path"],
        mode=mode,
        condition=condition,
    )


def load_config(path: str | Path) -> ServiceConfig:
    """Read and validate a config file; relative paths resolve against it."""
    config_path = Path(path)
    try:
        raw = json.loads(config_path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config file {config_path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {config_path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")

    base_dir = config_path.resolve().parent

    def resolve_path(value: str) -> str:
        p = Path(value)
        return str(p if p.is_absolute() else base_dir / p)

    shapes_path = raw.get("shapes_path")
    if not isinstance(shapes_path, str):
        raise ConfigError("config needs a 'shapes_path' string")
    shapes_path = resolve_path(shapes_path)
    if not Path(shapes_path).is_file():
        raise ConfigError(f"shapes file {shapes_path} is not readable")

    registry = default_registry()
    bindings = [_parse_binding(b, registry) for b in raw.get("bindings", [])]

    label_overrides = raw.get("label_overrides", {})
    if not isinstance(label_overrides, dict):
        raise ConfigError("'label_overrides' must map IRIs to labels")

    minting_raw = raw.get("minting", {})
    minting = MintingConfig(
        base_iri=minting_raw.get("base_iri", "urn:uuid:"),
        strategy=minting_raw.get("strategy", "uuid"),
        counter_state_path=(
            resolve_path(minting_raw["counter_state_path"])
            if minting_raw.get("counter_state_path")
            else None
        ),
    )
    if minting.strategy not in ("uuid", "counter"):
        raise ConfigError(f"minting strategy must be 'uuid' or 'counter', got {minting.strategy!r}")
    if minting.strategy == "counter":
        if not minting.counter_state_path:
            raise ConfigError("counter minting needs a 'counter_state_path'")
        try:
            with open(minting.counter_state_path, "a", encoding="utf-8"):
                pass
        except OSError as exc:
            raise ConfigError(f"counter state file is not writable: {exc}") from exc

    probe_raw = raw.get("probe", {})
    probe = ProbeConfig(
        mode=probe_raw.get("mode", "live"),
        fixtures_path=(
            resolve_path(probe_raw["fixtures_path"]) if probe_raw.get("fixtures_path") else None
        ),
    )
    if probe.mode not in ("live", "mock"):
        raise ConfigError(f"probe mode must be 'live' or 'mock', got {probe.mode!r}")
    if probe.mode == "mock":
        if not probe.fixtures_path or not Path(probe.fixtures_path).is_file():
            raise ConfigError("mock probe needs a readable 'fixtures_path'")

    static_dir = raw.get("static_dir")
    if static_dir is not None:
        static_dir = resolve_path(static_dir)

    config = ServiceConfig(
        shapes_path=shapes_path,
        bindings=bindings,
        label_overrides=dict(label_overrides),
        minting=minting,
        endpoint_url=raw.get("endpoint_url"),
        probe=probe,
        listen_address=raw.get("listen_address", "127.0.0.1:8000"),
        static_dir=static_dir,
    )
    config.listen_host_port()
    return config


def load_probe_fixtures(path: str) -> dict[str, object]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read probe fixtures {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("probe fixtures must be a JSON object mapping URLs to statuses")
    return data
