"""Config ingestion: flat ``key = value`` text (``#`` comments) or JSON.

Keys are the :class:`SystemParams` field names, plus ``theta_deg`` as a
degree-valued alias for ``theta``. ``auto`` (or ``none``) leaves ``L``,
``f_s`` and ``J1p`` to be derived.
"""
from dataclasses import fields
import hashlib
import json
import math
from pathlib import Path

from .errors import ConfigError
from .params import SystemParams

_OPTIONAL = {"L", "f_s", "J1p"}
_TYPES = {f.name: f.type for f in fields(SystemParams)}
_BOOLS = {k for k, t in _TYPES.items() if t in (bool, "bool")}
_INTS = {"m", "M"}


def _coerce(key, value):
    if key == "theta_deg":
        key, value = "theta", math.radians(_coerce("theta", value)[1])
        return key, value
    if key not in _TYPES:
        raise ConfigError(f"unknown config key {key!r}")
    if isinstance(value, str):
        text = value.strip()
        low = text.lower()
        if key in _OPTIONAL and low in ("auto", "none", "null", ""):
            return key, None
        if key in _BOOLS:
            if low in ("true", "yes", "1", "on"):
                return key, True
            if low in ("false", "no", "0", "off"):
                return key, False
            raise ConfigError(f"{key}: expected a boolean, got {text!r}")
        try:
            if key in _INTS:
                return key, int(text)
            return key, float(text)
        except ValueError:
            raise ConfigError(f"{key}: cannot parse {text!r} as a number") from None
    if value is None:
        if key in _OPTIONAL:
            return key, None
        raise ConfigError(f"{key}: value required")
    if key in _BOOLS:
        if not isinstance(value, bool):
            raise ConfigError(f"{key}: expected a boolean, got {value!r}")
        return key, value
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key}: expected a number, got {value!r}")
    if key in _INTS:
        if int(value) != value:
            raise ConfigError(f"{key}: expected an integer, got {value!r}")
        return key, int(value)
    return key, float(value)


def coerce_mapping(mapping):
    return dict(_coerce(k, v) for k, v in mapping.items())


def parse_keyvalue(text):
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value, got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        out[key] = value
    return out


def parse_config_text(text, fmt=None):
    if fmt == "json" or (fmt is None and text.lstrip().startswith("{")):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON config: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError("JSON config must be an object")
        return data
    return parse_keyvalue(text)


def params_from_mapping(mapping, overrides=None):
    values = coerce_mapping(mapping)
    values.update(coerce_mapping(overrides or {}))
    return SystemParams(**values)


def load_config(path, overrides=None):
    """Read a config file; missing keys take the worked-example defaults."""
    path = Path(path)
    text = path.read_text()
    fmt = "json" if path.suffix.lower() == ".json" else None
    return params_from_mapping(parse_config_text(text, fmt), overrides)


def parse_overrides(items):
    out = {}
    for item in items or ():
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        key, value = item.split("=", 1)
        out[key.strip()] = value
    return out


def config_hash(subcommand, params, args):
    blob = json.dumps(
        {"subcommand": subcommand, "params": params.to_dict(), "args": args},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(blob.encode()).hexdigest()
