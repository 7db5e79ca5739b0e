"""Reading semigroup files and writing JSON envelopes."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .errors import InputError
from .semigroup import AffineSemigroup

SAFE_INT = 2 ** 53


def load_input(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    validate_input(data)
    return data


def _vectors(raw, dim, what):
    if not isinstance(raw, list):
        raise InputError(f"{what} must be a list of integer arrays")
    out = []
    for v in raw:
        if not isinstance(v, list) or len(v) != dim or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in v):
            raise InputError(f"{what}: {v!r} is not an integer array of length {dim}")
        if any(x < 0 for x in v):
            raise InputError(f"{what}: {v!r} has a negative entry")
        out.append(tuple(v))
    return out


def validate_input(data) -> None:
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("'dim' must be a positive integer")
    has_gens, has_pi = "generators" in data, "pi" in data
    if has_gens == has_pi:
        raise InputError("exactly one of 'generators' and 'pi' must be present")
    if has_gens:
        _vectors(data["generators"], dim, "generators")
    else:
        pi = data["pi"]
        if not isinstance(pi, dict) or "a" not in pi or "t_generators" not in pi:
            raise InputError("'pi' needs 'a' and 't_generators'")
        _vectors([pi["a"]], dim, "pi.a")
        _vectors(pi["t_generators"], dim, "pi.t_generators")


def semigroup_from(data) -> AffineSemigroup:
    if "generators" not in data:
        raise InputError("this command needs a 'generators' input")
    return AffineSemigroup(_vectors(data["generators"], data["dim"], "generators"), data["dim"])


def pi_from(data):
    from .constructions import pi_construct
    pi = data["pi"]
    return pi_construct(_vectors(pi["t_generators"], data["dim"], "pi.t_generators"),
                        tuple(pi["a"]))


def digest(data) -> str:
    blob = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


def jsonable(obj):
    """Tuples to lists, ints beyond 2^53 to decimal strings, Fractions to strings."""
    if isinstance(obj, (bool, str, float)) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"{text!r} is not a comma-separated integer vector") from None


def dumps(envelope) -> str:
    return json.dumps(jsonable(envelope), sort_keys=True, indent=2) + "\n"
