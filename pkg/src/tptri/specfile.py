"""Human-writable TOML spec files.

A numeric spec::

    name = "bell"
    r = 1                 # constant
    s = "k + 1"           # expression in k
    t = { slope = 1 }     # affine: slope*k + intercept
    golden = [[1], [1, 1], [2, 3, 1]]

Lists give explicit values (``r`` and ``t`` start at k = 1, ``s`` at k = 0)
and may contain exact strings such as ``"1/2"``.  With ``kind = "q"`` the
values are polynomials in ``q``, e.g. ``s = "1 + q"`` or ``t = ["q", "q^2"]``.
"""

from __future__ import annotations

import sys
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .arith import parse_qpoly, to_scalar
from .errors import SpecError
from .qanalogue import Q_CATALOG, QCoefficientSpec
from .triangles import CATALOG, CoefficientSpec

_KEYS = {"name", "kind", "r", "s", "t", "golden"}


def _scalar_item(x):
    if isinstance(x, float):
        raise SpecError(f"floating point value {x!r} is not exact; write it as a fraction string")
    return to_scalar(x)


def _field(value, poly):
    if isinstance(value, float):
        raise SpecError(f"floating point value {value!r} is not exact; write it as a fraction string")
    if isinstance(value, list):
        return [parse_qpoly(v) if poly else _scalar_item(v) for v in value]
    if poly and isinstance(value, (int, str)) and not isinstance(value, bool):
        return str(value)
    return value


def parse_spec(text: str, default_name="custom"):
    """Parse spec text into a :class:`CoefficientSpec` or :class:`QCoefficientSpec`."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise SpecError(f"malformed spec file: {exc}") from exc
    unknown = set(data) - _KEYS
    if unknown:
        raise SpecError(f"unknown spec keys: {', '.join(sorted(unknown))}")
    missing = {"r", "s", "t"} - set(data)
    if missing:
        raise SpecError(f"spec is missing: {', '.join(sorted(missing))}")
    kind = data.get("kind", "numeric")
    if kind not in ("numeric", "q"):
        raise SpecError(f"kind must be 'numeric' or 'q', got {kind!r}")
    name = data.get("name", default_name)
    poly = kind == "q"
    r, s, t = (_field(data[key], poly) for key in "rst")
    if poly:
        if "golden" in data:
            raise SpecError("golden rows are only supported for numeric specs")
        return QCoefficientSpec.of(r, s, t, name=name)
    golden = data.get("golden")
    if golden is not None:
        golden = [[_scalar_item(x) for x in row] for row in golden]
    return CoefficientSpec.of(r, s, t, name=name, golden=golden)


def load_spec(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"cannot read spec file {path}: {exc}") from exc
    return parse_spec(text, default_name=path.stem)


def resolve_spec(ref: str):
    """Catalog name (numeric or q) or path to a spec file."""
    if ref in CATALOG:
        return CATALOG[ref]
    if ref in Q_CATALOG:
        return Q_CATALOG[ref]
    if Path(ref).suffix or Path(ref).exists():
        return load_spec(ref)
    known = ", ".join(list(CATALOG) + list(Q_CATALOG))
    raise SpecError(f"unknown catalog entry {ref!r}; known: {known}")
