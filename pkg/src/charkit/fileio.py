"""JSON interchange formats.

Function file:      {"p": 3, "d": 2, "kind": "rational", "values": ["0", "1/3", ...]}
                    values in lexicographic point order, length p**d; grids over
                    Z_{p**ell} add "modulus_exponent": ell.
Spectrum values:    {"p": 3, "coeffs": ["a/b", ...]} with exactly p-1 entries
                    (cyclotomic; conductor p**ell carries "ell" and phi entries).
Complex values:     [re, im].
Sinogram:           {"p": ..., "d": ..., "masses": [{"s": [...], "m": [...]}, ...]}.
Decomposition:      {"p", "d", "form", "constant", "parts": [{"s", "coeffs"}]}.

Writers emit canonical bytes (sorted keys, two-space indent, trailing
newline) so that identical inputs produce identical files.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import DataFormatError
from .fourier import COMPLEX, CYCLOTOMIC, RATIONAL, GridFunction, Spectrum
from .geometry import Ambient, ProjectiveLine, enumerate_lines, line_through
from .multiscale import RingAmbient
from .scalars import Cyclotomic
from .wavelets import Decomposition, MassTable, Wavelet


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise DataFormatError(f"bad rational literal {text!r}") from exc


def scalar_to_payload(value):
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, Cyclotomic):
        payload = {"p": value.p, "coeffs": [format_rational(c) for c in value.coeffs]}
        if value.ell != 1:
            payload["ell"] = value.ell
        return payload
    z = complex(value)
    return [z.real, z.imag]


def scalar_from_payload(payload, kind: str, p: int, ell: int = 1):
    if kind == RATIONAL:
        return parse_rational(payload)
    if kind == CYCLOTOMIC:
        if isinstance(payload, str):
            return Cyclotomic.from_rational(p, parse_rational(payload), ell)
        if not isinstance(payload, dict) or "coeffs" not in payload:
            raise DataFormatError(f"bad cyclotomic value {payload!r}")
        vp = payload.get("p", p)
        vell = payload.get("ell", 1)
        if vp != p or vell != ell:
            raise DataFormatError(
                f"value conductor {vp}**{vell} does not match grid conductor {p}**{ell}"
            )
        return Cyclotomic(p, [parse_rational(c) for c in payload["coeffs"]], ell)
    if not isinstance(payload, (list, tuple)) or len(payload) != 2:
        raise DataFormatError(f"bad complex value {payload!r}")
    return complex(float(payload[0]), float(payload[1]))


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _require_fields(payload: dict, fields, where: str) -> None:
    missing = [name for name in fields if name not in payload]
    if missing:
        raise DataFormatError(f"{where} is missing field(s): {', '.join(missing)}")


def function_to_payload(f: GridFunction) -> dict:
    payload = {
        "p": f.ambient.p,
        "d": f.ambient.d,
        "kind": f.kind,
        "values": [scalar_to_payload(v) for v in f.values],
    }
    if f.ambient.ell != 1:
        payload["modulus_exponent"] = f.ambient.ell
    return payload


def function_from_payload(payload, spectrum: bool = False) -> GridFunction:
    if not isinstance(payload, dict):
        raise DataFormatError("function file must contain a JSON object")
    _require_fields(payload, ("p", "d", "kind", "values"), "function file")
    p, d, kind = payload["p"], payload["d"], payload["kind"]
    if kind not in (RATIONAL, CYCLOTOMIC, COMPLEX):
        raise DataFormatError(f"unknown kind {kind!r}")
    ell = payload.get("modulus_exponent", 1)
    ambient = Ambient(p, d) if ell == 1 else RingAmbient(p, ell, d)
    values = payload["values"]
    if not isinstance(values, list) or len(values) != ambient.size:
        raise DataFormatError(
            f"values must be a list of length {ambient.size}, got {len(values) if isinstance(values, list) else type(values).__name__}"
        )
    vals = [scalar_from_payload(v, kind, p, ell) for v in values]
    cls = Spectrum if spectrum else GridFunction
    return cls(ambient, kind, vals)


def save_function(f: GridFunction, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(function_to_payload(f)))


def load_function(path, spectrum: bool = False) -> GridFunction:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DataFormatError(f"{path}: not valid JSON ({exc})") from exc
    return function_from_payload(payload, spectrum=spectrum)


def sinogram_to_payload(table: MassTable) -> dict:
    return {
        "p": table.ambient.p,
        "d": table.ambient.d,
        "masses": [
            {"s": list(line.rep), "m": [scalar_to_payload(m) for m in ms]}
            for line, ms in table.rows
        ],
    }


def sinogram_from_payload(payload) -> MassTable:
    if not isinstance(payload, dict):
        raise DataFormatError("sinogram file must contain a JSON object")
    _require_fields(payload, ("p", "d", "masses"), "sinogram file")
    ambient = Ambient(payload["p"], payload["d"])
    p = ambient.p
    rows: dict = {}
    for entry in payload["masses"]:
        _require_fields(entry, ("s", "m"), "sinogram row")
        s = tuple(int(c) % p for c in entry["s"])
        if not any(s):
            raise DataFormatError("sinogram direction must be nonzero")
        if len(entry["m"]) != p:
            raise DataFormatError(f"direction {entry['s']} needs {p} masses")
        ms = [
            parse_rational(m) if isinstance(m, str) else scalar_from_payload(m, COMPLEX, p)
            for m in entry["m"]
        ]
        line = line_through(ambient, s)
        # Rebase the masses onto the canonical generator: x.s = t is the
        # same plane as x.rep = t/c where c is the first nonzero entry of s.
        first = next(c for c in s if c)
        rebased = [None] * p
        for t in range(p):
            rebased[t * pow(first, p - 2, p) % p] = ms[t]
        if line in rows:
            raise DataFormatError(f"duplicate sinogram direction through {line.rep}")
        rows[line] = tuple(rebased)
    ordered = tuple(
        (line, rows[line]) for line in enumerate_lines(ambient) if line in rows
    )
    return MassTable(ambient, ordered)


def save_sinogram(table: MassTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(sinogram_to_payload(table)))


def load_sinogram(path) -> MassTable:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DataFormatError(f"{path}: not valid JSON ({exc})") from exc
    return sinogram_from_payload(payload)


def decomposition_to_payload(dec: Decomposition) -> dict:
    return {
        "p": dec.ambient.p,
        "d": dec.ambient.d,
        "form": dec.form,
        "constant": scalar_to_payload(dec.constant),
        "parts": [
            {
                "s": list(w.direction.rep),
                "coeffs": [scalar_to_payload(c) for c in w.coeffs],
            }
            for w in dec.parts
        ],
    }


def decomposition_from_payload(payload) -> Decomposition:
    _require_fields(payload, ("p", "d", "form", "constant", "parts"), "decomposition file")
    ambient = Ambient(payload["p"], payload["d"])
    parts = []
    for entry in payload["parts"]:
        _require_fields(entry, ("s", "coeffs"), "decomposition part")
        line = ProjectiveLine(tuple(int(c) % ambient.p for c in entry["s"]))
        coeffs = tuple(parse_rational(c) for c in entry["coeffs"])
        parts.append(Wavelet(ambient, line, coeffs, form=payload["form"]))
    return Decomposition(
        ambient, payload["form"], parse_rational(payload["constant"]), tuple(parts)
    )


def bandwidth_report_payload(report) -> dict:
    return {
        "cbw": report.cbw,
        "bw": format_rational(report.bw),
        "bwd": report.bwd,
        "lines": [list(line.rep) for line in report.lines],
        "approximate": report.approximate,
    }
