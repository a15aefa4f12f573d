"""Flat-file formats shared by the CLI.

All documents are JSON text with every float written as a 17-significant-
digit decimal, which round-trips IEEE doubles exactly and keeps files
diffable across implementations.

    matrix:        {"dim": d, "entries": [[re, im], ...]}      length d*d, row-major
    state:         {"l": l, "n": n, "amplitudes": [[re, im], ...]}  length l^n
    function:      {"l": l, "values": [v0, ..., v_{l-1}]}
    coefficients:  {"l": l, "coefficients": [[re, im], ...]}   length l*l,
                   row-major over (shift power, clock power)

Loaders raise :class:`FormatError` on any structural problem.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from .circuit import QuditState

__all__ = [
    "FormatError",
    "format_float",
    "save_matrix",
    "load_matrix",
    "save_state",
    "load_state",
    "save_function_table",
    "load_function_table",
    "save_weyl_coefficients",
    "load_weyl_coefficients",
]

PathLike = Union[str, Path]


class FormatError(ValueError):
    """A document does not match its declared schema."""


def format_float(x: float) -> str:
    """17-significant-digit decimal; exact round-trip for float64."""
    return format(float(x), ".17g")


def _pair_list(values: Sequence[complex]) -> str:
    return ", ".join(
        f"[{format_float(z.real)}, {format_float(z.imag)}]" for z in values
    )


def _read_json(path: PathLike) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: expected a JSON object")
    return data


def _get_int(data: dict, key: str, path: PathLike, minimum: int) -> int:
    value = data.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise FormatError(f"{path}: field {key!r} must be an integer >= {minimum}")
    return value


def _get_pairs(data: dict, key: str, path: PathLike, expected: int) -> np.ndarray:
    raw = data.get(key)
    if not isinstance(raw, list) or len(raw) != expected:
        raise FormatError(f"{path}: field {key!r} must be a list of {expected} [re, im] pairs")
    out = np.empty(expected, dtype=complex)
    for idx, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
        ):
            raise FormatError(f"{path}: {key}[{idx}] is not a [re, im] pair")
        out[idx] = complex(pair[0], pair[1])
    if not np.all(np.isfinite(out)):
        raise FormatError(f"{path}: field {key!r} contains non-finite values")
    return out


def save_matrix(path: PathLike, matrix: np.ndarray) -> None:
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    text = (
        "{\n"
        f'  "dim": {m.shape[0]},\n'
        f'  "entries": [{_pair_list(m.ravel())}]\n'
        "}\n"
    )
    Path(path).write_text(text)


def load_matrix(path: PathLike) -> np.ndarray:
    data = _read_json(path)
    dim = _get_int(data, "dim", path, 1)
    entries = _get_pairs(data, "entries", path, dim * dim)
    return entries.reshape(dim, dim)


def save_state(path: PathLike, state: QuditState) -> None:
    text = (
        "{\n"
        f'  "l": {state.l},\n'
        f'  "n": {state.n},\n'
        f'  "amplitudes": [{_pair_list(state.amplitudes)}]\n'
        "}\n"
    )
    Path(path).write_text(text)


def load_state(path: PathLike) -> QuditState:
    data = _read_json(path)
    l = _get_int(data, "l", path, 2)
    n = _get_int(data, "n", path, 1)
    amplitudes = _get_pairs(data, "amplitudes", path, l**n)
    return QuditState(l, n, amplitudes)


def save_function_table(path: PathLike, values: Sequence[int], l: int) -> None:
    body = ", ".join(str(int(v)) for v in values)
    Path(path).write_text("{\n" + f'  "l": {int(l)},\n  "values": [{body}]\n' + "}\n")


def load_function_table(path: PathLike) -> tuple[List[int], int]:
    data = _read_json(path)
    l = _get_int(data, "l", path, 2)
    raw = data.get("values")
    if not isinstance(raw, list) or len(raw) != l:
        raise FormatError(f"{path}: field 'values' must be a list of {l} integers")
    values = []
    for idx, v in enumerate(raw):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < l:
            raise FormatError(f"{path}: values[{idx}] must be an integer in [0, {l})")
        values.append(v)
    return values, l


def save_weyl_coefficients(path: PathLike, table: np.ndarray) -> None:
    t = np.asarray(table, dtype=complex)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValueError(f"coefficient table must be square, got shape {t.shape}")
    text = (
        "{\n"
        f'  "l": {t.shape[0]},\n'
        f'  "coefficients": [{_pair_list(t.ravel())}]\n'
        "}\n"
    )
    Path(path).write_text(text)


def load_weyl_coefficients(path: PathLike) -> np.ndarray:
    data = _read_json(path)
    l = _get_int(data, "l", path, 2)
    coefficients = _get_pairs(data, "coefficients", path, l * l)
    return coefficients.reshape(l, l)
