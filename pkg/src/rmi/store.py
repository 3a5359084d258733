"""Folder-based persistence of samples.

A stored sample is a directory holding two UTF-8, LF-terminated files:

``model.txt``
    ``key: value`` lines, in this order: ``format_version``, ``name``,
    ``kind`` (``builtin`` or ``custom``), ``n``, then for built-in models
    ``D``, ``spec_kind`` (``p``, ``p-list``, ``M`` or ``M-list``),
    ``spec_values`` (comma-separated), ``strategy``, ``output``; for custom
    models ``parameters`` (opaque text) and ``data_kind``; finally ``seed``
    and ``sample_size``.
``data.txt``
    one draw per line, generators comma-separated in canonical order,
    ``0`` for the empty set / zero ideal.

Custom generators are not persisted; their samples read back with
``parameters`` as the stored text.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .models import ModelParams, Output, Sample, Strategy, get_data
from .monomials import MonomialIdeal, MonomialSet, ParseError, parse_ideal, parse_set, render

FORMAT_VERSION = 1
MODEL_FILE = "model.txt"
DATA_FILE = "data.txt"

__all__ = ["SampleFormatError", "write_sample", "read_sample", "get_data", "Sample"]


class SampleFormatError(ValueError):
    def __init__(self, path: Path, line: int, msg: str):
        super().__init__(f"{path}:{line}: {msg}")
        self.path = path
        self.line = line


def _fmt_number(v) -> str:
    return repr(v) if isinstance(v, float) else str(v)


def _parse_number(text: str):
    if "/" in text:
        return Fraction(text)
    try:
        return int(text)
    except ValueError:
        return float(text)


def _model_lines(s: Sample) -> list[tuple[str, str]]:
    if not s.data:
        raise ValueError("cannot store an empty sample")
    kinds = {type(d) for d in s.data}
    if len(kinds) != 1:
        raise ValueError("sample mixes monomial sets and ideals")
    ns = {d.n for d in s.data}
    if len(ns) != 1:
        raise ValueError("sample mixes different numbers of variables")
    n = ns.pop()
    data_kind = "ideals" if kinds.pop() is MonomialIdeal else "sets"

    lines = [("format_version", str(FORMAT_VERSION)), ("name", s.model_name)]
    params = s.parameters
    if isinstance(params, ModelParams):
        if params.n != n:
            raise ValueError(f"draws have n={n} but parameters say n={params.n}")
        spec = params.p if params.p is not None else params.M
        kind = params.spec_kind + ("-list" if isinstance(spec, tuple) else "")
        values = spec if isinstance(spec, tuple) else (spec,)
        lines += [
            ("kind", "builtin"),
            ("n", str(params.n)),
            ("D", str(params.D)),
            ("spec_kind", kind),
            ("spec_values", ",".join(_fmt_number(v) for v in values)),
            ("strategy", params.strategy.value),
            ("output", params.output.value),
        ]
    else:
        lines += [
            ("kind", "custom"),
            ("n", str(n)),
            ("parameters", str(params)),
            ("data_kind", data_kind),
        ]
    lines += [("seed", str(s.seed)), ("sample_size", str(s.sample_size))]
    for key, value in lines:
        if "\n" in value or "\r" in value:
            raise ValueError(f"model field {key!r} contains a line break")
    return lines


def write_sample(s: Sample, path) -> Path:
    """Write ``s`` into a new directory ``path``; refuses to overwrite a stored sample."""
    path = Path(path)
    if path.exists() and not path.is_dir():
        raise FileExistsError(f"{path} exists and is not a directory")
    if (path / MODEL_FILE).exists() or (path / DATA_FILE).exists():
        raise FileExistsError(f"{path} already contains a sample")
    model_text = "".join(f"{k}: {v}\n" for k, v in _model_lines(s))
    data_text = "".join(render(d) + "\n" for d in s.data)
    try:
        path.mkdir(parents=True, exist_ok=True)
        (path / MODEL_FILE).write_text(model_text, encoding="utf-8", newline="\n")
        (path / DATA_FILE).write_text(data_text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OSError(f"failed to write sample to {path}: {exc}") from exc
    return path


def _read_lines(file: Path) -> list[str]:
    try:
        text = file.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise SampleFormatError(file, 0, "file is missing") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise SampleFormatError(file, 0, str(exc)) from exc
    if text and not text.endswith("\n"):
        raise SampleFormatError(file, text.count("\n") + 1, "missing final newline")
    return text.split("\n")[:-1]


def _read_model(file: Path) -> dict[str, str]:
    meta: dict[str, str] = {}
    for lineno, line in enumerate(_read_lines(file), 1):
        key, sep, value = line.partition(": ")
        if not sep or not key:
            raise SampleFormatError(file, lineno, f"expected 'key: value', got {line!r}")
        if key in meta:
            raise SampleFormatError(file, lineno, f"duplicate key {key!r}")
        meta[key] = value
    return meta


def _field(meta: dict, key: str, file: Path):
    try:
        return meta[key]
    except KeyError:
        raise SampleFormatError(file, 0, f"missing key {key!r}") from None


def read_sample(path) -> Sample:
    """Load a sample stored by :func:`write_sample`."""
    path = Path(path)
    mfile, dfile = path / MODEL_FILE, path / DATA_FILE
    if not path.is_dir():
        raise FileNotFoundError(f"no sample directory at {path}")
    meta = _read_model(mfile)
    try:
        version = int(_field(meta, "format_version", mfile))
        if version != FORMAT_VERSION:
            raise SampleFormatError(mfile, 0, f"unsupported format_version {version}")
        name = _field(meta, "name", mfile)
        kind = _field(meta, "kind", mfile)
        n = int(_field(meta, "n", mfile))
        seed = int(_field(meta, "seed", mfile))
        size = int(_field(meta, "sample_size", mfile))
        if kind == "builtin":
            spec_kind = _field(meta, "spec_kind", mfile)
            values = tuple(_parse_number(v) for v in _field(meta, "spec_values", mfile).split(","))
            spec = values if spec_kind.endswith("-list") else values[0]
            key = spec_kind.removesuffix("-list")
            if key not in ("p", "M"):
                raise SampleFormatError(mfile, 0, f"unknown spec_kind {spec_kind!r}")
            params = ModelParams(
                n,
                int(_field(meta, "D", mfile)),
                **{key: spec},
                strategy=Strategy(_field(meta, "strategy", mfile)),
                output=Output(_field(meta, "output", mfile)),
            )
            as_ideals = params.output is Output.IDEALS
            parameters = params
        elif kind == "custom":
            parameters = _field(meta, "parameters", mfile)
            data_kind = _field(meta, "data_kind", mfile)
            if data_kind not in ("sets", "ideals"):
                raise SampleFormatError(mfile, 0, f"unknown data_kind {data_kind!r}")
            as_ideals = data_kind == "ideals"
        else:
            raise SampleFormatError(mfile, 0, f"unknown model kind {kind!r}")
    except SampleFormatError:
        raise
    except ValueError as exc:
        raise SampleFormatError(mfile, 0, str(exc)) from exc

    data: list[MonomialSet | MonomialIdeal] = []
    for lineno, line in enumerate(_read_lines(dfile), 1):
        try:
            data.append(parse_ideal(line, n) if as_ideals else parse_set(line, n))
        except (ParseError, ValueError) as exc:
            raise SampleFormatError(dfile, lineno, str(exc)) from exc
    if len(data) != size:
        raise SampleFormatError(dfile, len(data), f"expected {size} draws, found {len(data)}")
    return Sample(name, parameters, size, seed, tuple(data))

