"""Parameter sweeps over lattice families, emitted as CSV or JSON.

A sweep config is flat ``key = value`` text; ``#`` starts a comment::

    family = cycle
    dims = 100
    r = 1
    axis = overhead
    axis_values = 1..10
    metrics = connectivity, sync_ratio
    format = csv

``axis`` chooses what ``axis_values`` replaces:

* ``overhead``  -- ``r``
* ``nodes``     -- every entry of ``dims``
* ``dimsizes``  -- ``dims[axis_dim]`` only (``axis_dim`` defaults to 0)
* ``dimension`` -- the number of dimensions ``m`` of a ``torusm``, each of
  size ``dims[0]``

Ranges are written ``a..b`` or ``a..b:step`` (inclusive), lists as
``1, 2, 5``. Every row is computed from scratch, so any single row can be
reproduced by sweeping over that value alone.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass

from latticesync.errors import LatticeSyncError
from latticesync.sync import sync_exact
from latticesync.topology import Family, GraphSpec, validate_spec

FIELDS = ("axis", "N", "connectivity", "sync_ratio", "ratio_paper", "deviation", "status")
METRICS = ("connectivity", "sync_ratio", "ratio_paper", "deviation")
OUTPUT_FORMATS = ("csv", "json")


class ConfigError(LatticeSyncError):
    pass


class Axis(str, enum.Enum):
    OVERHEAD = "overhead"
    NODES = "nodes"
    DIMSIZES = "dimsizes"
    DIMENSION = "dimension"


def parse_int_range(text: str) -> list[int]:
    """Parse ``"7"``, ``"3..9"`` or ``"6..60:2"`` into a list of integers."""
    text = text.strip()
    try:
        if ".." not in text:
            return [int(text)]
        lo, _, rest = text.partition("..")
        hi, _, step = rest.partition(":")
        step = int(step) if step else 1
        if step < 1:
            raise ConfigError(f"range step must be positive: {text!r}")
        return list(range(int(lo), int(hi) + 1, step))
    except ValueError:
        raise ConfigError(f"not an integer or range: {text!r}") from None


def parse_int_list(text: str) -> list[int]:
    """Comma-separated integers and ranges, flattened in order."""
    values = []
    for part in text.split(","):
        if part.strip():
            values.extend(parse_int_range(part))
    if not values:
        raise ConfigError(f"empty integer list: {text!r}")
    return values


@dataclass(frozen=True)
class SweepConfig:
    family: Family
    axis: Axis
    axis_values: tuple[int, ...]
    dims: tuple[int, ...] = ()
    r: int = 1
    axis_dim: int = 0
    metrics: tuple[str, ...] = ("connectivity", "sync_ratio")
    output_format: str = "csv"
    output: str | None = None

    def __post_init__(self):
        values = self.axis_values
        if not values:
            raise ConfigError("axis_values is empty")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ConfigError("axis_values must be strictly increasing")
        unknown = set(self.metrics) - set(METRICS)
        if unknown:
            raise ConfigError(f"unknown metrics: {sorted(unknown)}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"format must be one of {OUTPUT_FORMATS}")
        if self.axis is Axis.DIMENSION and self.family is not Family.TORUSM:
            raise ConfigError("axis 'dimension' needs family 'torusm'")
        if self.axis is not Axis.NODES and not self.dims:
            raise ConfigError(f"axis '{self.axis.value}' needs fixed dims")
        if self.axis is Axis.DIMSIZES and not 0 <= self.axis_dim < len(self.dims):
            raise ConfigError(f"axis_dim {self.axis_dim} outside dims")

    def spec_for(self, value: int) -> GraphSpec:
        dims, r = list(self.dims), self.r
        if self.axis is Axis.OVERHEAD:
            r = value
        elif self.axis is Axis.NODES:
            dims = [value] * max(len(dims), 1)
        elif self.axis is Axis.DIMSIZES:
            dims[self.axis_dim] = value
        else:
            dims = [dims[0]] * value
        return GraphSpec(self.family, tuple(dims), r)


def parse_config(text: str) -> SweepConfig:
    raw = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        raw[key.strip().lower()] = value.strip()

    known = {"family", "dims", "r", "axis", "axis_values", "axis_dim", "metrics", "format", "output"}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown keys: {sorted(unknown)}")
    for key in ("family", "axis", "axis_values"):
        if key not in raw:
            raise ConfigError(f"missing required key {key!r}")
    try:
        family = Family(raw["family"].lower())
        axis = Axis(raw["axis"].lower())
    except ValueError as exc:
        raise ConfigError(str(exc)) from None

    kwargs = {}
    if "dims" in raw:
        kwargs["dims"] = tuple(parse_int_list(raw["dims"]))
    if "r" in raw:
        kwargs["r"] = parse_int_range(raw["r"])[0]
    if "axis_dim" in raw:
        kwargs["axis_dim"] = parse_int_range(raw["axis_dim"])[0]
    if "metrics" in raw:
        kwargs["metrics"] = tuple(m.strip().lower() for m in raw["metrics"].split(",") if m.strip())
    if "format" in raw:
        kwargs["output_format"] = raw["format"].lower()
    if raw.get("output"):
        kwargs["output"] = raw["output"]
    return SweepConfig(
        family=family, axis=axis, axis_values=tuple(parse_int_list(raw["axis_values"])), **kwargs
    )


@dataclass(frozen=True)
class ReportRow:
    axis_value: int
    N: int | None = None
    connectivity: float | None = None
    sync_ratio: float | None = None
    ratio_paper: float | None = None
    deviation: float | None = None
    status: str = "ok"


def compute_row(config: SweepConfig, value: int) -> ReportRow:
    spec = config.spec_for(value)
    try:
        validate_spec(spec)
    except LatticeSyncError as exc:
        return ReportRow(axis_value=value, status=f"skipped: {exc}")
    report = sync_exact(spec)
    computed = {
        "connectivity": report.lambda_conn,
        "sync_ratio": report.ratio_exact,
        "ratio_paper": report.ratio_paper,
        "deviation": report.deviation,
    }
    kept = {name: computed[name] for name in config.metrics}
    missing = [name for name, v in kept.items() if v is None or not math.isfinite(v)]
    status = f"skipped: no value for {', '.join(missing)}" if missing else "ok"
    return ReportRow(axis_value=value, N=spec.num_nodes, status=status, **kept)


def run_sweep(config: SweepConfig) -> list[ReportRow]:
    return [compute_row(config, v) for v in config.axis_values]


def format_float(x: float) -> str:
    """Fixed 15-significant-digit text, stable across runs and platforms."""
    return format(x, ".15g")


def _row_cells(row: ReportRow) -> dict[str, str]:
    cells = {"axis": str(row.axis_value), "N": "" if row.N is None else str(row.N)}
    for name in METRICS:
        value = getattr(row, name)
        cells[name] = "" if value is None else format_float(value)
    cells["status"] = row.status
    return cells


def render_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(_row_cells(row))
    return buf.getvalue()


def render_json(rows: list[ReportRow]) -> str:
    records = []
    for row in rows:
        cells = _row_cells(row)
        record = {"axis": row.axis_value, "N": row.N}
        for name in METRICS:
            record[name] = float(cells[name]) if cells[name] else None
        record["status"] = row.status
        records.append(record)
    return json.dumps(records, indent=2) + "\n"


def render(rows: list[ReportRow], output_format: str) -> str:
    return render_csv(rows) if output_format == "csv" else render_json(rows)

