"""
CSV writers for traces, phi tables and sweep summaries.

Every file starts with a `# config_digest=<hex>` line followed by the header;
floats are written with 17 significant digits.
"""
import csv
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence

from ..solver import TRACE_COLUMNS, EnergyTrace
from ..weights import Phi

SWEEP_COLUMNS = ("cell", "amplitude", "cutoff", "dt", "termination", "t_final",
                 "l2", "A", "B", "smallness_pass", "l2_nonincreasing", "A_nonincreasing")


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _write_rows(path: Path, config_digest: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', newline='', encoding='utf-8') as csvfile:
        csvfile.write(f"# config_digest={config_digest}\n")
        writer = csv.writer(csvfile, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
    return str(path)


class TraceCsvReporter:
    """Energy trace as t,l2,A,B,delta,mu,lyapunov."""

    def generate_report(self, data: EnergyTrace, path: Path, config_digest: str) -> str:
        return _write_rows(path, config_digest, TRACE_COLUMNS,
                           ([float(v) for v in r.as_row()] for r in data.records))


class PhiTableCsvReporter:
    """Two columns lambda,phi at the table nodes."""

    def generate_report(self, data: Phi, path: Path, config_digest: str) -> str:
        rows = ((float(lam), float(value)) for lam, value in zip(data.lambdas, data.values))
        return _write_rows(path, config_digest, ("lambda", "phi"), rows)


class SweepCsvReporter:
    """One row per sweep cell in cell order."""

    def generate_report(self, data: List[Dict[str, Any]], path: Path, config_digest: str) -> str:
        ordered = sorted(data, key=lambda row: row["cell"])
        rows = ([row.get(column, "") for column in SWEEP_COLUMNS] for row in ordered)
        return _write_rows(path, config_digest, SWEEP_COLUMNS, rows)


def read_trace_csv(path: Path) -> Dict[str, Any]:
    """Digest and columns of a trace CSV written by TraceCsvReporter."""
    with open(path, 'r', encoding='utf-8') as csvfile:
        first = csvfile.readline().strip()
        if not first.startswith("# config_digest="):
            raise ValueError(f"{path} does not start with a config digest line")
        reader = csv.reader(csvfile)
        header = next(reader)
        columns: Dict[str, List[float]] = {name: [] for name in header}
        for row in reader:
            for name, value in zip(header, row):
                columns[name].append(float(value))
    return {"config_digest": first.split("=", 1)[1], "header": header, "columns": columns}
