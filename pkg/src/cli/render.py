"""Serializers for Betti tables and verification reports. Everything written here
goes to stdout and must not depend on anything but its inputs."""
import csv
import io
import json
from typing import Any, Iterable, Sequence

from predictor.betti import SHIFT_NAMES, BettiTable
from scheme.params import BiDegree, NormalizationRecord


def display_order(module) -> list[tuple[BiDegree, int]]:
    """Shifts sorted by (total degree, a), largest first."""
    return sorted(module.items(), key=lambda item: (item[0].total, item[0].a), reverse=True)


def render_summand(d: BiDegree, n: int) -> str:
    summand = f"R({-d.a},{-d.b})" if d.total else "R"
    return summand if n == 1 else f"{summand}^{n}"


def render_text(table: BettiTable) -> str:
    lines = []
    for k in range(3):
        module = display_order(table.module(k))
        body = " ⊕ ".join(render_summand(d, n) for d, n in module) if module else "0"
        lines.append(f"F{k} = {body}")
    return "\n".join(lines)


def table_payload(table: BettiTable, record: NormalizationRecord | None = None) -> dict[str, Any]:
    payload: dict[str, Any] = dict(table.as_lists())
    payload["normalization"] = {"transposed": bool(record and record.transposed)}
    return payload


def render_json(table: BettiTable, record: NormalizationRecord | None = None) -> str:
    return json.dumps(table_payload(table, record), indent=2)


def parse_json(text: str) -> tuple[BettiTable, NormalizationRecord]:
    payload = json.loads(text)
    table = BettiTable.from_lists(*(payload[name] for name in SHIFT_NAMES))
    return table, NormalizationRecord(transposed=payload["normalization"]["transposed"])


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def table_csv(table: BettiTable) -> str:
    rows = [
        (name, d.a, d.b, n)
        for k, name in enumerate(SHIFT_NAMES)
        for d, n in sorted(table.module(k).items())
    ]
    return render_csv(("module", "a", "b", "count"), rows)


def render_table(table: BettiTable, fmt: str, record: NormalizationRecord | None = None) -> str:
    if fmt == "json":
        return render_json(table, record)
    if fmt == "csv":
        return table_csv(table)
    return render_text(table)
