import json
import logging
import time
from dataclasses import dataclass
from itertools import product
from typing import Callable

from rich.console import Console
from rich.progress import Progress
from rich.table import Table

from cli.render import render_csv, render_table
from kernel.field import FieldConfig
from kernel.powers import check_power_equality
from kernel.verification import VerificationReport, verify_params
from predictor.resolutions import predict
from scheme.params import AciParams, BiDegree
from scheme.reduction import normalize
from utils.errors import BoxTooSmallError, ResolutionLengthError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_RESOURCE = 3

SWEEP_HEADER = ("alpha1", "alpha2", "beta1", "beta2", "m11", "m12", "m21", "status", "seconds")


@dataclass(frozen=True)
class RunConfig:
    command: str
    params: AciParams | None
    field: FieldConfig
    margin: BiDegree
    fmt: str = "text"
    power: int = 2
    sweep: bool = False
    max_alpha: int = 2
    max_m: int = 3
    corrupt: bool = False


def fmt_degree(d: BiDegree) -> str:
    return f"({d.a},{d.b})"


def cmd_predict(params: AciParams, fmt: str = "text") -> str:
    table, record = predict(params)
    return render_table(table, fmt, record)


def verification_lines(report: VerificationReport) -> list[str]:
    status = "pass" if report.passed else "FAIL"
    lines = [f"verify {report.params.as_tuple()} box {fmt_degree(report.box)}: {status}"]
    for name, rows in report.diff().items():
        for d, ours, theirs in rows:
            lines.append(f"  {name} {fmt_degree(d)}: predicted {ours}, oracle {theirs}")
    for d, expected, actual in report.hilbert_mismatches:
        lines.append(f"  hilbert {fmt_degree(d)}: euler {expected}, conditions {actual}")
    for d, spanned, actual in report.family_mismatches:
        lines.append(f"  generators {fmt_degree(d)}: span {spanned}, conditions {actual}")
    return lines


def sweep_params(max_alpha: int, max_m: int) -> list[AciParams]:
    """Every block shape and multiplicity pattern up to the bounds, one per transposition class."""
    seen: dict[tuple[int, ...], AciParams] = {}
    sizes = range(1, max_alpha + 1)
    mults = range(0, max_m + 1)
    for blocks in product(sizes, sizes, sizes, sizes):
        for m in product(mults, mults, mults):
            params = AciParams(*blocks, *m)
            key = normalize(params)[0].as_tuple()
            seen.setdefault(key, params)
    return sorted(seen.values(), key=lambda p: p.as_tuple())


def run_sweep(
    instances: list[AciParams], check: Callable[[AciParams], bool]
) -> list[tuple[AciParams, str, float]]:
    results = []
    with Progress(console=Console(stderr=True), transient=True) as progress:
        task = progress.add_task("Sweeping", total=len(instances))
        for params in instances:
            start = time.perf_counter()
            try:
                status = "pass" if check(params) else "fail"
            except (BoxTooSmallError, ResolutionLengthError) as e:
                logger.warning("%s: %s", params.as_tuple(), e)
                status = "box"
            results.append((params, status, time.perf_counter() - start))
            progress.advance(task)
    return results


def sweep_summary(results: list[tuple[AciParams, str, float]]) -> None:
    table = Table(title="Sweep")
    for column in ("status", "instances"):
        table.add_column(column)
    for status in ("pass", "fail", "box"):
        table.add_row(status, str(sum(1 for _, s, _ in results if s == status)))
    Console(stderr=True).print(table)


def render_sweep(results: list[tuple[AciParams, str, float]], fmt: str) -> str:
    if fmt == "csv":
        rows = [(*params.as_tuple(), status, f"{seconds:.3f}") for params, status, seconds in results]
        return render_csv(SWEEP_HEADER, rows)
    failed = [list(params.as_tuple()) for params, status, _ in results if status != "pass"]
    if fmt == "json":
        return json.dumps({"instances": len(results), "failed": failed}, indent=2)
    lines = [f"passed {len(results) - len(failed)}/{len(results)}"]
    lines += [f"  failed {tuple(f)}" for f in failed]
    return "\n".join(lines)


def sweep_exit_code(results: list[tuple[AciParams, str, float]]) -> int:
    statuses = {status for _, status, _ in results}
    if "fail" in statuses:
        return EXIT_MISMATCH
    if "box" in statuses:
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_verify(run: RunConfig) -> tuple[str, int]:
    if run.sweep:
        instances = sweep_params(run.max_alpha, run.max_m)
        logger.info("Verifying %d instances", len(instances))
        results = run_sweep(
            instances,
            lambda params: verify_params(params, run.field, run.margin, run.corrupt).passed,
        )
        sweep_summary(results)
        return render_sweep(results, run.fmt), sweep_exit_code(results)

    assert run.params is not None
    report = verify_params(run.params, run.field, run.margin, run.corrupt)
    if run.fmt == "json":
        payload = {
            "params": list(run.params.as_tuple()),
            "passed": report.passed,
            "box": [report.box.a, report.box.b],
            "diff": {
                name: [[d.a, d.b, ours, theirs] for d, ours, theirs in rows]
                for name, rows in report.diff().items()
            },
            "hilbert_mismatches": [[d.a, d.b, e, a] for d, e, a in report.hilbert_mismatches],
            "family_mismatches": [[d.a, d.b, s, a] for d, s, a in report.family_mismatches],
        }
        output = json.dumps(payload, indent=2)
    else:
        output = "\n".join(verification_lines(report))
    return output, EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_powers(run: RunConfig) -> tuple[str, int]:
    assert run.params is not None
    report = check_power_equality(run.params, run.power, run.field, run.margin)
    if run.fmt == "json":
        output = json.dumps(
            {
                "params": list(run.params.as_tuple()),
                "m": run.power,
                "equal": report.equal,
                "degrees": [
                    [row.bidegree.a, row.bidegree.b, row.generators, row.power_dim, row.symbolic_dim]
                    for row in report.rows
                ],
            },
            indent=2,
        )
    elif run.fmt == "csv":
        output = render_csv(
            ("a", "b", "generators", "power_dim", "symbolic_dim", "equal"),
            [
                (row.bidegree.a, row.bidegree.b, row.generators, row.power_dim, row.symbolic_dim, row.equal)
                for row in report.rows
            ],
        )
    else:
        lines = [f"powers {run.params.as_tuple()} m={run.power}: {'equal' if report.equal else 'different'}"]
        for row in report.rows:
            mark = "ok" if row.equal else "DIFFERENT"
            lines.append(
                f"  {fmt_degree(row.bidegree)} generators {row.generators}: "
                f"power {row.power_dim}, symbolic {row.symbolic_dim} {mark}"
            )
        output = "\n".join(lines)
    return output, EXIT_OK if report.equal else EXIT_MISMATCH
