import dataclasses
import json
from enum import Enum
from fractions import Fraction
from typing import Any

import click
from rich.console import Console
from rich.table import Table
from wireup import injectable

from mimo_trt.core.interfaces.report_writer import ReportWriter
from mimo_trt.entities.report import AnalysisReport, PredictionReport, VerificationReport
from mimo_trt.entities.tradeoff import RegionLabel


def _jsonable(value: Any) -> Any:
    if isinstance(value, RegionLabel):
        return {"label": value.label, "kind": value.kind.value, "k": value.k, "delta": value.delta}
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        data = {
            field.name: _jsonable(getattr(value, field.name))
            for field in dataclasses.fields(value)
        }
        for name in ("t", "empty", "residual", "residual_db", "delta", "passed", "flagged"):
            attribute = getattr(type(value), name, None)
            if isinstance(attribute, property):
                data[name] = _jsonable(getattr(value, name))
        return data
    if isinstance(value, Fraction):
        return float(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def report_json(report: Any) -> str:
    return json.dumps(_jsonable(report), indent=2)


def _fmt(value: float | None, digits: int = 2) -> str:
    return "-" if value is None else f"{value:.{digits}f}"


def _fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value} ({float(value):.4f})"


@injectable(as_type=ReportWriter)
class RichReportWriter(ReportWriter):
    def __init__(self):
        self.console = Console(highlight=False, soft_wrap=True)

    def _emit_json(self, report: Any):
        click.echo(report_json(report))

    def prediction(self, report: PredictionReport, as_json: bool):
        if as_json:
            self._emit_json(report)
            return

        table = Table(title=f"{report.scheme} {report.m}x{report.n}")
        for column in ("k", "c", "g", "t", "region", "slope/decade", "spacings"):
            table.add_column(column)
        for region in report.regions:
            coefficients = region.tradeoff.coefficients
            bounds = region.tradeoff.region
            interval = "empty" if bounds.empty else f"({bounds.lo}, {bounds.hi})"
            spacings = ", ".join(
                f"dR={spacing.delta_r:g}: {spacing.spacing_db:.2f} dB"
                for spacing in region.spacings
            )
            table.add_row(
                str(coefficients.k),
                _fraction(coefficients.c),
                _fraction(coefficients.g),
                _fraction(coefficients.t),
                interval,
                f"{region.slope_per_decade:g}",
                spacings or "-",
            )
        self.console.print(table)

        if report.point is not None:
            point = report.point
            scheme_region = "-" if point.scheme_region is None else str(point.scheme_region)
            self.console.print(
                f"R={point.rate_bpcu:g} bpcu at {point.snr_db:g} dB: "
                f"region={point.region.label} (delta={point.region.delta:g}), "
                f"exact={point.exact_region.label}, scheme region={scheme_region}, "
                f"predicted log2 P_o={_fmt(point.log2_po)}"
            )

    def analysis(self, report: AnalysisReport, as_json: bool):
        if as_json:
            self._emit_json(report)
            return

        for family in report.families:
            slopes = Table(title=f"{family.scheme} {family.m}x{family.n} slopes")
            for column in ("R", "window dB", "points", "measured", "predicted", "residual", "note"):
                slopes.add_column(column)
            for slope in family.slopes:
                measured = slope.measured
                slopes.add_row(
                    f"{slope.rate_bpcu:g}",
                    "-" if measured is None else "{:g}..{:g}".format(*measured.snr_window_db),
                    "-" if measured is None else str(measured.points_used),
                    _fmt(None if measured is None else measured.slope_per_decade),
                    _fmt(slope.predicted),
                    _fmt(slope.residual),
                    slope.note,
                )
            self.console.print(slopes)

            if not family.spacings:
                continue
            spacings = Table(title=f"{family.scheme} {family.m}x{family.n} spacings")
            for column in ("rates", "level", "measured dB", "predicted dB", "residual", "note"):
                spacings.add_column(column)
            for spacing in family.spacings:
                measured_db = None if spacing.measured is None else spacing.measured.spacing_db
                note = spacing.note
                if spacing.measured is not None and spacing.measured.flagged:
                    note = "negative spacing (noise)"
                spacings.add_row(
                    "{:g} -> {:g}".format(*spacing.rates),
                    f"{spacing.level_p:g}",
                    _fmt(measured_db),
                    _fmt(spacing.predicted_db),
                    _fmt(spacing.residual_db),
                    note,
                )
            self.console.print(spacings)

    def verification(self, report: VerificationReport, as_json: bool):
        if as_json:
            self._emit_json(report)
            return

        table = Table(title=f"verify {report.oracle.value}")
        for column in ("check", "result", "measured", "expected", "delta", "tolerance", "detail"):
            table.add_column(column)
        for check in report.checks:
            table.add_row(
                check.name,
                "pass" if check.passed else "FAIL",
                f"{check.measured:.6g}",
                f"{check.expected:.6g}",
                f"{check.delta:.3g}",
                f"{check.tolerance:g}",
                check.detail,
            )
        self.console.print(table)
        passed = sum(check.passed for check in report.checks)
        self.console.print(f"{passed}/{len(report.checks)} checks passed")

    def transitions(self, changes: list[tuple[float, RegionLabel]], as_json: bool):
        if as_json:
            click.echo(
                json.dumps(
                    [{"snr_db": snr_db, **_jsonable(label)} for snr_db, label in changes], indent=2
                )
            )
            return

        table = Table(title="region transitions")
        table.add_column("from SNR dB")
        table.add_column("region")
        for snr_db, label in changes:
            table.add_row(f"{snr_db:g}", label.label)
        self.console.print(table)
