"""
Comparison Use Case

Collects stored reports into one table with the columns
Model, c, RMSE, RWSE, Peak RMSE, Peak RWSE, Under Predicted, Over Predicted.
"""

from dataclasses import dataclass, field
from typing import List

from loguru import logger

from ppfd.application.interfaces.repositories import ReportRepository, TableWriter
from ppfd.domain.entities.evaluation import ExperimentResult
from ppfd.domain.exceptions import ValidationError

COMPARE_COLUMNS = (
    "Model",
    "c",
    "RMSE",
    "RWSE",
    "Peak RMSE",
    "Peak RWSE",
    "Under Predicted",
    "Over Predicted",
)


def comparison_row(result: ExperimentResult) -> dict:
    averaged = result.report.averaged
    return {
        "Model": result.model.display_name,
        "c": "" if result.c is None else result.c,
        "RMSE": f"{averaged.rmse:.5f}",
        "RWSE": f"{averaged.rwse:.5f}",
        "Peak RMSE": f"{averaged.peak_rmse:.5f}",
        "Peak RWSE": f"{averaged.peak_rwse:.5f}",
        "Under Predicted": averaged.under_predicted,
        "Over Predicted": averaged.over_predicted,
    }


@dataclass
class CompareReportsInput:
    """Input DTO for report comparison."""

    paths: List[str]
    fmt: str = "text"


@dataclass
class CompareReportsOutput:
    """Output DTO for report comparison."""

    table: str
    rows: List[dict]
    warnings: List[str] = field(default_factory=list)


class CompareReportsUseCase:
    """
    Use case for tabulating several experiment reports.

    Business rules:
    - One row per report, in the order given
    - Reports scored with different alpha values get a warning footnote
    """

    def __init__(self, report_repo: ReportRepository, table_writer: TableWriter):
        self.report_repo = report_repo
        self.table_writer = table_writer

    def execute(self, input_dto: CompareReportsInput) -> CompareReportsOutput:
        if not input_dto.paths:
            raise ValidationError("reports", "at least one report is required")
        if input_dto.fmt not in ("text", "csv"):
            raise ValidationError("format", f"expected 'text' or 'csv', got {input_dto.fmt!r}")

        results = [self.report_repo.load(path) for path in input_dto.paths]
        rows = [comparison_row(result) for result in results]
        table = self.table_writer.render(COMPARE_COLUMNS, rows, input_dto.fmt)

        warnings = []
        alphas = sorted({result.alpha for result in results})
        if len(alphas) > 1:
            message = (
                "reports use different alpha values ("
                + ", ".join(f"{a:g}" for a in alphas)
                + "); RWSE columns are not comparable"
            )
            logger.warning(message)
            warnings.append(message)

        if warnings:
            marker = "# " if input_dto.fmt == "csv" else ""
            footnote = "\n".join(f"{marker}* warning: {w}" for w in warnings)
            table = f"{table.rstrip()}\n{footnote}\n"

        return CompareReportsOutput(table=table, rows=rows, warnings=warnings)
