"""
Tests for the CompareReports use case.
"""

import pytest

from ppfd.application.use_cases.compare import (
    COMPARE_COLUMNS,
    CompareReportsInput,
    CompareReportsUseCase,
    comparison_row,
)
from ppfd.domain.exceptions import ReportSchemaError, ValidationError
from ppfd.infrastructure.persistence.repositories import JsonReportRepository, PandasTableWriter


@pytest.fixture
def use_case():
    return CompareReportsUseCase(
        report_repo=JsonReportRepository(), table_writer=PandasTableWriter()
    )


@pytest.fixture
def saved(tmp_path, sample_result):
    """Save a report and return its path."""
    repo = JsonReportRepository()

    def _save(name, **kwargs):
        return repo.save(str(tmp_path / name), sample_result(**kwargs))

    return _save


class TestComparisonRow:
    """Tests for comparison_row."""

    def test_formats_metrics(self, sample_result):
        """Should use display names and five decimals."""
        row = comparison_row(sample_result())
        assert row["Model"] == "PPFD with ANN"
        assert row["c"] == 3
        assert row["RMSE"] == "0.10000"
        assert row["Under Predicted"] == 3
        assert row["Over Predicted"] == 2

    def test_blank_c_for_baselines(self, sample_result):
        """Should leave c empty when a report has none."""
        assert comparison_row(sample_result(model="ann", c=None))["c"] == ""


class TestCompareReportsUseCase:
    """Tests for CompareReportsUseCase."""

    def test_one_row_per_report(self, use_case, saved):
        """Should tabulate reports in the given order."""
        paths = [saved("a.json"), saved("b.json", model="fourier", c=3750)]
        output = use_case.execute(CompareReportsInput(paths=paths))
        assert [row["Model"] for row in output.rows] == ["PPFD with ANN", "FOURIER"]
        assert output.table.splitlines()[0].split()[0] == "Model"
        assert "3750" in output.table
        assert output.warnings == []

    def test_csv_header(self, use_case, saved):
        """Should emit the eight comparison columns as CSV."""
        output = use_case.execute(CompareReportsInput(paths=[saved("a.json")], fmt="csv"))
        assert output.table.splitlines()[0] == ",".join(COMPARE_COLUMNS)

    def test_mixed_alpha_adds_warning(self, use_case, saved):
        """Should footnote reports scored with different alpha values."""
        paths = [saved("a.json", alpha=0.2), saved("b.json", alpha=0.5)]
        output = use_case.execute(CompareReportsInput(paths=paths))
        assert len(output.warnings) == 1
        assert output.table.rstrip().splitlines()[-1].startswith("* warning:")
        assert "0.2, 0.5" in output.warnings[0]

    def test_csv_warning_is_a_comment(self, use_case, saved):
        """Should prefix the footnote with # in CSV output."""
        paths = [saved("a.json", alpha=0.2), saved("b.json", alpha=0.5)]
        output = use_case.execute(CompareReportsInput(paths=paths, fmt="csv"))
        assert output.table.rstrip().splitlines()[-1].startswith("# * warning:")

    def test_schema_mismatch_raises(self, use_case, saved, tmp_path):
        """Should refuse reports with another schema version."""
        path = saved("a.json")
        text = open(path, encoding="utf-8").read().replace('"schema_version": 1', '"schema_version": 2')
        (tmp_path / "a.json").write_text(text, encoding="utf-8")
        with pytest.raises(ReportSchemaError):
            use_case.execute(CompareReportsInput(paths=[path]))

    def test_no_reports_raises(self, use_case):
        """Should need at least one report."""
        with pytest.raises(ValidationError):
            use_case.execute(CompareReportsInput(paths=[]))

    def test_unknown_format_raises(self, use_case, saved):
        """Should accept only text or csv."""
        with pytest.raises(ValidationError, match="format"):
            use_case.execute(CompareReportsInput(paths=[saved("a.json")], fmt="xml"))
