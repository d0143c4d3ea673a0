"""Tests for report models and their encodings."""

import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from mb_fqcount.reports import (
    TSV_COUNT_HEADER,
    CountMethod,
    CountReport,
    Hypothesis,
    IdentityEntry,
    SweepRow,
    VerifyReport,
    decode_hypotheses,
    encode_hypotheses,
)

HYPOTHESES = (Hypothesis(name="gcd_condition", holds=True), Hypothesis(name="pairwise_coprime", holds=False))


class TestHypotheses:
    """The name=0/1 ledger encoding."""

    def test_encode(self):
        """Comma-separated name=flag."""
        assert encode_hypotheses(HYPOTHESES) == "gcd_condition=1,pairwise_coprime=0"

    def test_decode(self):
        """Inverse of encode, empty string is no hypotheses."""
        assert decode_hypotheses("gcd_condition=1,pairwise_coprime=0") == HYPOTHESES
        assert decode_hypotheses("") == ()

    def test_malformed(self):
        """Flags other than 0 and 1 are rejected."""
        with pytest.raises(ValueError, match="Malformed"):
            decode_hypotheses("gcd_condition=yes")


class TestCountReport:
    """Validation and encodings."""

    def test_json(self):
        """JSON carries method as its string value."""
        report = CountReport(q=9, n=3, value=82, method=CountMethod.THM2, restricted=False, hypotheses=HYPOTHESES)
        data = json.loads(report.to_json())
        assert data["method"] == "thm2"
        assert data["hypotheses"][0] == {"name": "gcd_condition", "holds": True}
        assert CountReport.from_json(report.to_json()) == report

    def test_tsv(self):
        """Row follows the header order."""
        report = CountReport(q=5, n=2, value=2, method=CountMethod.THM3, restricted=True, hypotheses=HYPOTHESES)
        row = report.to_tsv_row()
        assert row == "5\t2\t2\tthm3\t1\tgcd_condition=1,pairwise_coprime=0"
        assert len(row.split("\t")) == len(TSV_COUNT_HEADER)
        assert CountReport.from_tsv_row(row) == report

    def test_value_bound(self):
        """A count above q^n is rejected."""
        with pytest.raises(ValidationError):
            CountReport(q=3, n=2, value=10, method=CountMethod.BRUTE, restricted=False)

    def test_restricted_bound(self):
        """A restricted count above (q-1)^n is rejected."""
        CountReport(q=3, n=2, value=4, method=CountMethod.BRUTE, restricted=True)
        with pytest.raises(ValidationError):
            CountReport(q=3, n=2, value=5, method=CountMethod.BRUTE, restricted=True)

    def test_negative_value(self):
        """Counts are non-negative."""
        with pytest.raises(ValidationError):
            CountReport(q=3, n=2, value=-1, method=CountMethod.BRUTE, restricted=False)


class TestVerifyReport:
    """ok is false only on a real mismatch."""

    @pytest.mark.parametrize(("match", "ok"), [(True, True), (None, True), (False, False)])
    def test_ok(self, match: bool | None, ok: bool):
        """No formula counts as ok."""
        report = VerifyReport(
            q=5, n=2, restricted=False, formula_method=None, formula_value=None, brute_value=9, match=match
        )
        assert report.ok is ok


class TestSweepRow:
    """TSV cells for absent values."""

    def test_empty_cells(self):
        """None becomes an empty cell."""
        row = SweepRow(
            q=5, n=2, equation="diag a=1,1 m=2,2", hypotheses=(), method=None, formula=None, brute=9, match=None
        )
        assert row.to_tsv_row() == "5\t2\tdiag a=1,1 m=2,2\t\t\t\t9\t"

    def test_full_row(self):
        """Match is 0/1."""
        row = SweepRow(
            q=9,
            n=3,
            equation="carlitz a=1,1,1 m=1,1,1 k=2 b=1 kv=1,1,1",
            hypotheses=HYPOTHESES[:1],
            method=CountMethod.THM2,
            formula=82,
            brute=82,
            match=True,
        )
        assert row.to_tsv_row().split("\t")[3:] == ["gcd_condition=1", "thm2", "82", "82", "1"]


class TestIdentityEntry:
    """Exact rationals in and out."""

    def test_serializes_as_string(self):
        """Fractions dump as 'p/q'."""
        entry = IdentityEntry(name="eq4", lhs=Fraction(7, 2), rhs=3, holds=False)
        assert json.loads(entry.model_dump_json())["lhs"] == "7/2"
        assert entry.rhs == Fraction(3)

    def test_parses_strings(self):
        """'p/q' strings are accepted."""
        assert IdentityEntry(name="eq4", lhs="7/2", rhs="7/2", holds=True).lhs == Fraction(7, 2)

    def test_rejects_floats(self):
        """Floats are not exact."""
        with pytest.raises(ValidationError):
            IdentityEntry(name="eq4", lhs=0.5, rhs=1, holds=False)
