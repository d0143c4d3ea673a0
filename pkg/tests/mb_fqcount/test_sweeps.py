"""Tests for sweep planning and evaluation."""

import pytest

from mb_fqcount.equations import CarlitzEquation, DiagonalEquation
from mb_fqcount.errors import FqCountError
from mb_fqcount.field import make_field
from mb_fqcount.reports import CountMethod
from mb_fqcount.sweeps import SweepFamily, generate_instances, plan_sweep, run_sweep, sweep_row


class TestGenerateInstances:
    """Seeded random equations."""

    def test_classical(self):
        """Classical instances differ only in b."""
        field = make_field(7)
        eqs = generate_instances(SweepFamily.CLASSICAL, field, 3, instances=4, m_max=6, seed=1)
        assert len(eqs) == 4
        assert all(isinstance(eq, CarlitzEquation) and eq.k == 2 and eq.m == (1, 1, 1) for eq in eqs)

    def test_deterministic(self):
        """Same seed, same instances; instance i does not depend on how many are drawn."""
        field = make_field(5)
        first = generate_instances(SweepFamily.CARLITZ, field, 2, instances=5, m_max=6, seed=42)
        again = generate_instances(SweepFamily.CARLITZ, field, 2, instances=3, m_max=6, seed=42)
        assert again == first[:3]

    def test_bounds(self):
        """Exponents stay within m_max, coefficients nonzero."""
        field = make_field(5)
        for eq in generate_instances(SweepFamily.DIAG, field, 3, instances=20, m_max=4, seed=0):
            assert isinstance(eq, DiagonalEquation)
            assert all(1 <= m <= 4 for m in eq.m)
            assert all(not a.is_zero for a in eq.a)


class TestSweepRow:
    """Formula and enumeration side by side."""

    def test_match(self):
        """Classical equation over GF(5)."""
        field = make_field(5)
        (eq,) = generate_instances(SweepFamily.CLASSICAL, field, 3, instances=1, m_max=6, seed=0)
        row = sweep_row(eq, field)
        assert row.method is CountMethod.THM2
        assert row.formula == row.brute == 26
        assert row.match is True

    def test_no_formula(self):
        """x1^2 + x2^2 = 0 over GF(5): enumeration only."""
        field = make_field(5)
        row = sweep_row(DiagonalEquation(a=(field.one, field.one), m=(2, 2)), field)
        assert row.method is None
        assert row.formula is None
        assert row.brute == 9
        assert row.match is None

    def test_row_cap(self):
        """Above the row cap the brute cell stays empty."""
        field = make_field(5)
        (eq,) = generate_instances(SweepFamily.CLASSICAL, field, 3, instances=1, m_max=6, seed=0)
        row = sweep_row(eq, field, row_cap=100)
        assert row.formula == 26
        assert row.brute is None
        assert row.match is None


class TestPlanAndRun:
    """Row order and the global work cap."""

    def test_order(self):
        """Fields outermost, then n, then instance."""
        fields = [make_field(3), make_field(5)]
        rows = plan_sweep(fields, range(2, 4), SweepFamily.DIAG, instances=2, seed=0)
        assert [(field.q, eq.n) for field, eq in rows] == [
            (3, 2), (3, 2), (3, 3), (3, 3), (5, 2), (5, 2), (5, 3), (5, 3),
        ]  # fmt: skip

    def test_fixed_equation(self):
        """One parsed equation per field."""
        fields = [make_field(3), make_field(7)]
        rows = plan_sweep(fields, range(0), SweepFamily.CLASSICAL, equation="diag a=1,1 m=1,2")
        assert [field.q for field, _ in rows] == [3, 7]

    def test_empty(self):
        """No fields means no rows."""
        with pytest.raises(FqCountError) as exc_info:
            plan_sweep([], range(2, 3), SweepFamily.CLASSICAL)
        assert exc_info.value.code == "empty_range"

    def test_run(self):
        """Rows come back in plan order and match."""
        rows = plan_sweep([make_field(3), make_field(5), make_field(7)], range(3, 4), SweepFamily.CLASSICAL, instances=2)
        results = list(run_sweep(rows))
        assert [r.q for r in results] == [3, 3, 5, 5, 7, 7]
        assert all(r.match is not False for r in results)

    def test_total_cap(self):
        """The total enumeration across rows is checked before any row runs."""
        rows = plan_sweep([make_field(5)], range(3, 4), SweepFamily.CLASSICAL, instances=4)
        with pytest.raises(FqCountError) as exc_info:
            run_sweep(rows, work_cap=400, row_cap=125)
        assert exc_info.value.code == "work_cap_exceeded"
