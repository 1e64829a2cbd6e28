"""Property suites behind the CLI verify subcommand."""

import numpy as np
import pytest

from locpacf.verify import check_integral_identity, cos_ratio_integral, run_all


def test_integral_identity_examples():
    # 4*pi*min(a,b), removable singularity at zero
    assert cos_ratio_integral(0.5, 0.5) == pytest.approx(2 * np.pi, abs=1e-7)
    assert cos_ratio_integral(1.0, 3.0) == pytest.approx(4 * np.pi, abs=1e-7)
    assert cos_ratio_integral(8.0, 2.5) == pytest.approx(10 * np.pi, abs=1e-6)


def test_integral_identity_grid():
    res = check_integral_identity()
    assert res.passed, res.detail


def test_all_property_suites_pass():
    results = run_all()
    failures = [r for r in results if not r.passed]
    assert not failures, "; ".join(f"{r.name}: {r.detail}" for r in failures)
