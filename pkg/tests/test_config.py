import logging
import math

import pytest

import hypermatch as hm
from hypermatch.config import RunConfig, config, resolve
from hypermatch.utils.helpers import exp_or_none, format_number, harmonic_span, log_sum_exp


class TestConfiguration:
    """Test cases for configuration management."""

    def setup_method(self):
        self.saved = hm.get_config()

    def teardown_method(self):
        hm.set_config(**self.saved)

    def test_config_management(self):
        """Test configuration getter and setter."""
        current = hm.get_config()
        assert isinstance(current, dict)
        assert current["tol"] == 1e-10
        assert current["max_sweeps"] == 10000

        hm.set_config(verbose=True, tol=1e-8)
        updated = hm.get_config()
        assert updated["verbose"] is True
        assert updated["tol"] == 1e-8
        assert logging.getLogger("hypermatch").level == logging.DEBUG

    def test_unknown_key(self):
        """Test unknown keys are rejected."""
        with pytest.raises(ValueError):
            hm.set_config(model_name="x")

    def test_validation(self):
        """Test values outside their domains are rejected."""
        with pytest.raises(ValueError):
            RunConfig().update(tol=0.0)
        with pytest.raises(ValueError):
            RunConfig().update(max_sweeps=0)
        with pytest.raises(ValueError):
            RunConfig().update(output_format="json")

    def test_rejected_update_changes_nothing(self):
        """Test a failed set_config leaves every setting as it was."""
        before = hm.get_config()
        with pytest.raises(ValueError):
            hm.set_config(tol=-1.0)
        assert hm.get_config() == before
        with pytest.raises(ValueError):
            hm.set_config(max_sweeps=5, stall_window=0)
        assert hm.get_config() == before
        with pytest.raises(ValueError):
            hm.set_config(seed=3, colour="red")
        assert hm.get_config()["seed"] == before["seed"]

    def test_resolve_uses_global_default(self):
        """Test None falls back to the global setting."""
        hm.set_config(max_sweeps=7)
        assert resolve("max_sweeps", None) == 7
        assert resolve("max_sweeps", 3) == 3

    def test_copy_is_independent(self):
        """Test a copy does not write through to the global config."""
        before = config.seed
        run = config.copy()
        run.update(seed=before + 1)
        assert config.seed == before
        assert run.seed == before + 1


class TestHelpers:
    """Test cases for numeric helpers."""

    def test_log_sum_exp(self):
        """Test exactness, empty input and -inf terms."""
        assert log_sum_exp([0.0, 0.0]) == pytest.approx(math.log(2.0))
        assert log_sum_exp([1000.0, 1000.0]) == pytest.approx(1000.0 + math.log(2.0))
        assert log_sum_exp([]) == -math.inf
        assert log_sum_exp([-math.inf, -math.inf]) == -math.inf
        assert log_sum_exp([-math.inf, 0.0]) == 0.0

    def test_harmonic_span(self):
        """Test the short sum and the digamma path agree."""
        assert harmonic_span(3, 3) == 0.0
        assert harmonic_span(1, 3) == pytest.approx(1.0 + 0.5)
        direct = math.fsum(1.0 / (j - 1) for j in range(6, 20007))
        assert harmonic_span(5, 20006) == pytest.approx(direct, rel=1e-12)

    def test_exp_or_none(self):
        """Test underflow to zero for -inf and None beyond float range."""
        assert exp_or_none(-math.inf) == 0.0
        assert exp_or_none(0.0) == 1.0
        assert exp_or_none(800.0) is None

    def test_format_number(self):
        """Test integers, booleans, infinities and 17 significant digits."""
        assert format_number(10) == "10"
        assert format_number(True) == "true"
        assert format_number(-math.inf) == "-inf"
        assert format_number(0.1) == "0.10000000000000001"
        assert float(format_number(1 / 3)) == 1 / 3
