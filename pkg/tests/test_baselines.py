import numpy as np
import pytest

from chaosearch.baselines import (
    VrrParams,
    cosa_optimize,
    stage_widths,
    vrr_optimize,
)
from chaosearch.benchmarks import get_benchmark
from chaosearch.chaos import SearchSpace
from chaosearch.engine import InvalidParams, SearchParams

F1 = get_benchmark("F1")
F3 = get_benchmark("F3")


class TestVrrParams:
    def test_rate_bounds(self):
        with pytest.raises(InvalidParams):
            VrrParams(base=SearchParams(), reduction_rate=1.0)
        with pytest.raises(InvalidParams):
            VrrParams(base=SearchParams(), reduction_rate=0.0)


class TestCosa:
    def test_exact_budget(self, counted):
        f = counted(F1.objective, F1.space)
        params = SearchParams(inner_n=500, outer_m=4, initial_p=1, master_seed=1)
        result = cosa_optimize(f, F1.space, params)
        assert f.calls == 4 * 500
        assert result.evaluations_used == 4 * 500

    def test_best_is_running_minimum(self, counted):
        f = counted(F1.objective, F1.space)
        params = SearchParams(inner_n=2000, outer_m=3, initial_p=1, master_seed=5)
        result = cosa_optimize(f, F1.space, params)
        assert result.best_value == f.running_min
        assert result.best_value == F1.objective(result.best_point)
        assert F1.space.contains(result.best_point)

    def test_determinism(self):
        params = SearchParams(inner_n=3000, outer_m=3, initial_p=1, master_seed=17)
        a = cosa_optimize(F1.objective, F1.space, params)
        b = cosa_optimize(F1.objective, F1.space, params)
        assert a.best_value == b.best_value
        assert np.array_equal(a.best_point, b.best_point)


class TestVrr:
    def test_geometric_width_schedule(self):
        space = SearchSpace(lower=np.array([-100.0, -100.0]),
                            upper=np.array([100.0, 100.0]))
        widths = stage_widths(space, 0.5, 3)
        assert [w[0] for w in widths] == [200.0, 100.0, 50.0]

    def test_exact_budget(self, counted):
        f = counted(F3.objective, F3.space)
        params = VrrParams(base=SearchParams(inner_n=400, outer_m=5,
                                             initial_p=1, master_seed=2))
        result = vrr_optimize(f, F3.space, params)
        assert f.calls == 5 * 400
        assert result.evaluations_used == 5 * 400

    def test_containment_and_monotone_trace(self, counted):
        f = counted(F3.objective, F3.space)  # asserts every x inside the box
        params = VrrParams(base=SearchParams(inner_n=1000, outer_m=6,
                                             initial_p=1, master_seed=3))
        result = vrr_optimize(f, F3.space, params)
        values = [v for _, v in result.stage_trace]
        assert all(a >= b for a, b in zip(values, values[1:]))
        assert result.best_value == f.running_min

    def test_determinism(self):
        params = VrrParams(base=SearchParams(inner_n=2000, outer_m=4,
                                             initial_p=1, master_seed=23))
        a = vrr_optimize(F1.objective, F1.space, params)
        b = vrr_optimize(F1.objective, F1.space, params)
        assert a.best_value == b.best_value
        assert np.array_equal(a.best_point, b.best_point)

    def test_refines_better_than_single_stage_on_smooth_basin(self):
        # With the same budget, shrinking stages should land (weakly) below
        # an unshrunk global sweep on the smooth Rosenbrock valley.
        base = SearchParams(inner_n=5000, outer_m=8, initial_p=1, master_seed=29)
        vrr = vrr_optimize(F1.objective, F1.space, VrrParams(base=base))
        cosa = cosa_optimize(F1.objective, F1.space, base)
        assert vrr.best_value <= cosa.best_value
