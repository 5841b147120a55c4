"""Smoke tests for the python module: identities, one frozen cycle, sweeps."""

import math

import pytest

import qtm


def machine(g=1.0, r=1.0):
    params = qtm.MachineParams()
    params.g = g
    params.r = r
    return params


def cycle_point(omega0, omega1, t_cold=1.0, t_hot=2.0, g=1.0, r=1.0):
    point = qtm.CyclePoint()
    point.omega0 = omega0
    point.omega1 = omega1
    point.t_cold = t_cold
    point.t_hot = t_hot
    point.params = machine(g, r)
    return point


def small_otto_spec(count=8):
    spec = qtm.GridSpec()
    spec.cycle = qtm.CycleKind.OTTO
    spec.x_axis = qtm.GridAxis(qtm.AxisParam.OMEGA0, 0.05, 5.0, count)
    spec.y_axis = qtm.GridAxis(qtm.AxisParam.OMEGA1, 0.05, 5.0, count)
    spec.base = cycle_point(0.0, 0.0)
    return spec


def test_spectrum_matches_independent_formulas():
    params = machine(g=0.7, r=1.3)
    for omega in (0.0, 0.5, 2.0, 7.5):
        s = qtm.build_spectrum(params, omega)
        omega_bar = 1.3 * omega
        big = math.hypot(2 * 0.7, omega)
        assert s.omega_bar == pytest.approx(omega_bar, abs=1e-14)
        assert s.big_omega == pytest.approx(big, abs=1e-14)
        assert s.theta == pytest.approx(math.atan2(2 * 0.7, omega), abs=1e-14)
        expected = [
            (omega_bar + big) / 2,
            (omega_bar - big) / 2,
            (-omega_bar + big) / 2,
            (-omega_bar - big) / 2,
        ]
        assert s.energies == pytest.approx(expected, abs=1e-13)

        oracle = qtm.oracle_diagonalize(params, omega)
        assert s.energies == pytest.approx(list(oracle.energies), abs=1e-12)


def test_thermal_state_identities():
    params = machine(g=1.4, r=2.0)
    for omega, t in [(0.3, 0.2), (1.0, 1.0), (4.0, 3.5)]:
        s = qtm.build_spectrum(params, omega)
        state = qtm.thermal_state(s, t)
        assert sum(state.populations) == pytest.approx(1.0, abs=1e-12)
        u = qtm.internal_energy(state, s)
        entropy = qtm.entropy(state, s)
        assert entropy == pytest.approx(state.beta * u + state.log_z, abs=1e-10)


def test_carnot_engine_point():
    record = qtm.run_carnot(cycle_point(4.0, 3.0))
    assert record.work_out > 0.0
    assert record.work_out == pytest.approx(record.q_hot + record.q_cold, abs=1e-12)

    perf = qtm.performance(record, qtm.BathTemperatures(1.0, 2.0))
    assert perf.mode == qtm.OperationalMode.ENGINE
    assert perf.metric == pytest.approx(0.5, abs=1e-9)

    with pytest.raises(qtm.NoRootInBracket):
        qtm.run_carnot(cycle_point(1.0, 0.5))


def test_grid_modes_and_boundary():
    result = qtm.run_grid(small_otto_spec(), workers=2)
    assert result.nx() == 8 and result.ny() == 8
    assert len(result.cells) == 64
    modes = {cell.mode for cell in result.cells}
    assert qtm.OperationalMode.ENGINE in modes
    assert qtm.OperationalMode.REFRIGERATOR in modes

    onset = qtm.locate_boundary(result, qtm.OperationalMode.REFRIGERATOR,
                                axis=qtm.ScanAxis.Y)
    assert onset is not None
    assert 0.05 <= onset <= 5.0


def test_thread_count_does_not_change_bytes(monkeypatch):
    spec = small_otto_spec()
    outputs = []
    for threads in ("1", "3"):
        monkeypatch.setenv("QTM_THREADS", threads)
        result = qtm.run_grid(spec, workers=0)
        outputs.append((qtm.format_grid_csv(result),
                        qtm.render_heatmap(result, qtm.HeatmapLayer.MODE)))
    assert outputs[0] == outputs[1]


def test_config_and_csv_round_trip(tmp_path):
    csv_path = tmp_path / "grid.csv"
    image_path = tmp_path / "grid.ppm"
    text = "\n".join([
        "[machine]",
        "g = 1.0",
        "[cycle]",
        "cycle = stirling",
        "t_cold = 1",
        "t_hot = 2",
        "[grid]",
        "x_param = omega0",
        "x_min = 0.25",
        "x_max = 4.0",
        "x_count = 6",
        "y_param = omega1",
        "y_min = 0.25",
        "y_max = 4.0",
        "y_count = 5",
        "[output]",
        f"csv = {csv_path}",
        f"image = {image_path}",
        "layer = mode",
    ])
    config = qtm.parse_config_text(text, "inline")
    result = qtm.run_config(config, workers=2)

    assert csv_path.read_text() == qtm.format_grid_csv(result)
    assert image_path.read_bytes().endswith(
        qtm.render_heatmap(result, qtm.HeatmapLayer.MODE))
    assert (tmp_path / "grid.ppm.json").exists()

    back = qtm.read_grid_csv(str(csv_path))
    assert back.nx == 6 and back.ny == 5
    assert qtm.render_csv_heatmap(back, qtm.HeatmapLayer.MODE) == \
        qtm.render_heatmap(result, qtm.HeatmapLayer.MODE)

    with pytest.raises(qtm.ConfigError):
        qtm.parse_config_text("[cycle]\nt_cold = -1\n", "inline")
