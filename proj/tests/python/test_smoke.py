import pytest

import headmouse as hm


def rest_row(t_ms):
    row = hm.TraceRow()
    row.t_ms = t_ms
    row.az = 16384
    return row


def rest_trace(rows):
    return [rest_row(10 * i) for i in range(rows)]


def test_decode_burst():
    raw = hm.decode_burst(bytes([0x40, 0x00] + [0x00] * 12))
    assert raw.ax == 16384
    phys = hm.raw_to_physical(raw)
    assert phys.accel[0] == pytest.approx(1.0)


def test_decode_burst_wrong_length():
    with pytest.raises(hm.Error):
        hm.decode_burst(b"\x00" * 13)


def test_register_file_roundtrip():
    rf = hm.make_mpu6050()
    assert hm.probe_identity(rf)
    hm.store_sample(rf, hm.RawImuSample(ax=16384))
    burst = hm.emulate_read(rf, 0x3B, 14)
    assert hm.decode_burst(burst).ax == 16384
    rf.present = False
    with pytest.raises(hm.Error):
        hm.emulate_read(rf, 0x3B, 14)


def test_tilt_from_accel():
    tilt = hm.tilt_from_accel(hm.PhysicalSample(accel=[0.0, 0.0, 1.0]))
    assert tilt.pitch == pytest.approx(0.0)
    assert tilt.roll == pytest.approx(0.0)
    tilted = hm.tilt_from_accel(hm.PhysicalSample(accel=[0.0, 1.0, 0.0]))
    assert tilted.roll == pytest.approx(90.0)


def test_mapping_defaults():
    delta = hm.map_tilt_to_delta(hm.TiltAngles(10.0, 0.0), hm.NeutralPose())
    assert (delta.dx, delta.dy) == (0, 24)


def test_report_bytes():
    report = hm.make_report(hm.PedalState(True, False), hm.PointerDelta(5, -3))
    assert hm.serialize_report(report) == b"\x01\x05\xfd"


def test_debounce_window():
    state = hm.DebounceState()
    state, pedals = hm.debounce_step(state, hm.PedalLevels(hm.Level.HIGH, hm.Level.LOW), 0)
    assert not pedals.l_pressed
    state, pedals = hm.debounce_step(state, hm.PedalLevels(hm.Level.HIGH, hm.Level.LOW), 20)
    assert pedals.l_pressed


def test_replay_rest_trace():
    out = hm.run_replay(rest_trace(11))
    assert len(out.reports) == 10
    assert out.path.positions[-1].x == 960
    assert out.path.positions[-1].y == 540
    assert hm.report_stream_text(out.reports).splitlines()[0] == "10 00 00 00"


def test_noise_is_reproducible():
    trace = rest_trace(5)
    a = hm.inject_noise(trace, 1, 50.0)
    b = hm.inject_noise(trace, 1, 50.0)
    assert [r.ax for r in a] == [r.ax for r in b]
    assert a[0].ax == -1  # frozen oracle value for seed 1, sigma 50


def test_feature_matrix():
    rows = hm.feature_matrix()
    assert len(rows) == 11
    answers = {row.name: row.answer for row in rows}
    assert answers["Detects button press when moving"] == "No"
    cfg = hm.ControllerConfig()
    cfg.mode = hm.Mode.IMPROVED
    improved = {row.name: row.answer for row in hm.feature_matrix(cfg)}
    assert improved["Detects button press when moving"] == "Yes"


def test_config_text():
    setup = hm.parse_config_text("gain = 2.5\nmode = improved\n")
    assert setup.controller.mapping.gain == pytest.approx(2.5)
    assert setup.controller.mode == hm.Mode.IMPROVED
    with pytest.raises(hm.Error):
        hm.parse_config_text("bogus_key = 1\n")


def test_trace_text_roundtrip():
    text = hm.trace_to_text(rest_trace(3))
    back = hm.parse_trace_text(text)
    assert len(back) == 3
    assert back[2].az == 16384
