import math

import pytest

import vortex_born as vb


def test_special_functions():
    assert vb.bessel_j(0, 0.0) == 1.0
    assert vb.bessel_i0(1.0) == pytest.approx(1.2660659, rel=1e-7)
    k = vb.kernel_im(1, 1, 2.0, 1.0)
    assert k.real == pytest.approx((1 / (2 + math.sqrt(3))) / math.sqrt(3), rel=1e-12)


def test_total_identity():
    beam = vb.Beam.from_opening_angle(math.radians(30), 10.0, 0.01 * 10 * math.tan(math.radians(30)))
    h = vb.Hydrogen1s()
    total = vb.total_macroscopic(beam, h)
    assert total["converged"]
    assert total["value"] * math.cos(beam.theta_k) == pytest.approx(vb.plane_wave_total(h, beam.p_f), rel=1e-3)


def test_forward_dip():
    beam = vb.Beam.from_opening_angle(math.radians(10), 10.0, 0.2 * 10 * math.tan(math.radians(10)), m=1)
    assert vb.events_single(beam, vb.Hydrogen1s(), 0.0, 0.0, 0.0)["value"] == 0.0
    assert vb.events_single(beam, vb.Hydrogen1s(), 1.0, 0.0, 0.0)["value"] > 0.0


def test_run_config_and_errors():
    text = vb.preset_texts("fig2")[0]
    out = vb.run_config(text, jobs=2)
    assert out["metadata"]["value_kind"] == "asymmetry"
    assert len(out["records"]) == 241
    with pytest.raises(vb.ConfigError, match="beam.sigma_kappa"):
        vb.run_config("observable = dcs\nbeam.p_i = 10\nbeam.theta_k = 10 deg\n"
                      "potential.kind = hydrogen\ntarget.kind = macroscopic\n")
    with pytest.raises(vb.UnknownPreset):
        vb.preset_texts("fig9")
    with pytest.raises(vb.DomainError):
        vb.Beam(kappa0=-1.0, sigma_kappa=1.0, p_i=10.0)


def test_selfcheck():
    results = vb.selfcheck()
    assert results and all(passed for _, passed, _ in results)
