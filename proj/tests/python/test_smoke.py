import math
import os
import subprocess

import pytest

import squeezekit as sk

HALF_LOG3 = 0.5 * math.log(3.0)


def test_gauge_and_membership():
    d = sk.Domain.polydisc(2)
    assert d.gauge([0.5, 0.2]) == 0.5
    assert d.contains([0.5, 0.2])
    assert not d.contains([1.0, 0.0])
    assert sk.Domain.ball(2).gauge([0.3, 0.4j]) == pytest.approx(0.5, abs=1e-15)
    assert d.scaled(0.5).gauge([0.25, 0.0]) == pytest.approx(0.5)


def test_metrics():
    poly = sk.Domain.polydisc(2)
    assert sk.poincare(0.0, 0.5) == pytest.approx(HALF_LOG3, abs=1e-15)
    assert sk.kobayashi_balanced(poly, [0.5, 0.2]) == pytest.approx(HALF_LOG3, abs=1e-14)
    assert sk.kobayashi_lower_functional(poly, [0.5, 0.2]) == pytest.approx(HALF_LOG3, abs=1e-14)
    upper = sk.lempert_upper(poly, [0.0, 0.0], [0.5, 0.2], polish=False)
    assert upper["kind"] == "upper"
    assert HALF_LOG3 - 1e-12 <= upper["value"] <= HALF_LOG3 + 1e-8
    assert sk.infinitesimal_upper(sk.Domain.polydisc(1), [0.5], [1.0]) == pytest.approx(2.0)
    length = sk.curve_length_upper(poly, [[0, 0], [0.5, 0.2]], 2048)
    assert length["value"] == pytest.approx(HALF_LOG3, abs=1e-4)


def test_growth_rows():
    rows = sk.boundary_growth_scan(sk.Domain.polydisc(2), [1.0, 0.5], 15)
    assert len(rows) == 15
    assert abs(rows[-1]["K_plus_half_log_dist"] - 0.5 * math.log(2.0)) <= 1e-3


def test_automorphisms_and_inclusion():
    ball = sk.Domain.ball(2)
    f = sk.transport_to_origin(ball, [0.3, 0.0])
    assert abs(f([0.3, 0.0])[0]) < 1e-15
    report = sk.verify_inclusion(ball, f, 0.8, samples=10000, seed=7)
    assert report["violations"] == 0
    z, image = sk.sharpness_probe(0.5, 0.8)
    assert z == pytest.approx(0.5)
    assert image == pytest.approx(0.8, abs=1e-12)
    with pytest.raises(sk.PreconditionError):
        sk.verify_inclusion(ball, f, 0.2)


def test_squeezing_and_scan():
    poly, ball = sk.Domain.polydisc(2), sk.Domain.ball(2)
    r, method = sk.inner_radius(poly, ball)
    assert r == pytest.approx(1 / math.sqrt(2)) and method == "closed-form"
    assert sk.squeeze_transport(poly, poly, [0.3, -0.2j])["radius"] == pytest.approx(1.0)
    assert sk.squeeze_identity(ball, poly, 1.0)["radius"] == pytest.approx(1 / math.sqrt(2))
    assert sk.epsilon_sequence([0.99], [0.1])[0] == pytest.approx(1.0)
    rec = sk.radius_chain(0.9, 0.3)
    assert abs(rec["identity_lhs"] - rec["identity_rhs"]) <= 1e-12
    scan = sk.run_scan(poly, poly, [1.0, 0.0], 12)
    assert scan["verdict"] == "theorem-chain-verified"
    assert len(scan["rows"]) == 12
    assert sk.run_scan(poly, poly, [1.0, 0.0], 0)["verdict"] == "vacuous"


def test_errors():
    with pytest.raises(sk.ArgumentError):
        sk.poincare(1.0, 0.0)
    with pytest.raises(sk.DomainError):
        sk.kobayashi_balanced(sk.Domain.polydisc(2), [1.0, 0.0])
    with pytest.raises(sk.Error):
        sk.alpha(1.0, 0.5)


def test_main_entry_point():
    code, out, _ = sk.main(["gauge", "--domain", "polydisc", "--dim", "2", "--point", "0.5,0,0.2,0"])
    assert (code, out) == (0, "0.5\n")
    code, _, _ = sk.main(["frobnicate"])
    assert code == 2


@pytest.mark.skipif("SQUEEZEKIT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary_matches_module():
    args = ["scan", "--omega", "polydisc", "--target", "polydisc", "--dim", "2", "--ray", "1,0,0,0", "--J", "5",
            "--format", "csv"]
    proc = subprocess.run([os.environ["SQUEEZEKIT_CLI"], *args], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == sk.main(args)[1]
