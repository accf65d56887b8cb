import monocat
import pytest


def test_enumerate_counts():
    for n, count in [(1, 2), (2, 5), (3, 10)]:
        report, status = monocat.enumerate("s", algebra=f"loop:{n}", bound=3 * n)
        assert status == monocat.PASS
        assert report["count"] == count
    report, _ = monocat.enumerate("gamma", algebra="loop:3")
    assert report["count"] == 4


def test_verify_counting_lambda2():
    report, status = monocat.verify("counting", algebra="loop:2")
    assert status == monocat.PASS
    assert report["ind_S"] == 5 and report["ind_gamma"] == 1


def test_verify_classify_claims():
    report, status = monocat.verify("classify", algebra="loop:2", kinds=["cw"])
    assert status == monocat.PASS
    assert report["summary"]["passed"] == 10


def test_reports_are_deterministic():
    assert monocat.verify("ar", algebra="loop:2") == monocat.verify("ar", algebra="loop:2")


def test_input_errors():
    report, status = monocat.verify("nope")
    assert status == monocat.INPUT_ERROR and "error" in report
    _, status = monocat.verify("counting", algebra="cube:3")
    assert status == monocat.INPUT_ERROR
    with pytest.raises(ValueError):
        monocat.verify("counting", kinds=["weird"])
    with pytest.raises(ValueError):
        monocat.algebra("loop:zero")


def test_replay_round_trip():
    listing, _ = monocat.enumerate("s", algebra="loop:2")
    payload = {"check": "classify", "kind": "scw", "side": "projective", "object": listing["items"][0]["object"]}
    report, status = monocat.replay(payload, algebra="loop:2")
    assert status == monocat.PASS
    assert report["claims"][0]["status"] == "pass"


def test_algebra_json():
    alg = monocat.algebra("preprojective:2")
    assert len(alg["vertices"]) == 2 and len(alg["arrows"]) == 2
