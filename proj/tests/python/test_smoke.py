import json
import os
from pathlib import Path

import pytest

import loccat

FIXTURES = Path(os.environ.get("LOCCAT_FIXTURES", Path(__file__).parents[2] / "fixtures"))


def test_homset_and_localisation():
    e5 = loccat.load_category(FIXTURES / "E5.cat.json")
    assert e5.homset("•", "•") == ["1_•", "d"]
    assert e5.equal(["d", "d"], [], at="•") == "equal"
    e2 = loccat.load_category(FIXTURES / "E2.cat.json").localise()
    assert e2.homset("a", "a") == ["1_a"]
    assert e2.homset("b", "a") == ["d_inv"]


def test_check_verdicts():
    e3 = loccat.load_functor(FIXTURES / "E3.functor.json")
    r = e3.check("s-faithful")
    assert r["verdict"] == "false"
    assert {r["witness"]["phi1"], r["witness"]["phi2"]} == {"f1", "f2"}
    e4 = loccat.load_functor(FIXTURES / "E4.functor.json")
    assert e4.check("s-dense")["witness"] == {"object": "Z"}


def test_verify_approximation():
    e7 = loccat.load_functor(FIXTURES / "E7b.functor.json")
    body = e7.verify_approximation(alternative=FIXTURES / "E7b.alt.choice.json")
    assert body["passed"]
    assert body["choice_independence"]["passed"]


def test_precondition_is_raised():
    e6 = loccat.load_functor(FIXTURES / "E6.functor.json")
    with pytest.raises(loccat.PreconditionError, match="multiplicativity violated: 1_a"):
        e6.verify_approximation()


def test_run_cli():
    code, out, _ = loccat.run_cli(["check", str(FIXTURES / "E2.functor.json"), "s-equivalence"])
    assert code == 0
    assert json.loads(out)["schema"] == "loccat-report/1"
    code, _, err = loccat.run_cli(["validate", str(FIXTURES / "invalid" / "malformed.cat.json")])
    assert code == 3
    assert ":6:" in err
