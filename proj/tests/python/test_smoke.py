import json

import pytest

import redform

VIOLATED = json.dumps(
    {
        "t1": ["a", "b"],
        "t2": ["c", "d"],
        "lambda1": ["1/2", "1/2"],
        "lambda2": ["1/2", "1/2"],
        "alternatives": ["k0", "k1"],
        "k0": "k0",
        "interim": {"q1": {"k1": ["1", "0"]}, "q2": {"k1": ["1", "0"]}},
    }
)

IMPLEMENTABLE = json.dumps(
    {
        "t1": ["a", "b"],
        "t2": ["c", "d"],
        "lambda1": ["1/2", "1/2"],
        "lambda2": ["1/2", "1/2"],
        "alternatives": ["k0", "k1"],
        "k0": "k0",
        "interim": {"q1": {"k1": ["1", "0"]}, "q2": {"k1": ["1/2", "1/2"]}},
    }
)


def test_check_violated():
    res = redform.check(VIOLATED)
    assert res["implementable"] is False
    assert res["certificate"] == "CUT G={k1} E1={a} E2={d} lhs=1/2 rhs=1/4"


def test_check_and_oracle_agree():
    assert redform.check(IMPLEMENTABLE)["implementable"] is True
    assert redform.oracle(IMPLEMENTABLE) is True
    assert redform.oracle(VIOLATED) is False


def test_implement_round_trip():
    out = json.loads(redform.implement(IMPLEMENTABLE))
    assert "expost" in out
    ep = out["expost"]
    # profile lotteries sum to 1
    from fractions import Fraction

    for i1 in range(2):
        for i2 in range(2):
            total = sum(Fraction(ep[k][i1][i2]) for k in out["alternatives"])
            assert total == 1
    assert ep["k1"][0] == ["1", "1"]


def test_implement_raises_on_violated():
    with pytest.raises(ValueError, match="CUT"):
        redform.implement(VIOLATED)


def test_parse_error():
    with pytest.raises(ValueError):
        redform.check("{not json")


def test_generate_and_lattice():
    inst = json.loads(redform.generate("package", 3))
    assert inst["k0"] == "A|B"
    assert len(inst["t2"]) == 3
    rep = redform.lattice_verify(redform.generate("compromise"))
    assert rep["pass"] is False  # h_j modularity fails on incomparable pairs
    assert any("modularity" in f for f in rep["failures"])


def test_fuzz_clean():
    res = redform.fuzz(trials=50, seed=3, t2=3, alts=3)
    assert res["ok"] is True
    assert res["disagreements"] == 0
    assert res["report"] == redform.fuzz(trials=50, seed=3, t2=3, alts=3)["report"]
