from fractions import Fraction

import pytest

import adinvar


def test_corpus_entries_all_pass():
    names = adinvar.corpus_list()
    assert {"h3_metric_0", "a12", "gH", "oscillator", "nilmanifold_demo"} <= set(names)
    for name in names:
        report = adinvar.corpus_report(name)
        assert report["pass"], (name, adinvar.failed_checks(report))


def test_heisenberg_geometry_values():
    builder = adinvar.corpus_builder("h3_metric_0")
    report = adinvar.geometry(builder)
    assert report["pass"]
    planes = {tuple(p["plane"]): p["k"] for p in report["data"]["sectional"]}
    assert adinvar.rational(planes[(1, 2)]) == Fraction(-3, 4)
    assert adinvar.rational(planes[(1, 3)]) == Fraction(1, 4)
    ricci_op = report["data"]["ricci_operator"]
    assert [adinvar.rational(ricci_op[i][i]) for i in range(3)] == [
        Fraction(-1, 2),
        Fraction(-1, 2),
        Fraction(1, 2),
    ]


def test_gd_and_verify_as_on_a_hand_written_builder():
    builder = {
        "d": {"dim": 2, "metric": [[1, 1, "1"], [2, 2, "1"]]},
        "h": {"dim": 1, "metric": [[1, 1, "1"]]},
        "pi": [[["0", "-1"], ["1", "0"]]],
    }
    gd = adinvar.gd(builder)
    assert gd["pass"]
    assert gd["data"]["algebra"]["brackets"] == [[1, 2, 3, "1"]]
    assert adinvar.verify_as(builder)["pass"]
    series = adinvar.series(builder)
    assert series["data"]["heisenberg"]["kind"] == "heisenberg"


def test_invalid_representation_is_a_failed_check():
    builder = {
        "d": {"dim": 2, "metric": [[1, 1, "1"], [2, 2, "1"]]},
        "h": {"dim": 1, "metric": [[1, 1, "1"]]},
        "pi": [[["0", "1"], ["1", "0"]]],
    }
    report = adinvar.verify_as(builder)
    assert not report["pass"]
    assert "input.pi[1].skew" in adinvar.failed_checks(report)


def test_parse_errors_raise():
    with pytest.raises(adinvar.AdinvarError, match=r"brackets\[0\]\[2\]"):
        adinvar.check({"dim": 3, "brackets": [[1, 2, 9, "1"]]})


def test_broken_jacobi_reports_witness():
    report = adinvar.check({"dim": 3, "brackets": [[1, 2, 3, "1"], [1, 3, 1, "1"]]})
    assert not report["pass"]
    assert report["checks"][0]["witnesses"] == [[1, 2, 3]]


def test_derivations_of_a12():
    report = adinvar.corpus_report("a12")
    assert report["pass"]
    a12 = adinvar.extend(adinvar.corpus_builder("a12"))["data"]["algebra"]
    der = adinvar.derivations(a12)
    assert der["data"]["derivations"]["dim"] == 10
    assert der["data"]["inner_derivations"]["dim"] == 3


def test_cli_in_process():
    code, out, err = adinvar.run_cli(["corpus", "gE"])
    assert code == 0
    assert "result: pass" in out
    code, out, err = adinvar.run_cli(["nope"])
    assert code == 2
