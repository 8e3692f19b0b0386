"""Smoke tests for the python bindings; plain asserts, no test framework."""

import json
import sys

import gbhard


def test_oracles():
    assert gbhard.oracle("sat", "p cnf 3 1\n1 2 3 0\n") is True
    assert gbhard.oracle("sat", "p cnf 1 2\n1 0\n-1 0\n") is False
    assert gbhard.oracle("knapsack", "10 10 2\n6 8\n5 5\n") is True
    assert gbhard.oracle("knapsack", "10 11 2\n6 8\n5 5\n") is False
    assert gbhard.oracle("hamcycle", "2 3\n0 1\n0 1\n1 0\n") is True
    assert gbhard.oracle("push1", "RBW\n") is False
    assert gbhard.oracle("push1", "RBW\n...\n") is True


def test_reduce_solve_agree():
    cases = [
        ("3cnf", "sat", "p cnf 1 1\n1 1 1 0\n"),
        ("3cnf", "sat", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n"),
        ("hamcycle", "hamcycle", "2 3\n0 1\n0 1\n1 0\n"),
        ("knapsack", "knapsack", "10 10 2\n6 8\n5 5\n"),
        ("push1", "push1", "RBW\n"),
        ("push1", "push1", "R.W\n"),
    ]
    for source, problem, text in cases:
        level = gbhard.reduce(source, text)
        parsed = json.loads(level)
        assert parsed["format"] == "gbhard-level/1"
        assert not gbhard.validate(level)
        verdict = gbhard.solve(level)
        assert verdict["solvable"] == gbhard.oracle(problem, text), (source, text)
        if verdict["solvable"]:
            assert gbhard.replay(level, verdict["witness"])


def test_render():
    art = gbhard.render(gbhard.reduce("push1", "R.W\n"))
    assert art.startswith("M.*\n")
    assert "legend:" in art


def test_verify_campaign():
    report = gbhard.verify("knap-harvest", 25, 42)
    assert report["total"] == 25
    assert report["agreements"] == 25
    assert report["disagreements"] == 0
    again = gbhard.verify("knap-harvest", 25, 42)
    assert report["json"] == again["json"]


def test_errors():
    try:
        gbhard.oracle("sat", "p cnf 1 1\n2 0\n")
    except ValueError as e:
        assert "out of range" in str(e)
    else:
        raise AssertionError("expected ValueError for an out-of-range literal")

    try:
        gbhard.solve("{}")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for a schema violation")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
