"""Smoke test for the lexres extension module.

Build and install first, e.g. `maturin build --release` followed by
`pip install` of the produced wheel, then run `python smoke_test.py`.
"""

import json

import lexres


def main():
    assert lexres.lexsegment(4, "x1x3", "x2x4") == ["x1x3", "x1x4", "x2^2", "x2x3", "x2x4"]

    res = lexres.resolve(4, "x1x3", "x2x4")
    assert res.generators == ["x2x4", "x1x4", "x2x3", "x1x3", "x2^2"]
    assert res.sets == [[], [2], [4], [2, 4], [3, 4]]
    assert res.betti == [1, 5, 6, 2]
    assert res.basis(3) == ["f({2,4};u4)", "f({3,4};u5)"]
    assert res.dense(2) == [["-x3", "0"], ["x1", "x2"], ["x4", "0"], ["-x2", "0"], ["0", "x4"], ["0", "-x3"]]
    assert res.euler_characteristic() == [1, 0, -5, 6, -2]
    assert lexres.hilbert_numerator(4, res.generators) == [1, 0, -5, 6, -2]

    report = res.verify(seed=1, trials=3)
    assert report["pass"], report
    assert all(t["ranks"] == [1, 4, 2] for t in report["rank"]["trials"])

    again = lexres.Resolution.from_json(res.to_json())
    assert again.betti == res.betti and again.dense(1) == res.dense(1)
    assert json.loads(res.to_json())["order"] == "increasing-revlex"
    assert "betti C" in res.to_macaulay2()

    square = lexres.resolve(4, "x1x3", "x2x4", k=2)
    assert square.betti == [1, 14, 24, 13, 2]
    assert square.verify()["pass"]

    c = lexres.classify(4, "x1x3", "x2x4", depth=2)
    assert c["linear_form"] == {"linear_form": "yes", "l": 2}

    try:
        lexres.resolve(3, "x1x2", "x2x3")
    except ValueError:
        pass
    else:
        raise AssertionError("unpatterned segment needs oracle_g")
    assert lexres.resolve(3, "x1x2", "x2x3", k=2, oracle_g=True).verify()["pass"]

    try:
        lexres.quotients(3, "x1x2", "x2^2")
    except RuntimeError:
        pass
    else:
        raise AssertionError("expected a linear-quotient failure")

    print("smoke test passed:", res)


if __name__ == "__main__":
    main()
