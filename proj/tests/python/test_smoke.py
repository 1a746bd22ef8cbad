"""Smoke checks of the python bindings against pinned values."""

import tempfile

import flagpart


def main() -> None:
    cache = tempfile.mkdtemp(prefix="flagpart_smoke_")

    counts = flagpart.count("A1", 3, "2", cache_dir=cache)
    assert counts == {"e": 1, "1": 3}, counts

    assert flagpart.flag_total("C3", 3) == 58240
    assert flagpart.flag_total("A2", 2) == 21

    xi = flagpart.interpolate("A2", [2, 3, 5, 7], "1,1,1", cache_dir=cache)
    min_exp, coeffs = xi["e"]
    assert min_exp == 0 and coeffs == [1, 2, 2, 1], xi

    traces = flagpart.solve_traces("A1", 3, "2", cache_dir=cache)
    assert traces == {"2": "1", "1,1": "0"}, traces

    issues = flagpart.data_check()
    assert issues == [], issues

    report = flagpart.verify(types=["A1"], cache_dir=cache)
    assert report["all_pass"], [c for c in report["checks"] if c["status"] == "fail"]
    assert any(c["paper_ref"] for c in report["checks"])

    print("python smoke: ok")


if __name__ == "__main__":
    main()
