"""CLI invocations pinned by the golden reports in tests/golden/ (regenerate with ``python3 tests/golden_cases.py``)."""

CUSP = ["--p", "2", "--q", "1", "--f", "y^2 - x^3"]
CUSP_G = CUSP + ["--g", "x - z^2"]

CASES = {
    "cusp_brasselet": ["brasselet"] + CUSP,
    "cusp_morse": ["morse"] + CUSP_G,
    "cusp_gsv": ["gsv"] + CUSP_G,
    "cusp_family": ["family"] + CUSP_G + ["--h=-z1^2*z3^2", "--l", "z3^3"],
    "cusp_ci_paper": ["brasselet-ci"] + CUSP_G + ["--mode", "paper-example"],
    "cusp_ci_strict": ["brasselet-ci"] + CUSP_G + ["--mode", "strict"],
    "eu_origin_4_1": ["eu-origin", "--p", "4", "--q", "1"],
}

# hand-checked headline numbers for each case
EXPECTED = {
    "cusp_brasselet": {"B": -3},
    "cusp_morse": {"B_X": -3, "B_Xg": 12, "n": 15},
    "cusp_gsv": {"GSV": -15},
    "cusp_family": {"constant": True, "values": {"B_X": -3, "Eu_f": 3, "B_Xg": 12, "n": 15, "GSV": -15}},
    "cusp_ci_paper": {"B": 12},
    "cusp_ci_strict": {"B": 6},
    "eu_origin_4_1": {"Eu(0)": -2},
}


if __name__ == "__main__":
    import contextlib
    import io
    import pathlib

    from toric_brasselet.cli import main

    here = pathlib.Path(__file__).parent / "golden"
    for name, argv in CASES.items():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(argv + ["--json"])
        assert code == 0, name
        (here / f"{name}.json").write_text(buf.getvalue())
