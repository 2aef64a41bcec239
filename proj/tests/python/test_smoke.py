import apostol_lab as al


def test_classical_daehee_reduction():
    vals = al.daehee_numbers(chi="trivial", lambda_="1", q="limit1", max_n=3)
    assert vals == ["1", "-1/2", "2/3", "-3/2"]


def test_classical_changhee_reduction():
    vals = al.changhee_numbers(chi="trivial", lambda_="1", q="1", max_n=3)
    assert vals == ["1", "-1/2", "1/2", "-3/4"]


def test_polynomials_at_zero_match_numbers():
    nums = al.daehee_numbers("kronecker:-3", "2", "3/2", 5)
    pols = al.daehee_polynomials("kronecker:-3", "2", "3/2", "0", 5)
    assert nums == pols


def test_cauchy_family_table():
    vals = al.family_values("bernoulli2nd", max_n=4, x="0")
    assert vals == ["1", "1/2", "-1/12", "1/24", "-19/720"]


def test_registry_and_verification():
    assert len(al.theorem_registry()) == 15
    reports = al.verify_grid("da-5", max_m=4)
    assert reports and all(r["status"] == "PASS" for r in reports)
    single = al.verify_point("da-binom", chi="kronecker:-4", lambda_="2", q="3/2", max_m=4)
    assert single["status"] == "PASS"


def test_mahler():
    assert al.mahler_integral(["0", "0", "1"]) == "1/6"


def test_witt_monotone():
    rep = al.witt_report("bosonic", n=2, z="0", p=3, Nmax=6)
    assert rep["monotone"] is True
    assert rep["target"] == "1/6"


def test_integral_rep():
    rows = al.integral_rep_check("daehee", "trivial", "6", "6", 1, p=5, Nmax=4)
    vals = [r["val"] for r in rows if not r["exact"] and r["N"] >= 2]
    assert vals == sorted(vals) and len(set(vals)) == len(vals)
