from fractions import Fraction

import pytest

import subchi


def test_evaluate_and_axioms():
    mu = {"atoms": 4, "kind": "capped", "cap": "1", "c": "1/2"}
    assert subchi.evaluate(mu, [1, 2, 3]) == 1
    assert subchi.evaluate(subchi.uniform(4, Fraction(1, 4)), [1, 2]) == Fraction(1, 2)
    assert subchi.verify_axioms(mu)["ok"]
    bad = {"atoms": 2, "kind": "table", "values": {"0x1": "2", "0x2": "1", "0x3": "1"}}
    report = subchi.verify_axioms(bad)
    assert not report["ok"] and report["a"] == [1] and report["b"] == [1, 2]


def test_covers():
    k, cover = subchi.covering_number(subchi.uniform(4, "1/4"), "3/5")
    assert k == 2 and sorted(a for s in cover for a in s) == [1, 2, 3, 4]
    with pytest.raises(subchi.Infeasible):
        subchi.covering_number(subchi.uniform(2, "1/2"), "1/4")
    with pytest.raises(TypeError):
        subchi.covering_number(subchi.uniform(2, "1/2"), 0.25)
    assert subchi.common_refinement(4, [[[1, 2, 3], [4]], [[1], [2, 3, 4]]]) == [[1], [2, 3], [4]]


def test_chromatic():
    chi = subchi.chromatic_numbers(subchi.uniform(2, "1/2"), [[1, 2]], "1/2", box=4, quotient=5)
    assert chi == {"box": 2, "quotient": 3}
    assert subchi.chromatic_numbers(subchi.uniform(2, "1/2"), [[1, 2]], 2, quotient=3)["quotient"] is None


def test_complexes_and_homology():
    assert len(subchi.build_K(3, 1, 2)["vertices"]) == 8
    s23 = subchi.build_S(2, 3)
    assert len(s23["facets"]) == 9
    assert subchi.reduced_betti(s23["text"], 1) == [0, 4]
    assert subchi.reduced_betti(subchi.barycentric(s23["text"], 3)["text"], 1) == [0, 4]
    assert subchi.map_s(["1,2:1,0"], 2, 2, 2) == "1,2,3:1,0,0"
    report = subchi.verify_map_s(3, 1, 2)
    assert report["equivariant"] and not report["simplicial"]
    assert subchi.verify_map_s(1, 1, 3)["simplicial"]


def test_harness():
    assert subchi.constant_C_cubed(1, "1/2") == Fraction(1, 8)
    assert subchi.choose_prime(3, 2) == 11
    mu8 = subchi.uniform(8, "1/8")
    assert subchi.k_eps(mu8, 2, 1) == 3
    assert subchi.F_eps(mu8, 2, 3) == 1
    report = subchi.theorem_check("capped", 16, "1/2", 1, modulus=5, box=4, cap="1/2")
    assert report["chi_lower"] == 2 and report["chi_upper"] == 3 and report["verdict"] == "pass"


def test_cli_in_process():
    code, out, err = subchi.run_cli(["gamma", "chi", "--blocks", "1", "--eps", "1/2", "--quotient", "5"])
    assert (code, out, err) == (0, "3\n", "")
