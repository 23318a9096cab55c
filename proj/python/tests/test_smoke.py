import superchar

GL2_TRIVIAL = {"m": 1, "neg": [0], "pos": []}


def test_theta_example():
    assert superchar.theta([7, 6, 3, 3, 1]) == {1: 5, 2: 6, 3: 3, 4: 4, 5: 2}
    assert superchar.theta([]) == {}


def test_parametrizations():
    p = superchar.parametrizations({"m": 3, "neg": [-5, 2, -3], "pos": [7, 6, 3, 3, 1]})
    assert p["theta"]["coords"] == {"-6": -5, "-4": 2, "-2": -3, "1": 5, "2": 6, "3": 3, "4": 4, "5": 2}
    assert p["standard"]["coords"]["2"] == 7


def test_reflection_walk_reaches_standard():
    w = {"m": 1, "neg": [0], "pos": [2, 1]}
    trace = superchar.reflect_trace(w, 2)
    assert trace[-1]["weight_after"] == superchar.parametrizations(w)["standard"]


def test_gl2_pair():
    table = superchar.kl_table(GL2_TRIVIAL, 1)
    assert table["L"][1][0] == {"-1": -1}
    assert table["U"][1][0] == {"1": 1}
    assert superchar.a_coefficient({"m": 1, "neg": [-1], "pos": [1]}, GL2_TRIVIAL, 1) == -1


def test_finite_character_of_the_natural_module():
    ch = superchar.character({"coords": {"-4": 1}}, type="finite", window=(0, 0, 3), m=2, n=2)
    weights = {tuple(t["weight"]["coords"].items()) for t in ch["terms"]}
    assert weights == {(("-4", 1),), (("-2", 1),), (("1", 1),), (("3", 1),)}
    assert all(t["mult"] == 1 for t in ch["terms"])


def test_hook_schur_dimension():
    # s_(1) on (1|1) is x + y
    assert sorted(superchar.hook_schur([1], 1, 1)) == [((0, 1), 1), ((1, 0), 1)]


def test_homology_and_vogan():
    rows = superchar.homology(GL2_TRIVIAL, rank=1, depth=3)
    assert [r["degree"] for r in rows] == [0, 1]
    assert superchar.vogan_check(GL2_TRIVIAL, {"m": 1, "neg": [-1], "pos": [1]}, 1, 1)


def test_verify_suite():
    (row,) = superchar.verify("theta", 7)
    assert row["passed"]
