import random

import pytest

from dischargelab import fragments
from dischargelab.fragments import (InvalidFragment, NotClosed, PlaneGraph,
                                    euler_check, fragment_from_text)

from conftest import load_fragment

C0_TEXT = """\
v a deg=le4 open
v b deg=3 open
v c deg=3 open
v d deg=le4 colored
v e deg=le4 colored
e a b
e a c
e a e
e c d
e d e
"""


def test_parse_and_roundtrip():
    frag = fragment_from_text(C0_TEXT)
    again = fragment_from_text(frag.to_text())
    assert again.to_text() == frag.to_text()
    assert frag.vertices["b"].bound == 3
    assert frag.vertices["d"].colored


def test_validation_errors():
    with pytest.raises(InvalidFragment):
        fragment_from_text("v a deg=3 open\ne a b\n")
    with pytest.raises(InvalidFragment):
        fragment_from_text("v a deg=3 open\nv b deg=le4 open\n"
                           "e a b\ndistant a b reason=x\n")
    with pytest.raises(InvalidFragment):
        # four edges at a degree-3 vertex
        fragment_from_text(
            "v a deg=3 open\nv b deg=le4 open\nv c deg=le4 open\n"
            "v d deg=le4 open\nv e deg=le4 open\n"
            "e a b\ne a c\ne a d\ne a e\n")


def test_square_graph_c0():
    frag = load_fragment("c0")
    H = fragments.square_graph(frag)
    assert set(H.verts) == {"a", "b", "c"}
    assert H.adj["a"] == {"b", "c"}
    assert H.adj["b"] == {"a", "c"}  # b and c share the neighbour a


def test_square_graph_distance_three_no_edge():
    frag = fragment_from_text(
        "v a deg=le4 open\nv b deg=le4 colored\nv c deg=le4 colored\n"
        "v d deg=le4 open\ne a b\ne b c\ne c d\n")
    H = fragments.square_graph(frag)
    assert set(H.verts) == {"a", "d"}
    assert H.adj["a"] == frozenset()


def test_square_graph_single_vertex():
    frag = fragment_from_text("v a deg=le4 open\nv b deg=le4 colored\ne a b\n")
    H = fragments.square_graph(frag)
    assert H.verts == ("a",) and H.adj["a"] == frozenset()


def test_near_pairs_add_edges():
    frag = fragment_from_text(
        "v a deg=le4 open\nv b deg=le4 colored\nv c deg=le4 colored\n"
        "v d deg=le4 open\ne a b\ne b c\ne c d\nnear a d\n")
    H = fragments.square_graph(frag)
    assert H.adj["a"] == {"d"}


def test_gprime_edges_do_not_count():
    frag = load_fragment("config1")
    ell = fragments.derive_list_sizes(frag)
    assert ell == {"a": 2}
    H = fragments.square_graph(frag)
    assert H.verts == ("a",)


def test_ell_regressions_match_figures():
    cases = {
        "deg2": {"v": 4},
        "config1": {"a": 2},
        "c0": {"a": 1, "b": 2, "c": 3},
        "c1": {"a": 7, "b": 4, "c": 4, "d": 5, "e": 2, "f": 5, "g": 3, "h": 2},
        "c7": {"a": 4, "b": 10, "c": 10, "d": 4, "e": 2, "f": 2, "g": 4,
               "h": 3, "i": 8, "j": 3, "k": 4, "l": 2},
    }
    for name, want in cases.items():
        frag = load_fragment(name)
        assert fragments.derive_list_sizes(frag) == want, name


def test_ell_monotone_in_coloring_and_bounds():
    frag = load_fragment("c1")
    base = fragments.derive_list_sizes(frag)
    # coloring one more vertex never increases any list size
    frag2 = fragment_from_text(frag.to_text().replace("v h deg=le4 open",
                                                      "v h deg=le4 colored"))
    ell2 = fragments.derive_list_sizes(frag2)
    assert all(ell2[v] <= base[v] for v in ell2)
    # raising a bound from 3 to 4 never increases any list size
    frag3 = fragment_from_text(load_fragment("c5").to_text()
                               .replace("v a deg=3 open", "v a deg=le4 open"))
    base3 = fragments.derive_list_sizes(load_fragment("c5"))
    ell3 = fragments.derive_list_sizes(frag3)
    assert all(ell3[v] <= base3[v] for v in ell3)


def test_ell_clamp_warns():
    frag = fragment_from_text("v a deg=le4 open\n")
    with pytest.warns(UserWarning):
        ell = fragments.derive_list_sizes(frag, k=12)
    assert ell["a"] == 0


def test_build_reduction_problem_records_pairs():
    prob = fragments.build_reduction_problem(load_fragment("c1"))
    assert prob.pairs == [("b", "c")]
    assert prob.k == 12


# ---------------------------------------------------------------------------
# Euler identity


def tetrahedron():
    return {0: [1, 2, 3], 1: [0, 3, 2], 2: [0, 1, 3], 3: [0, 2, 1]}


def cube():
    rot = {}
    for i in range(4):
        rot[i] = [(i + 1) % 4, (i - 1) % 4, i + 4]
        rot[i + 4] = [4 + (i + 1) % 4, i, 4 + (i - 1) % 4]
    return rot


def test_euler_tetrahedron_and_cube():
    assert euler_check(tetrahedron()) == -8
    assert euler_check(cube()) == -8


def test_euler_not_closed():
    with pytest.raises(NotClosed):
        euler_check({0: [1], 1: [0], 2: [3], 3: [2]})
    with pytest.raises(NotClosed):
        PlaneGraph({0: [1], 1: []})


def grow_random_triangulation(rng, steps):
    """Random plane triangulation by repeatedly splitting a face with a new
    vertex joined to its three corners; rotations stay consistent."""
    rot = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    faces = [(0, 1, 2), (0, 2, 1)]
    nxt = 3
    for _ in range(steps):
        fi = rng.randrange(len(faces))
        a, b, c = faces.pop(fi)
        v = nxt
        nxt += 1
        rot[v] = [a, c, b]
        # insert v after the next corner in each corner's rotation so the
        # new triangles close up
        rot[a].insert(rot[a].index(b), v)
        rot[b].insert(rot[b].index(c), v)
        rot[c].insert(rot[c].index(a), v)
        faces += [(a, b, v), (b, c, v), (c, a, v)]
    return rot


def test_euler_on_random_triangulations():
    rng = random.Random(20260810)
    for trial in range(50):
        rot = grow_random_triangulation(rng, rng.randrange(1, 12))
        assert euler_check(rot) == -8
