import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from homga import trees as tr
from homga.trees import DASHV, LEAF, VDASH, PlanarBinaryTree

PRINTED = ["[0]", "[1]", "[12]", "[21]", "[123]", "[213]", "[131]", "[312]", "[321]"]


def test_printed_list_and_order():
    got = [repr(y) for n in range(4) for y in tr.enumerate_trees(n)]
    assert got == PRINTED


@pytest.mark.parametrize("n", range(9))
def test_catalan_counts(n):
    assert len(tr.enumerate_trees(n)) == oracles.catalan(n) == tr.catalan(n)
    assert len(set(tr.enumerate_trees(n))) == len(tr.enumerate_trees(n))


@pytest.mark.parametrize("n", range(7))
def test_word_labels_match_independent_trees(n):
    # same set of words as a from-scratch nested-tuple enumeration
    ours = {tr.word_label(y) for y in tr.enumerate_trees(n)}
    ref = {oracles.word(t) for t in oracles.trees(n)}
    if n == 0:
        ref = {(0,)}
    assert ours == ref
    assert len(ours) == oracles.catalan(n)


def test_graft_words():
    one = tr.graft(LEAF, LEAF)
    assert repr(one) == "[1]"
    assert repr(tr.graft(one, LEAF)) == "[12]"
    assert repr(tr.graft(LEAF, one)) == "[21]"


@pytest.mark.parametrize("n", range(6))
def test_parse_word_roundtrip(n):
    for y in tr.enumerate_trees(n):
        assert tr.parse_word(repr(y)) == y
        assert tr.tree_index(y) == tr.enumerate_trees(n).index(y)


def test_parse_word_rejects():
    with pytest.raises(ValueError):
        tr.parse_word("[11]")


def test_faces_of_small_trees():
    one = tr.parse_word("[1]")
    assert tr.face(one, 0) == LEAF and tr.face(one, 1) == LEAF
    for i in range(3):
        assert tr.face(tr.parse_word("[12]"), i) == one
    with pytest.raises(IndexError):
        tr.face(one, 2)
    with pytest.raises(IndexError):
        tr.face(LEAF, 0)


def test_face_examples_on_three_trees():
    y = tr.parse_word("[131]")
    assert [repr(tr.face(y, i)) for i in range(4)] == ["[21]", "[21]", "[12]", "[12]"]


@pytest.mark.parametrize("n", range(2, 7))
def test_presimplicial(n):
    for y in tr.enumerate_trees(n):
        for i, j in itertools.combinations(range(n + 1), 2):
            assert tr.face(tr.face(y, j), i) == tr.face(tr.face(y, i), j - 1)


def test_bullet_examples():
    y12, y21 = tr.parse_word("[12]"), tr.parse_word("[21]")
    assert tr.bullet(y12, 0) == VDASH
    assert tr.bullet(y21, 0) == DASHV
    assert tr.bullet(y12, 2) == VDASH
    assert tr.bullet(y21, 2) == DASHV
    one = tr.parse_word("[1]")
    assert tr.bullet(one, 0) == DASHV and tr.bullet(one, 1) == VDASH
    with pytest.raises(IndexError):
        tr.bullet(y12, 3)


def _side_of_leaf(y, i):
    """Independent recomputation: walk the leaves left to right."""
    out = []

    def walk(t, side):
        if t.is_leaf:
            out.append(side)
            return
        walk(t.left, "left")
        walk(t.right, "right")

    walk(y, None)
    return out[i]


@pytest.mark.parametrize("n", range(1, 6))
def test_bullet_structural(n):
    for y in tr.enumerate_trees(n):
        assert tr.bullet(y, 0) == (DASHV if y.left.is_leaf else VDASH)
        assert tr.bullet(y, n) == (VDASH if y.right.is_leaf else DASHV)
        for i in range(1, n):
            want = DASHV if _side_of_leaf(y, i) == "left" else VDASH
            assert tr.bullet(y, i) == want


@pytest.mark.parametrize("k", range(1, 6))
def test_r0_all_ones_is_identity(k):
    for y in tr.enumerate_trees(k):
        assert tr.r0(k, (1,) * k, y) == y
        for i in range(1, k + 1):
            assert repr(tr.ri(k, (1,) * k, i, y)) == "[1]"


def test_r0_single_block_is_one_tree():
    for n in range(1, 5):
        for y in tr.enumerate_trees(n):
            assert repr(tr.r0(1, (n,), y)) == "[1]"
            assert tr.ri(1, (n,), 1, y) == y


def test_r_face_indices():
    assert tr.r0_faces((2, 3)) == [1, 3, 4]
    assert tr.ri_faces((2, 3), 1) == [3, 4, 5]
    assert tr.ri_faces((2, 3), 2) == [0, 1]


def test_r_shape_errors():
    y = tr.parse_word("[123]")
    with pytest.raises(ValueError):
        tr.r0(2, (1, 1), y)
    with pytest.raises(ValueError):
        tr.ri(2, (1, 2), 3, y)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.data())
def test_r_maps_land_in_right_sets(ns, data):
    N = sum(ns)
    y = data.draw(st.sampled_from(tr.enumerate_trees(N)))
    assert tr.r0(len(ns), tuple(ns), y).size == len(ns)
    for i, n in enumerate(ns, start=1):
        assert tr.ri(len(ns), tuple(ns), i, y).size == n


def test_trees_are_values():
    a = PlanarBinaryTree(LEAF, PlanarBinaryTree(LEAF, LEAF))
    b = tr.parse_word("[21]")
    assert a == b and hash(a) == hash(b)
    with pytest.raises(ValueError):
        PlanarBinaryTree(LEAF, None)
