from math import comb

import pytest

from src.commons.exceptions import InvalidObjectError
from src.commons.testing import SMALL_SLOPES
from src.domain.bintrees.models import BinNode, bintree_to_dot, post_order_edge_labels
from src.domain.bintrees.construction import tr
from src.domain.bintrees.words import decode, omega, omega1, omega2, sharp
from src.domain.paths.models import DyckWord, Slope
from src.domain.paths.sequences import lowest_path, prefix_dominates
from src.domain.paths.services.enumeration_service import EnumerationService


def _trees(edges):
    if edges == 0:
        yield BinNode()
        return
    for has_left in (False, True):
        for has_right in (False, True):
            rest = edges - has_left - has_right
            if rest < 0 or not (has_left or has_right):
                continue
            for k in range(rest + 1):
                if (not has_left and k) or (not has_right and rest - k):
                    continue
                lefts = list(_trees(k)) if has_left else [None]
                rights = list(_trees(rest - k)) if has_right else [None]
                for left in lefts:
                    for right in rights:
                        yield BinNode(left=left, right=right)


def _words(length):
    if length == 0:
        yield ""
        return
    for rest in _words(length - 1):
        yield rest + "N"
        yield rest + "E"


# ==================== TESTS DE PALABRAS ====================


def test_single_edges():
    left = BinNode(left=BinNode())
    right = BinNode(right=BinNode())
    assert omega(left) == "1!" and omega(right) == "2@"
    assert omega1(left) == omega2(left) == "N"
    assert omega1(right) == omega2(right) == "E"


def test_cherry_words():
    tree = BinNode(left=BinNode(), right=BinNode(left=BinNode()))
    assert omega(tree) == "1!21!@"
    assert omega1(tree) == "NNE"
    assert omega2(tree) == "NEN"


@pytest.mark.parametrize("edges", [0, 1, 2, 3, 4, 5])
def test_tree_counts_are_catalan(edges):
    assert len(list(_trees(edges))) == comb(2 * edges + 2, edges + 1) // (edges + 2)


@pytest.mark.parametrize("edges", [1, 2, 3, 4, 5, 6])
def test_first_word_dominates_the_second(edges):
    for tree in _trees(edges):
        assert prefix_dominates(omega1(tree), omega2(tree))


# ==================== TESTS DE DECODIFICACIÓN ====================


@pytest.mark.parametrize("edges", [0, 1, 2, 3, 4, 5, 6])
def test_decode_inverts_the_walk_words(edges):
    for tree in _trees(edges):
        assert decode(omega1(tree), omega2(tree)) == tree


@pytest.mark.parametrize("length", [1, 2, 3, 4, 5])
def test_every_dominating_pair_decodes(length):
    pairs = [
        (w1, w2)
        for w1 in _words(length)
        for w2 in _words(length)
        if prefix_dominates(w1, w2)
    ]
    trees = {decode(w1, w2) for w1, w2 in pairs}
    assert len(trees) == len(pairs) == comb(2 * length + 2, length + 1) // (length + 2)


def test_decode_rejects_non_dominating_pairs():
    with pytest.raises(InvalidObjectError):
        decode("EN", "NE")


# ==================== TESTS DE TR ====================


def test_tr_of_single_step_pair():
    assert tr(DyckWord.dyck11("NE")) == BinNode(left=BinNode(), right=BinNode())


def test_tr_walk_words_are_the_path():
    enumerator = EnumerationService(budget=100_000)
    for slope in SMALL_SLOPES:
        n = 1
        while (slope.a + slope.b) * n <= 12:
            for path in enumerator.enumerate_paths(slope, n):
                tree = tr(path)
                assert omega1(tree) == omega2(tree) == path.steps
                assert tree.edge_count == len(path.steps)
            n += 1


# ==================== TESTS DE DUALIDAD ====================


def test_sharp_small_path():
    dual = sharp(DyckWord.parse("NENEE", Slope(2, 3)))
    assert dual.steps == "NNENE" and dual.slope == Slope(3, 2)


def test_sharp_is_an_involution():
    path = DyckWord.parse("NENENEENEE", Slope(2, 3))
    assert sharp(sharp(path)) == path


@pytest.mark.parametrize("slope", SMALL_SLOPES)
def test_sharp_of_lowest_path(slope):
    assert sharp(lowest_path(slope, 2)) == lowest_path(slope.dual, 2)


# ==================== TESTS DE EXPORTACIÓN ====================


def test_post_order_edge_labels():
    tree = BinNode(left=BinNode(right=BinNode()), right=BinNode())
    assert post_order_edge_labels(tree) == [("L", 2), ("R", 1), ("R", 3)]


def test_bintree_dot():
    tree = BinNode(left=BinNode(right=BinNode()), right=BinNode())
    dot = bintree_to_dot(tree, modulus=2)
    assert 'b0 -> b1 [label=0 tailport=sw]' in dot
    assert 'b1 -> b2 [label=1 tailport=se]' in dot
    assert 'b0 -> b3 [label=1 tailport=se]' in dot
