import pytest

from src.commons.exceptions import InvalidObjectError
from src.domain.paren.models import DyckTuple, ParenPres
from src.domain.paren.presentation import (
    alpha_I,
    alpha_II,
    alpha_star,
    alpha_star_inverse,
    labels_as_list,
    paren_from_tuple,
    star_labels_type_I,
    star_labels_type_II,
    type_II_to_I,
    type_II_to_I_trace,
)
from src.domain.paren.sequences import gamma_II
from src.domain.paths.models import Slope
from src.domain.paths.services.enumeration_service import EnumerationService
from src.domain.stirling.maps import enumerate_stirling, zeta
from src.domain.stirling.models import StirlingPerm


@pytest.fixture
def enumerator():
    """Enumerador con presupuesto de pruebas."""
    return EnumerationService(budget=100_000)


@pytest.fixture
def sample_perm():
    """Permutación de Stirling de la sucesión (0,1,2,4) con b=3."""
    return zeta((0, 1, 2, 4), 3)


@pytest.fixture
def swap_perm():
    """Permutación de la sucesión (0,1,1,3) con b=3."""
    return zeta((0, 1, 1, 3), 3)


# ==================== TESTS DE PRESENTACIÓN ====================


def test_alpha_star_of_sample_perm(sample_perm):
    assert str(alpha_star(sample_perm)) == "(*(*(**(***)*)**)**)"


def test_alpha_star_of_swap_perm(swap_perm):
    assert str(alpha_star(swap_perm)) == "(*((**(***)*)***)**)"


@pytest.mark.parametrize("n,b", [(3, 1), (3, 2), (3, 3), (4, 2)])
def test_alpha_star_round_trip(enumerator, n, b):
    for u in enumerator.enumerate_step_seqs(Slope(1, b), n):
        perm = zeta(u, b)
        assert alpha_star_inverse(alpha_star(perm)) == perm


def test_presentation_forgets_labels():
    perm = StirlingPerm.parse("133122", 2)
    assert alpha_star_inverse(alpha_star(perm)) != perm


def test_inverse_accepts_text():
    assert alpha_star_inverse("(*(**)*(**))") == StirlingPerm.parse("122133", 2)


@pytest.mark.parametrize("text", ["(*(**)", "(*(*)*)", "*()", ""])
def test_malformed_presentations(text):
    with pytest.raises(InvalidObjectError):
        ParenPres(text)


def test_star_owners():
    pp = ParenPres("(*(**)*(**))")
    assert [pp.star_owners[p] for p in pp.star_positions] == [1, 2, 2, 1, 3, 3]
    assert pp.epsilon(3) == 7


# ==================== TESTS DE ETIQUETAS ====================


def test_type_I_labels(swap_perm):
    pp = alpha_star(swap_perm)
    assert labels_as_list(pp, star_labels_type_I(pp)) == [3, 3, 2, 3, 2, 1, 1, 3, 2, 1, 2, 1]


def test_type_II_labels(swap_perm):
    pp = alpha_star(swap_perm)
    assert labels_as_list(pp, star_labels_type_II(pp)) == [3, 2, 1] * 4


def test_alpha_I_of_122133():
    assert alpha_I(StirlingPerm.parse("122133", 2)).as_parens() == ("(())()", "()()()")


def test_alpha_I_of_sample_perm(sample_perm):
    assert alpha_I(sample_perm).as_parens() == ("(((())))", "((()()))", "()()()()")


def test_alpha_II_of_swap_perm(swap_perm):
    assert alpha_II(swap_perm).as_parens() == ("((()()))", "((()()))", "()((()))")


def test_alpha_II_of_122133():
    assert alpha_II(StirlingPerm.parse("122133", 2)).as_parens() == ("(())()", "()()()")


@pytest.mark.parametrize(
    "slope,max_n", [(Slope(1, 2), 4), (Slope(1, 3), 3), (Slope(2, 3), 2), (Slope(3, 2), 2)]
)
def test_alpha_II_is_the_balanced_split(enumerator, slope, max_n):
    for n in range(1, max_n + 1):
        for u in enumerator.enumerate_step_seqs(slope, n):
            assert alpha_II(zeta(u, slope.b)) == gamma_II(u, slope.b), u


# ==================== TESTS DE TIPO II A TIPO I ====================


def test_swap_trace(swap_perm):
    assert type_II_to_I_trace(swap_perm) == [
        ("((()()))", "((()()))", "()((()))"),
        ("((()()))", "(((())))", "()(()())"),
        ("(((())))", "((()()))", "()(()())"),
        ("(((())))", "((()()))", "()(()())"),
        ("(((())))", "((()()))", "()(()())"),
    ]


def test_swap_trace_moves_touch_two_words(enumerator):
    for perm in enumerate_stirling(4, 3, enumerator):
        trace = type_II_to_I_trace(perm)
        for before, after in zip(trace, trace[1:]):
            assert sum(x != y for x, y in zip(before, after)) <= 2


def test_type_II_to_I_ends_at_alpha_I(swap_perm):
    assert type_II_to_I(swap_perm) == alpha_I(swap_perm)


@pytest.mark.parametrize("n,b", [(3, 2), (3, 3), (4, 2)])
def test_type_II_to_I_on_every_tree(enumerator, n, b):
    for perm in enumerate_stirling(n, b, enumerator):
        assert type_II_to_I(perm) == alpha_I(perm)


def test_type_II_equals_type_I_for_binary_trees(enumerator):
    for perm in enumerate_stirling(4, 1, enumerator):
        assert len(type_II_to_I_trace(perm)) == 1


# ==================== TESTS DE INVERSA ====================


def test_paren_from_tuple_golden():
    t = DyckTuple.from_texts(["((())())", "()()()()"])
    assert str(paren_from_tuple(t)) == "(*(*(**)*)(**)*)"


def test_paren_from_small_tuple():
    assert str(paren_from_tuple(DyckTuple.from_texts(["(())", "()()"]))) == "(*(**)*)"


def test_tuple_outside_the_image_is_rejected():
    with pytest.raises(InvalidObjectError):
        paren_from_tuple(DyckTuple.from_texts(["()()", "(())"]))


@pytest.mark.parametrize("b,max_n", [(1, 4), (2, 4), (3, 3)])
def test_paren_from_tuple_inverts_alpha_I(enumerator, b, max_n):
    for n in range(1, max_n + 1):
        for u in enumerator.enumerate_step_seqs(Slope(1, b), n):
            pp = alpha_star(zeta(u, b))
            assert paren_from_tuple(alpha_I(pp)) == pp, u


# ==================== TESTS DE TUPLAS ====================


def test_tuple_parse_forms():
    assert DyckTuple.parse('["(())()", "()()()"]') == DyckTuple.parse("NNEENE, NENENE")


def test_tuple_sizes_must_match():
    with pytest.raises(InvalidObjectError):
        DyckTuple.from_texts(["()", "(())"])


def test_young_chain():
    assert DyckTuple.from_texts(["(())", "()()"]).is_young_chain()
    assert not DyckTuple.from_texts(["()()", "(())"]).is_young_chain()


def test_tuple_json():
    assert DyckTuple.from_texts(["()"]).to_json() == '["()"]'


@pytest.mark.parametrize("text", ['["()"', '["()", 1]', '[["()"]]'])
def test_tuple_parse_rejects_malformed_json(text):
    with pytest.raises(InvalidObjectError):
        DyckTuple.parse(text)


def test_tuple_json_is_read_back():
    t = DyckTuple.from_texts(["((())())", "()()()()"])
    assert DyckTuple.parse(t.to_json()) == t
