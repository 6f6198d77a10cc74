"""
Parenthesis presentations of Stirling permutations and their splittings into
tuples of classical Dyck words.

Stars are labelled 1..b in two ways. Type I numbers the b stars of each node
from right to left. Type II numbers all stars of the word from right to left,
cyclically. Component i of a labelling keeps every '(' and turns the stars
labelled i into ')'.
"""
import logging
from typing import Dict, List, Tuple

from src.commons.exceptions import InvalidObjectError
from src.domain.paren.models import DyckTuple, ParenPres
from src.domain.paren.sequences import beta
from src.domain.paths.models import EAST, NORTH
from src.domain.stirling.models import StirlingPerm
from src.domain.trees.ary_tree import CLOSE, OPEN, STAR, walk_word, xi, xi_inverse

logger = logging.getLogger(__name__)

StarLabels = Dict[int, int]


def alpha_star(perm: StirlingPerm) -> ParenPres:
    return ParenPres(walk_word(xi(perm)))


def alpha_star_inverse(pp: ParenPres | str) -> StirlingPerm:
    if isinstance(pp, str):
        pp = ParenPres(pp)
    return xi_inverse(pp.tree)


# ==================== ETIQUETAS DE ESTRELLAS ====================


def star_labels_type_I(pp: ParenPres) -> StarLabels:
    labels: StarLabels = {}
    for node in range(1, pp.n + 1):
        stars = pp.stars_of(node)
        for rank, pos in enumerate(reversed(stars), start=1):
            labels[pos] = rank
    return labels


def star_labels_type_II(pp: ParenPres) -> StarLabels:
    b = pp.b
    return {pos: k % b + 1 for k, pos in enumerate(reversed(pp.star_positions))}


def _component_words(pp: ParenPres, labels: StarLabels) -> Tuple[str, ...]:
    words = []
    for component in range(1, pp.b + 1):
        letters = []
        for pos, token in enumerate(pp.text):
            if token == OPEN:
                letters.append(NORTH)
            elif token == STAR and labels[pos] == component:
                letters.append(EAST)
        words.append("".join(letters))
    return tuple(words)


def tuple_from_labels(pp: ParenPres, labels: StarLabels) -> DyckTuple:
    return DyckTuple.from_texts(_component_words(pp, labels))


def alpha_I(perm: StirlingPerm | ParenPres) -> DyckTuple:
    pp = perm if isinstance(perm, ParenPres) else alpha_star(perm)
    return tuple_from_labels(pp, star_labels_type_I(pp))


def alpha_II(perm: StirlingPerm | ParenPres) -> DyckTuple:
    pp = perm if isinstance(perm, ParenPres) else alpha_star(perm)
    return tuple_from_labels(pp, star_labels_type_II(pp))


# ==================== INVERSA DE α_I ====================


def _opens_right_of_closes(word: str) -> List[int]:
    """For the j-th ')' counted from the right, the number of '(' to its right."""
    counts = []
    opens = 0
    for letter in reversed(word):
        if letter == NORTH:
            opens += 1
        else:
            counts.append(opens)
    return counts


def paren_from_tuple(t: DyckTuple) -> ParenPres:
    """
    Places the j-th '(' just left of star s^N_j + 1 (from the left) and the
    j-th ')' from the right just right of star s^E_j + 1 (from the right).
    """
    m, n = t.m, t.n
    total = m * n
    s_north = beta(t)
    s_east = [sum(column) for column in zip(*(_opens_right_of_closes(w.steps) for w in t.words))]
    opens_at = [0] * (total + 1)
    closes_at = [0] * (total + 1)
    for s in s_north:
        opens_at[s] += 1
    for s in s_east:
        if s > total:
            raise InvalidObjectError(f"Tuple {t} has no parenthesis presentation")
        closes_at[total - s] += 1
    parts = []
    for gap in range(total + 1):
        if gap:
            parts.append(STAR)
        parts.append(CLOSE * closes_at[gap] + OPEN * opens_at[gap])
    text = "".join(parts)
    try:
        pp = ParenPres(text)
    except InvalidObjectError as e:
        raise InvalidObjectError(f"Tuple {t} is not in the image of α_I: {e}")
    if alpha_I(pp) != t:
        raise InvalidObjectError(f"Tuple {t} is not in the image of α_I")
    return pp


# ==================== DE TIPO II A TIPO I ====================


def _slot(pp: ParenPres, labels: StarLabels, pos: int, component: int) -> int:
    """Index, in component word `component`, of the letter standing for text position `pos`."""
    opens = pp.text.count(OPEN, 0, pos)
    closes = sum(1 for s in pp.star_positions if s < pos and labels[s] == component)
    return opens + closes


def _move_close(word: List[str], source: int, target: int) -> None:
    """Moves the ')' at `source` so that it ends at `target`."""
    if word[source] != CLOSE:
        raise InvalidObjectError(f"Expected ')' at {source} of {''.join(word)}")
    word.pop(source)
    word.insert(target, CLOSE)


def type_II_to_I_trace(perm: StirlingPerm | ParenPres) -> List[Tuple[str, ...]]:
    """
    Parte de las palabras de α_II y, en la estrella p más a la izquierda cuya
    etiqueta no es la de tipo I, intercambia su etiqueta l1 con la estrella q
    del mismo nodo que lleva la etiqueta buscada l2. En p_{l1} el ')' de p
    pasa al hueco de q; en p_{l2} el ')' de q pasa al hueco de p.

    Devuelve las palabras tras cada movimiento, de α_II a α_I.
    """
    pp = perm if isinstance(perm, ParenPres) else alpha_star(perm)
    target = star_labels_type_I(pp)
    labels = star_labels_type_II(pp)
    words = [list(w) for w in alpha_II(pp).as_parens()]
    trace = [tuple("".join(w) for w in words)]
    for p in pp.star_positions:
        if labels[p] == target[p]:
            continue
        owner = pp.star_owners[p]
        # the stars of one node carry distinct labels at every step
        q = next(pos for pos in pp.stars_of(owner) if pos > p and labels[pos] == target[p])
        l1, l2 = labels[p], labels[q]
        x = _slot(pp, labels, p, l1)
        y = _slot(pp, labels, q, l2)
        labels[p], labels[q] = l2, l1
        # q > p: the slot of q is read after the ')' of p has left p_{l1}
        _move_close(words[l1 - 1], x, _slot(pp, labels, q, l1))
        _move_close(words[l2 - 1], y, _slot(pp, labels, p, l2))
        trace.append(tuple("".join(w) for w in words))
    logger.debug(f"Type II to I on {pp}: {len(trace) - 1} moves")
    return trace


def type_II_to_I(perm: StirlingPerm | ParenPres) -> DyckTuple:
    return DyckTuple.from_texts(type_II_to_I_trace(perm)[-1])


def labels_as_list(pp: ParenPres, labels: StarLabels) -> List[int]:
    return [labels[pos] for pos in pp.star_positions]
