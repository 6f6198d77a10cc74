from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from pydantic import TypeAdapter, ValidationError

from src.commons.exceptions import InvalidObjectError
from src.domain.paths.models import ONE_ONE, DyckWord
from src.domain.paths.sequences import StepSeq, step_seq_to_word, word_to_step_seq
from src.domain.trees.ary_tree import CLOSE, OPEN, STAR, AryNode, tree_from_walk_word

_words_adapter = TypeAdapter(List[str])


@dataclass(frozen=True)
class ParenPres:
    """
    Parenthesis presentation over '(', ')' and '*': the contour word of a
    (b+1)-ary tree whose nodes are numbered in pre-order.
    """

    text: str

    def __post_init__(self):
        self.tree  # parses and validates

    @cached_property
    def tree(self) -> AryNode:
        return tree_from_walk_word(self.text)

    @property
    def b(self) -> int:
        return self.tree.b

    @property
    def n(self) -> int:
        return self.text.count(OPEN)

    def epsilon(self, i: int) -> int:
        """Token index of the i-th '('."""
        if not 1 <= i <= self.n:
            raise InvalidObjectError(f"No node {i} in a presentation of size {self.n}")
        seen = 0
        for pos, token in enumerate(self.text):
            if token == OPEN:
                seen += 1
                if seen == i:
                    return pos
        raise InvalidObjectError(f"No node {i}")

    @cached_property
    def star_positions(self) -> List[int]:
        return [pos for pos, token in enumerate(self.text) if token == STAR]

    @cached_property
    def star_owners(self) -> Dict[int, int]:
        """Token index of each star mapped to the pre-order label of its node."""
        owners = {}
        stack: List[int] = []
        counter = 0
        for pos, token in enumerate(self.text):
            if token == OPEN:
                counter += 1
                stack.append(counter)
            elif token == CLOSE:
                stack.pop()
            else:
                owners[pos] = stack[-1]
        return owners

    def stars_of(self, label: int) -> List[int]:
        return [pos for pos, owner in self.star_owners.items() if owner == label]

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class DyckTuple:
    """m classical Dyck words of one size, component 1 first."""

    words: Tuple[DyckWord, ...]

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        if not self.words:
            raise InvalidObjectError("A tuple needs at least one component")
        for word in self.words:
            if word.slope != ONE_ONE:
                raise InvalidObjectError(f"Component {word} is not a (1,1) word")
        if len({w.n for w in self.words}) != 1:
            raise InvalidObjectError(f"Components of {self} have different sizes")

    @property
    def m(self) -> int:
        return len(self.words)

    @property
    def n(self) -> int:
        return self.words[0].n

    @classmethod
    def from_texts(cls, texts: Sequence[str]) -> DyckTuple:
        return cls(tuple(DyckWord.dyck11(t) for t in texts))

    @classmethod
    def parse(cls, text: str) -> DyckTuple:
        """Acepta un arreglo JSON de palabras o palabras separadas por comas."""
        text = text.strip()
        if text.startswith("["):
            try:
                items = _words_adapter.validate_json(text)
            except ValidationError as e:
                raise InvalidObjectError(f"Malformed tuple {text!r}: {e}")
        else:
            items = [part for part in text.replace(" ", "").split(",") if part]
        return cls.from_texts(items)

    @classmethod
    def from_step_seqs(cls, seqs: Sequence[StepSeq]) -> DyckTuple:
        return cls(tuple(step_seq_to_word(u, ONE_ONE) for u in seqs))

    def step_seqs(self) -> Tuple[StepSeq, ...]:
        return tuple(word_to_step_seq(w) for w in self.words)

    def as_parens(self) -> Tuple[str, ...]:
        return tuple(w.as_parens() for w in self.words)

    def is_young_chain(self) -> bool:
        """α_m ≤_Y … ≤_Y α_1, i.e. step sequences weakly decrease from component m to 1."""
        seqs = self.step_seqs()
        return all(
            all(x <= y for x, y in zip(seqs[k], seqs[k + 1]))
            for k in range(len(seqs) - 1)
        )

    def to_json(self) -> str:
        return _words_adapter.dump_json(list(self.as_parens())).decode()

    def __str__(self) -> str:
        return ",".join(self.as_parens())
