"""Rule-based part-of-speech tagging for short package descriptions.

The tagger is deliberately small: a closed-class lexicon, a lexicon of verbs
that commonly open package descriptions, a few suffix rules, and noun
defaults. It sits behind ``Tagger`` so a statistical tagger can replace it
without touching the phrase patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

_DETERMINERS = {
    "a", "an", "the", "this", "that", "these", "those",
    "each", "every", "some", "any", "no", "all", "both",
}
_PREPOSITIONS = {
    "in", "on", "at", "of", "for", "with", "from", "by", "into", "onto",
    "over", "under", "between", "within", "without", "via", "through",
    "during", "against", "about", "across", "along", "around", "as",
    "after", "before", "behind", "below", "above", "near", "per", "than",
    "like",
}
_CONJUNCTIONS = {"and", "or", "but", "nor", "so", "yet"}
_PRONOUNS = {"i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them"}

# Common description verbs; third-person -s forms tag VBZ, base forms VB.
_VERBS_BASE = {
    "provide", "implement", "contain", "output", "start", "drive",
    "publish", "support", "enable", "use", "allow",
}
_VERBS_VBZ = {
    "provides", "implements", "contains", "outputs", "starts", "drives",
    "publishes", "supports", "enables", "uses", "allows",
}

_TERMINAL_PUNCT = ".,!?;:"


@dataclass(frozen=True)
class TaggedSentence:
    """Ordered (word, Penn-Treebank tag) pairs for one sentence."""

    tokens: tuple[tuple[str, str], ...]

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(w for w, _ in self.tokens)

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(t for _, t in self.tokens)


class Tagger(Protocol):
    def tag(self, sentence: str) -> TaggedSentence: ...


def tokenize(sentence: str) -> list[str]:
    """Whitespace tokenization; terminal punctuation becomes its own token."""
    tokens = []
    for chunk in sentence.split():
        trailing = []
        while chunk and chunk[-1] in _TERMINAL_PUNCT:
            trailing.append(chunk[-1])
            chunk = chunk[:-1]
        if chunk:
            tokens.append(chunk)
        tokens.extend(reversed(trailing))
    return tokens


def _punct_tag(token: str) -> str:
    if token in ".!?":
        return "."
    if token == ",":
        return ","
    return ":"


def _tag_word(word: str, initial: bool) -> str:
    lower = word.lower()
    if lower in _DETERMINERS:
        return "DT"
    if lower in _PREPOSITIONS:
        return "IN"
    if lower in _CONJUNCTIONS:
        return "CC"
    if lower == "to":
        return "TO"
    if lower in _PRONOUNS:
        return "PRP"
    if lower in _VERBS_VBZ:
        return "VBZ"
    if lower in _VERBS_BASE:
        return "VB"
    if "_" in word:
        # Code identifiers (package names etc.) never join phrases.
        return "FW"
    if word.isdigit():
        return "CD"
    if lower.endswith("ing") and len(lower) > 4:
        return "VBG"
    if lower.endswith("ed") and len(lower) > 3:
        return "VBD"
    if lower.endswith("ly") and len(lower) > 3:
        return "RB"
    if lower.endswith("s") and not lower.endswith("ss") and len(lower) > 3:
        return "NNS"
    if word[0].isupper() and not initial:
        return "NNP"
    return "NN"


class RuleTagger:
    """Built-in deterministic tagger."""

    def tag(self, sentence: str) -> TaggedSentence:
        tokens = tokenize(sentence)
        tagged = []
        for i, token in enumerate(tokens):
            if all(c in _TERMINAL_PUNCT for c in token):
                tagged.append((token, _punct_tag(token)))
            else:
                tagged.append((token, _tag_word(token, initial=i == 0)))
        return TaggedSentence(tokens=tuple(tagged))


_DEFAULT_TAGGER = RuleTagger()


def pos_tag(sentence: str, tagger: Tagger | None = None) -> TaggedSentence:
    return (tagger or _DEFAULT_TAGGER).tag(sentence)
