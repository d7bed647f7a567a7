"""Phrase extraction over tag sequences.

Two tag-level patterns are applied to each tagged sentence: a verb-phrase
pattern whose matches become function phrases, then a noun-phrase pattern
whose matches (over the still-unconsumed spans) become characteristics.
Matching is leftmost-longest and non-overlapping; a consumed token can never
appear in a second phrase.

Each tag is encoded as one character so the patterns run as ordinary regular
expressions with token-index offsets:

    d = VBD, g = VBG, v = any other VB tag, n = any NN tag,
    t = DT, c = CD, j = JJ, p = POS, x = everything else
"""

from __future__ import annotations

import re

from rpkg.postag import TaggedSentence

_COMMON_TAIL = r"c*t?c*j*c*[dg]*n*p*c*[dg]*n*[dg]*n*p*c*n+"

FUNCTION_PATTERN = re.compile(r"[vdg]+" + _COMMON_TAIL)
CHARACTERISTIC_PATTERN = re.compile(_COMMON_TAIL)


def _encode(tags: tuple[str, ...]) -> str:
    out = []
    for tag in tags:
        if tag == "VBD":
            out.append("d")
        elif tag == "VBG":
            out.append("g")
        elif tag.startswith("VB"):
            out.append("v")
        elif tag.startswith("NN"):
            out.append("n")
        elif tag == "DT":
            out.append("t")
        elif tag == "CD":
            out.append("c")
        elif tag == "JJ":
            out.append("j")
        elif tag == "POS":
            out.append("p")
        else:
            out.append("x")
    return "".join(out)


def _match_spans(pattern: re.Pattern, encoded: str, offset: int) -> list[tuple[int, int]]:
    return [
        (offset + m.start(), offset + m.end())
        for m in pattern.finditer(encoded)
        if m.end() > m.start()
    ]


def extract_phrases(tagged: TaggedSentence) -> tuple[list[str], list[str]]:
    """Return (function phrases, characteristic phrases) for one sentence."""
    words = tagged.words
    encoded = _encode(tagged.tags)

    function_spans = _match_spans(FUNCTION_PATTERN, encoded, 0)

    # Remaining contiguous segments after consuming the function spans.
    consumed = [False] * len(encoded)
    for start, end in function_spans:
        for i in range(start, end):
            consumed[i] = True
    characteristic_spans: list[tuple[int, int]] = []
    i = 0
    while i < len(encoded):
        if consumed[i]:
            i += 1
            continue
        j = i
        while j < len(encoded) and not consumed[j]:
            j += 1
        characteristic_spans.extend(
            _match_spans(CHARACTERISTIC_PATTERN, encoded[i:j], i)
        )
        i = j

    functions = [" ".join(words[s:e]) for s, e in function_spans]
    characteristics = [" ".join(words[s:e]) for s, e in sorted(characteristic_spans)]
    return functions, characteristics
