"""
Text forms of configurations.

Distinct zeros: "(0+0)>(1+1)>(0+1,2,1)>" lists the pieces in cyclic order as
(a'+a'',rest...).

Closed saddle connections: "=(F0+3;1)-(H0,0)" lists each gluing followed by
the piece after it, so the leading gluing closes the cycle. "-" is a direct
gluing, "=" a cylinder, "F a'+a''" a figure-eight and "H b',b''" a pair of
holes; unchanged zeros follow a semicolon.
"""
from __future__ import annotations

import re

from .config.closed import ClosedConfig, ClosedPiece, canonicalize_closed
from .config.distinct import DistinctConfig, DistinctPiece, canonicalize_distinct
from .errors import ParseError

# Typeset glyphs accepted on input
TRANSLITERATION = {
    "≻": ">",  # succeeds
    "→": "-",  # rightwards arrow
    "⇒": "=",  # rightwards double arrow
    "−": "-",  # minus sign
}


def transliterate(text: str) -> str:
    for glyph, ascii_form in TRANSLITERATION.items():
        text = text.replace(glyph, ascii_form)
    return "".join(text.split())


class DistinctPattern:
    GROUP_RE = re.compile(r"\((?P<x>\d+)\+(?P<y>\d+)(?P<rest>(?:,\d+)*)\)>")

    @classmethod
    def parse(cls, text: str) -> DistinctConfig:
        text = transliterate(text)
        if not text:
            raise ParseError("Invalid pattern, empty", offset=0)
        pieces = []
        offset = 0
        while offset < len(text):
            match = cls.GROUP_RE.match(text, offset)
            if not match:
                raise ParseError(f"Invalid distinct pattern: {text!r}", offset=offset)
            rest = tuple(int(e) for e in match.group("rest").split(",") if e)
            pieces.append(DistinctPiece(int(match.group("x")), int(match.group("y")), rest))
            offset = match.end()
        p = len(pieces)
        m1 = sum(piece.a_prime for piece in pieces) + p - 1
        m2 = sum(piece.a_dprime for piece in pieces) + p - 1
        return DistinctConfig(m1, m2, tuple(pieces))

    @staticmethod
    def format(cfg: DistinctConfig) -> str:
        groups = []
        for piece in cfg.pieces:
            rest = "".join(f",{e}" for e in piece.rest)
            groups.append(f"({piece.a_prime}+{piece.a_dprime}{rest})>")
        return "".join(groups)


class ClosedPattern:
    PIECE_RE = re.compile(
        r"(?P<glue>[-=])\("
        r"(?:F(?P<a1>\d+)\+(?P<a2>\d+)|H(?P<b1>\d+),(?P<b2>\d+))"
        r"(?:;(?P<rest>\d+(?:,\d+)*))?\)"
    )
    GLUE_RE = re.compile(r"[-=]")

    @classmethod
    def parse(cls, text: str) -> ClosedConfig:
        text = transliterate(text)
        if not text:
            raise ParseError("Invalid pattern, empty", offset=0)
        pieces = []
        glue = []
        offset = 0
        while offset < len(text):
            match = cls.PIECE_RE.match(text, offset)
            if not match:
                break
            if match.group("a1") is not None:
                kind, x, y = "F", match.group("a1"), match.group("a2")
            else:
                kind, x, y = "H", match.group("b1"), match.group("b2")
            rest = tuple(int(e) for e in (match.group("rest") or "").split(",") if e)
            pieces.append(ClosedPiece(kind, int(x), int(y), rest))
            glue.append(match.group("glue"))
            offset = match.end()

        if offset < len(text):
            # A trailing gluing repeats the leading one, as in "=(F0+0)="
            trailing = cls.GLUE_RE.fullmatch(text, offset)
            if not (pieces and trailing and text[offset] == glue[0]):
                raise ParseError(f"Invalid closed pattern: {text!r}", offset=offset)
        return ClosedConfig(tuple(pieces), tuple(glue))

    @staticmethod
    def format(cfg: ClosedConfig) -> str:
        parts = []
        for glue, piece in zip(cfg.glue, cfg.pieces):
            if piece.is_figure_eight:
                kernel = f"F{piece.x}+{piece.y}"
            else:
                kernel = f"H{piece.x},{piece.y}"
            if piece.rest:
                kernel += ";" + ",".join(str(e) for e in piece.rest)
            parts.append(f"{glue}({kernel})")
        return "".join(parts)


def parse_distinct(text: str) -> DistinctConfig:
    return DistinctPattern.parse(text)


def parse_closed(text: str) -> ClosedConfig:
    return ClosedPattern.parse(text)


def print_distinct(cfg: DistinctConfig) -> str:
    return DistinctPattern.format(canonicalize_distinct(cfg))


def print_closed(cfg: ClosedConfig) -> str:
    return ClosedPattern.format(canonicalize_closed(cfg))
