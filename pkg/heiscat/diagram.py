#!/usr/bin/env python3
"""
Module containing the syntax of the category: object words, generator
slices, diagram terms, their parser/printer and the two symmetries

A term is read bottom to top. Slice positions are 0-based strand indices
counted from the left of the running word.
"""
# Standard libraries
from dataclasses import dataclass
import enum
from fractions import Fraction
import logging
import re
# Local libraries
import heiscat.errors
import heiscat.hecke
import heiscat.symfunc


logger = logging.getLogger('heiscat')


class Letter(enum.Enum):
    UP = "up"
    DOWN = "down"

    def flip(self):
        return Letter.DOWN if self is Letter.UP else Letter.UP

    def __repr__(self):
        return self.value


UP = Letter.UP
DOWN = Letter.DOWN


class Kind(enum.Enum):
    UPUP = "upup"
    RIGHTWARD = "rightward"
    LEFTWARD = "leftward"
    DOWNDOWN = "downdown"
    SPADE = "spade"

    def __repr__(self):
        return self.value


_CROSS_SOURCE = {
    Kind.UPUP: (UP, UP),
    Kind.RIGHTWARD: (UP, DOWN),
    Kind.LEFTWARD: (DOWN, UP),
    Kind.DOWNDOWN: (DOWN, DOWN),
}
_CROSS_KIND = {v: k for k, v in _CROSS_SOURCE.items()}
# Letters created by a cup / consumed by a cap of each kind
_CUP_LETTERS = {Kind.RIGHTWARD: (DOWN, UP), Kind.LEFTWARD: (UP, DOWN),
                Kind.SPADE: (UP, DOWN)}
_CAP_LETTERS = {Kind.RIGHTWARD: (UP, DOWN), Kind.LEFTWARD: (DOWN, UP),
                Kind.SPADE: (DOWN, UP)}


def word_from_letters(letters):
    return tuple(Letter(l) if not isinstance(l, Letter) else l
                 for l in letters)


def flip_word(word):
    return tuple(l.flip() for l in word)


def rotate_word(word):
    return tuple(l.flip() for l in reversed(word))


def render_word(word):
    return " ".join(l.value for l in word) if word else "."


def parse_word(text):
    tokens = text.split()
    if tokens == ["."] or not tokens:
        return ()
    try:
        return tuple(Letter(tok) for tok in tokens)
    except ValueError:
        raise heiscat.errors.ParseError("Invalid object word", text, 0)


def cross_kind(left, right):
    return _CROSS_KIND[(left, right)]


def cup_kind(left, right):
    """
    Kind of the plain cup creating the letters (left, right)
    """
    return Kind.RIGHTWARD if (left, right) == (DOWN, UP) else Kind.LEFTWARD


def cap_kind(left, right):
    return Kind.RIGHTWARD if (left, right) == (UP, DOWN) else Kind.LEFTWARD


@dataclass(frozen=True)
class Dot:
    pos: int
    orient: Letter = UP
    mult: int = 1

    width_in = 1
    width_out = 1

    def apply(self, word):
        if self.mult < 1:
            raise ValueError("Invalid dot multiplicity: {}".format(self.mult))
        if word[self.pos] is not self.orient:
            raise ValueError("dot expects {}".format(self.orient.value))
        return word

    def shifted(self, offset):
        return Dot(self.pos+offset, self.orient, self.mult)

    def render(self):
        prime = "" if self.orient is UP else "'"
        if self.mult == 1:
            return "dot{}@{}".format(prime, self.pos)
        return "x{}@{}^{}".format(prime, self.pos, self.mult)


@dataclass(frozen=True)
class Cross:
    pos: int
    kind: Kind = Kind.UPUP

    width_in = 2
    width_out = 2

    def apply(self, word):
        if self.kind not in _CROSS_SOURCE:
            raise ValueError("Invalid crossing kind: {}".format(self.kind))
        pair = _CROSS_SOURCE[self.kind]
        if word[self.pos:self.pos+2] != pair:
            raise ValueError("crossing {} expects {}".format(
                self.kind.value, render_word(pair)))
        return word[:self.pos] + (pair[1], pair[0]) + word[self.pos+2:]

    def shifted(self, offset):
        return Cross(self.pos+offset, self.kind)

    def render(self):
        name = {Kind.UPUP: "s", Kind.RIGHTWARD: "t", Kind.LEFTWARD: "t'",
                Kind.DOWNDOWN: "s'"}[self.kind]
        return "{}@{}".format(name, self.pos)


@dataclass(frozen=True)
class Cup:
    """
    Cup creating two letters at pos; spade cups carry a decoration r
    """
    pos: int
    kind: Kind = Kind.RIGHTWARD
    decoration: int = 0

    width_in = 0
    width_out = 2

    def apply(self, word):
        if self.kind not in _CUP_LETTERS:
            raise ValueError("Invalid cup kind: {}".format(self.kind))
        if self.pos > len(word):
            raise IndexError(self.pos)
        return word[:self.pos] + _CUP_LETTERS[self.kind] + word[self.pos:]

    def shifted(self, offset):
        return Cup(self.pos+offset, self.kind, self.decoration)

    def render(self):
        if self.kind is Kind.SPADE:
            return "cup_s@{}^{}".format(self.pos, self.decoration)
        suffix = "r" if self.kind is Kind.RIGHTWARD else "l"
        return "cup_{}@{}".format(suffix, self.pos)


@dataclass(frozen=True)
class Cap:
    """
    Cap consuming two letters at pos; spade caps carry a decoration r
    """
    pos: int
    kind: Kind = Kind.RIGHTWARD
    decoration: int = 0

    width_in = 2
    width_out = 0

    def apply(self, word):
        if self.kind not in _CAP_LETTERS:
            raise ValueError("Invalid cap kind: {}".format(self.kind))
        pair = _CAP_LETTERS[self.kind]
        if word[self.pos:self.pos+2] != pair:
            raise ValueError("cap expects {}".format(render_word(pair)))
        return word[:self.pos] + word[self.pos+2:]

    def shifted(self, offset):
        return Cap(self.pos+offset, self.kind, self.decoration)

    def render(self):
        if self.kind is Kind.SPADE:
            return "cap_s@{}^{}".format(self.pos, self.decoration)
        suffix = "r" if self.kind is Kind.RIGHTWARD else "l"
        return "cap_{}@{}".format(suffix, self.pos)


def apply_slice(piece, word, index=-1):
    """
    Target word of a slice, raising TermTypeError when it does not fit
    """
    if piece.pos < 0 or piece.pos + piece.width_in > len(word):
        raise heiscat.errors.TermTypeError(
            "Slice {} at index {} out of range for word '{}'".format(
                piece.render(), index, render_word(word)), index)
    try:
        return piece.apply(word)
    except (ValueError, IndexError) as err:
        raise heiscat.errors.TermTypeError(
            "Slice {} at index {} is ill-typed on '{}': {}".format(
                piece.render(), index, render_word(word), err), index)


@dataclass(frozen=True)
class DiagramTerm:
    """
    Vertical composite of slices, read from bottom to top

    The target is computed (and the term type-checked) on construction.
    """
    source: tuple
    slices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "source", word_from_letters(self.source))
        object.__setattr__(self, "slices", tuple(self.slices))
        words = [self.source]
        for index, piece in enumerate(self.slices):
            words.append(apply_slice(piece, words[-1], index))
        object.__setattr__(self, "_words", tuple(words))

    @property
    def target(self):
        return self._words[-1]

    @property
    def words(self):
        """
        Running words: words[i] is the source of slice i
        """
        return self._words

    def __len__(self):
        return len(self.slices)

    def render(self):
        return "{} | {}".format(render_word(self.source),
                                " ; ".join(p.render() for p in self.slices))

    def __str__(self):
        return self.render()

    def crossings(self):
        return sum(1 for p in self.slices if isinstance(p, Cross))

    def dots(self):
        return sum(p.mult for p in self.slices if isinstance(p, Dot))


def validate(term):
    """
    Recheck a term and return its target word
    """
    words = [term.source]
    for index, piece in enumerate(term.slices):
        words.append(apply_slice(piece, words[-1], index))
    return words[-1]


def identity(word):
    return DiagramTerm(word_from_letters(word), ())


def compose(top, bottom):
    """
    top o bottom: first bottom, then top
    """
    if bottom.target != top.source:
        raise heiscat.errors.TermTypeError(
            "Cannot compose: '{}' above '{}'".format(
                render_word(top.source), render_word(bottom.target)))
    return DiagramTerm(bottom.source, bottom.slices + top.slices)


def compose_all(*terms):
    """
    Compose terms listed from top to bottom
    """
    result = terms[-1]
    for term in reversed(terms[:-1]):
        result = compose(term, result)
    return result


def tensor(left, right):
    """
    left (x) right: left placed to the left of right
    """
    offset = len(left.target)
    slices = left.slices + tuple(p.shifted(offset) for p in right.slices)
    return DiagramTerm(left.source + right.source, slices)


_SLICE_RE = re.compile(
    r"^(dot'|dot|x'|x|s'|s|t'|t|cup_r|cup_l|cup_s|cap_r|cap_l|cap_s)"
    r"@(\d+)(?:\^(\d+))?$")


def _make_slice(name, pos, power):
    if name in ("dot", "x"):
        return Dot(pos, UP, power)
    if name in ("dot'", "x'"):
        return Dot(pos, DOWN, power)
    if name in ("s", "t", "t'", "s'"):
        kind = {"s": Kind.UPUP, "t": Kind.RIGHTWARD, "t'": Kind.LEFTWARD,
                "s'": Kind.DOWNDOWN}[name]
        return Cross(pos, kind)
    kind = {"r": Kind.RIGHTWARD, "l": Kind.LEFTWARD, "s": Kind.SPADE}[name[-1]]
    decoration = power if kind is Kind.SPADE else 0
    if name.startswith("cup"):
        return Cup(pos, kind, decoration)
    return Cap(pos, kind, decoration)


def parse(text):
    """
    Parse '<word> | <slice> ; <slice> ; ...' into a DiagramTerm
    """
    if "|" not in text:
        raise heiscat.errors.ParseError("Missing '|' after the object word",
                                        text, len(text))
    bar = text.index("|")
    word = parse_word(text[:bar])
    slices = []
    column = bar + 1
    body = text[bar+1:]
    chunks = body.split(";")
    if len(chunks) == 1 and not chunks[0].strip():
        chunks = []
    running = word
    for index, chunk in enumerate(chunks):
        compact = "".join(chunk.split())
        match = _SLICE_RE.match(compact)
        offset = column + len(chunk) - len(chunk.lstrip())
        if match is None:
            raise heiscat.errors.ParseError(
                "Invalid slice {!r}".format(chunk.strip()), text, offset)
        name, pos = match.group(1), int(match.group(2))
        power = match.group(3)
        if name in ("cup_s", "cap_s"):
            if power is None:
                raise heiscat.errors.ParseError(
                    "Decorated slice {} needs ^r".format(name), text, offset)
            power = int(power)
        elif name in ("dot", "dot'", "x", "x'"):
            power = int(power) if power is not None else 1
            if power < 1:
                raise heiscat.errors.ParseError(
                    "Dot multiplicity must be >= 1", text, offset)
        elif power is not None:
            raise heiscat.errors.ParseError(
                "Slice {} takes no exponent".format(name), text, offset)
        piece = _make_slice(name, pos, power)
        running = apply_slice(piece, running, index)
        slices.append(piece)
        column += len(chunk) + 1
    return DiagramTerm(word, tuple(slices))


def render(term):
    return term.render()


_OMEGA_CROSS = {Kind.UPUP: Kind.DOWNDOWN, Kind.DOWNDOWN: Kind.UPUP,
                Kind.RIGHTWARD: Kind.RIGHTWARD, Kind.LEFTWARD: Kind.LEFTWARD}


def omega(term):
    """
    Reflect a term in a horizontal axis

    Returns (image, sign); the image lives at the opposite central charge
    and the sign is (-1)^(crossings + leftward cups and caps).
    """
    sign = 1
    slices = []
    for piece in reversed(term.slices):
        if isinstance(piece, Dot):
            slices.append(Dot(piece.pos, piece.orient.flip(), piece.mult))
        elif isinstance(piece, Cross):
            sign = -sign
            slices.append(Cross(piece.pos, _OMEGA_CROSS[piece.kind]))
        else:
            if piece.kind is Kind.LEFTWARD:
                sign = -sign
            mirror = Cap if isinstance(piece, Cup) else Cup
            slices.append(mirror(piece.pos, piece.kind, piece.decoration))
    return DiagramTerm(flip_word(term.target), tuple(slices)), sign


_ROTATE_CROSS = {Kind.UPUP: Kind.DOWNDOWN, Kind.DOWNDOWN: Kind.UPUP,
                 Kind.RIGHTWARD: Kind.LEFTWARD, Kind.LEFTWARD: Kind.RIGHTWARD}


def rotate180(term):
    """
    The mate of a term: X -> Y becomes Y* -> X*, drawn upside down
    """
    slices = []
    words = term.words
    for index in range(len(term.slices)-1, -1, -1):
        piece = term.slices[index]
        size = len(words[index])
        if isinstance(piece, Dot):
            slices.append(Dot(size-piece.pos-1, piece.orient.flip(),
                              piece.mult))
        elif isinstance(piece, Cross):
            slices.append(Cross(size-piece.pos-2, _ROTATE_CROSS[piece.kind]))
        elif piece.kind is Kind.SPADE:
            raise ValueError("Invalid rotation: decorated cups and caps are "
                             "not closed under rotation")
        elif isinstance(piece, Cup):
            kind = Kind.LEFTWARD if piece.kind is Kind.RIGHTWARD \
                else Kind.RIGHTWARD
            slices.append(Cap(size-piece.pos, kind))
        else:
            kind = Kind.LEFTWARD if piece.kind is Kind.RIGHTWARD \
                else Kind.RIGHTWARD
            slices.append(Cup(size-piece.pos-2, kind))
    return DiagramTerm(rotate_word(term.target), tuple(slices))


# Named composites

def right_curl(dots=0):
    slices = [Cup(1, Kind.LEFTWARD), Cross(0, Kind.UPUP)]
    if dots:
        slices.append(Dot(1, UP, dots))
    slices.append(Cap(1, Kind.RIGHTWARD))
    return DiagramTerm((UP,), tuple(slices))


def left_curl(dots=0):
    slices = [Cup(0, Kind.RIGHTWARD), Cross(1, Kind.UPUP)]
    if dots:
        slices.append(Dot(1, UP, dots))
    slices.append(Cap(0, Kind.LEFTWARD))
    return DiagramTerm((UP,), tuple(slices))


def cw_bubble(dots=0):
    """
    Clockwise loop d o c' with the dots on its upward (left) side
    """
    slices = [Cup(0, Kind.LEFTWARD)]
    if dots:
        slices.append(Dot(0, UP, dots))
    slices.append(Cap(0, Kind.RIGHTWARD))
    return DiagramTerm((), tuple(slices))


def ccw_bubble(dots=0):
    """
    Counterclockwise loop d' o c with the dots on its upward (right) side
    """
    slices = [Cup(0, Kind.RIGHTWARD)]
    if dots:
        slices.append(Dot(1, UP, dots))
    slices.append(Cap(0, Kind.LEFTWARD))
    return DiagramTerm((), tuple(slices))


def phi_monomial(n, perm, exps):
    """
    Image of the PBW monomial x^exps * perm of H_n as a term on n up strands

    Strands are numbered from the right, so x_i is a dot at position n-i and
    s_j a crossing at position n-j-1.
    """
    slices = [Dot(n-i-1, UP, a) for i, a in enumerate(exps) if a]
    for j in heiscat.hecke.reduced_word(tuple(perm)):
        slices.append(Cross(n-j-1, Kind.UPUP))
    return DiagramTerm((UP,)*n, tuple(slices))


@dataclass(frozen=True)
class Decorated:
    """
    A term with Sym coefficients placed in regions and a scalar factor

    Each token is (level, gap, SymPoly): it sits after `level` slices, in
    the gap `gap` of the running word (gap 0 is the far left).
    """
    term: DiagramTerm
    tokens: tuple = ()
    coeff: Fraction = Fraction(1)

    def scaled(self, factor):
        return Decorated(self.term, self.tokens, self.coeff*Fraction(factor))


def decorate(term, coeff=1, tokens=()):
    tokens = tuple((level, gap, heiscat.symfunc.SymPoly.coerce(value))
                   for level, gap, value in tokens)
    return Decorated(term, tokens, Fraction(coeff))
