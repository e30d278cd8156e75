#!/usr/bin/env python3
"""
Module containing matchings, their canonical reduced lifts and the algebra
of normal morphisms (Sym-linear combinations of basis diagrams)

An endpoint is (0, i) for position i of the source word and (1, j) for
position j of the target word. A strand runs from its tail endpoint (an
up letter of the source or a down letter of the target) to its head.
"""
# Standard libraries
from dataclasses import dataclass, field, replace
import functools
import itertools
import logging
# Local libraries
import heiscat.diagram
import heiscat.errors
import heiscat.normalform.engine
import heiscat.symfunc
from heiscat.diagram import UP, DOWN, Cap, Cross, Cup, Dot
from heiscat.symfunc import SymPoly


logger = logging.getLogger('heiscat')


def tails_and_heads(source, target):
    source = heiscat.diagram.word_from_letters(source)
    target = heiscat.diagram.word_from_letters(target)
    tails = [(0, i) for i, l in enumerate(source) if l is UP] + \
        [(1, j) for j, l in enumerate(target) if l is DOWN]
    heads = [(0, i) for i, l in enumerate(source) if l is DOWN] + \
        [(1, j) for j, l in enumerate(target) if l is UP]
    return tails, heads


def enumerate_matchings(source, target):
    """
    All (source, target)-matchings as sorted tuples of (tail, head)
    """
    tails, heads = tails_and_heads(source, target)
    if len(tails) != len(heads):
        return []
    result = [tuple(sorted(zip(tails, perm)))
              for perm in itertools.permutations(heads)]
    return sorted(result)


def validate_matching(matching, source, target):
    tails, heads = tails_and_heads(source, target)
    if sorted(t for t, _ in matching) != sorted(tails) or \
            sorted(h for _, h in matching) != sorted(heads):
        raise ValueError("Invalid matching for '{}' -> '{}': {}".format(
            heiscat.diagram.render_word(source),
            heiscat.diagram.render_word(target), matching))


@dataclass(frozen=True, order=True)
class NormalDiagram:
    """
    A basis diagram: a matching with a dot count per strand

    dots[i] belongs to matching[i]; matching is sorted by tail.
    """
    matching: tuple
    dots: tuple

    def __post_init__(self):
        if len(self.matching) != len(self.dots):
            raise ValueError("Invalid dots for matching: {}".format(self.dots))
        if any(d < 0 for d in self.dots):
            raise ValueError("Invalid dot count: {}".format(self.dots))

    def render(self):
        if not self.matching:
            return "empty"
        return ", ".join("{}->{}{}".format(
            _label(tail), _label(head), "" if not d else "^{}".format(d))
            for (tail, head), d in zip(self.matching, self.dots))

    def to_json(self):
        return {"matching": [[list(tail), list(head)]
                             for tail, head in self.matching],
                "dots": list(self.dots)}


def _label(end):
    return "{}{}".format("X" if end[0] == 0 else "Y", end[1])


def enumerate_basis(source, target, max_dots):
    """
    Every matching with every dot vector bounded by max_dots
    """
    if max_dots < 0:
        raise ValueError("Invalid max_dots: {}".format(max_dots))
    result = []
    for matching in enumerate_matchings(source, target):
        for dots in itertools.product(range(max_dots+1),
                                      repeat=len(matching)):
            result.append(NormalDiagram(matching, dots))
    return result


@functools.lru_cache(maxsize=None)
def _lift(matching, source, target):
    strand_of = {}
    for index, (tail, head) in enumerate(matching):
        strand_of[tail] = index
        strand_of[head] = index
    slices = []
    # close the caps at the bottom
    word = [(letter, strand_of[(0, i)]) for i, letter in enumerate(source)]
    while True:
        spans = []
        for p1 in range(len(word)):
            for p2 in range(p1+1, len(word)):
                if word[p1][1] == word[p2][1]:
                    spans.append((p2-p1, p1, p2))
        if not spans:
            break
        _, p1, p2 = min(spans)
        for q in range(p1, p2-1):
            slices.append(Cross(q, heiscat.diagram.cross_kind(
                word[q][0], word[q+1][0])))
            word[q], word[q+1] = word[q+1], word[q]
        p = p2-1
        slices.append(Cap(p, heiscat.diagram.cap_kind(word[p][0],
                                                      word[p+1][0])))
        del word[p:p+2]
    # open the cups at the top, computed downwards from the target
    above = [(letter, strand_of[(1, j)]) for j, letter in enumerate(target)]
    downward = []
    while True:
        spans = []
        for p1 in range(len(above)):
            for p2 in range(p1+1, len(above)):
                if above[p1][1] == above[p2][1]:
                    spans.append((p2-p1, p1, p2))
        if not spans:
            break
        _, p1, p2 = min(spans)
        for q in range(p2, p1+1, -1):
            above[q-1], above[q] = above[q], above[q-1]
            downward.append(Cross(q-1, heiscat.diagram.cross_kind(
                above[q-1][0], above[q][0])))
        downward.append(Cup(p1, heiscat.diagram.cup_kind(above[p1][0],
                                                         above[p1+1][0])))
        del above[p1:p1+2]
    # sort the through strands in between
    rank = {strand: position for position, (_, strand) in enumerate(above)}
    while True:
        inversion = next((p for p in range(len(word)-1)
                          if rank[word[p][1]] > rank[word[p+1][1]]), None)
        if inversion is None:
            break
        p = inversion
        slices.append(Cross(p, heiscat.diagram.cross_kind(word[p][0],
                                                          word[p+1][0])))
        word[p], word[p+1] = word[p+1], word[p]
    slices.extend(reversed(downward))
    return heiscat.diagram.DiagramTerm(source, tuple(slices))


def reduced_lift(matching, source, target):
    """
    The canonical reduced lift of a matching

    Caps are closed first at the bottom (smallest span first, leftmost on
    ties, the left end moved right), then the through strands are sorted
    by adjacent crossings (leftmost inversion first), then cups are opened
    at the top (smallest span first, the right end moved left).
    """
    source = heiscat.diagram.word_from_letters(source)
    target = heiscat.diagram.word_from_letters(target)
    matching = tuple(sorted(matching))
    validate_matching(matching, source, target)
    term = _lift(matching, source, target)
    if term.target != target:
        raise ValueError("Invalid lift for matching: {}".format(matching))
    return term


def distinguished_endpoint(tail, head):
    """
    Target endpoint if any (the smaller one for a cup), else the smaller
    source endpoint
    """
    return min((tail, head), key=lambda end: (end[0] != 1, end[1]))


def materialize(diagram, source, target):
    """
    The term of a basis diagram: its reduced lift with the dots next to
    the distinguished endpoints
    """
    source = heiscat.diagram.word_from_letters(source)
    target = heiscat.diagram.word_from_letters(target)
    term = reduced_lift(diagram.matching, source, target)
    below, above = [], []
    for (tail, head), dots in zip(diagram.matching, diagram.dots):
        if not dots:
            continue
        side, pos = distinguished_endpoint(tail, head)
        if side == 1:
            above.append(Dot(pos, target[pos], dots))
        else:
            below.append(Dot(pos, source[pos], dots))
    return heiscat.diagram.DiagramTerm(
        source, tuple(below) + term.slices + tuple(above))


@dataclass
class NormalMorphism:
    """
    Sym-linear combination of basis diagrams between two words
    """
    source: tuple
    target: tuple
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.source = heiscat.diagram.word_from_letters(self.source)
        self.target = heiscat.diagram.word_from_letters(self.target)
        self.terms = {d: SymPoly.coerce(c) for d, c in self.terms.items()
                      if not SymPoly.coerce(c).is_zero()}

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, {})

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items())

    def coefficient(self, diagram):
        return self.terms.get(diagram, SymPoly())

    def __eq__(self, other):
        if not isinstance(other, NormalMorphism):
            return NotImplemented
        return (self.source, self.target, self.terms) == \
            (other.source, other.target, other.terms)

    def __add__(self, other):
        return mor_add(self, other)

    def __sub__(self, other):
        return mor_add(self, mor_scale(other, -1))

    def __mul__(self, scalar):
        return mor_scale(self, scalar)

    __rmul__ = __mul__

    def render(self):
        if not self.terms:
            return "0"
        if not self.source and not self.target:
            # End of the unit object: a bare Sym element
            return str(self.coefficient(NormalDiagram((), ())))
        lines = []
        for diagram, coeff in self.items():
            lines.append("({}) * [{}]".format(coeff, diagram.render()))
        return "\n".join(lines)

    def __str__(self):
        return self.render()

    def to_json(self):
        return {"source": heiscat.diagram.render_word(self.source),
                "target": heiscat.diagram.render_word(self.target),
                "terms": [dict(diagram.to_json(), coefficient=str(coeff))
                          for diagram, coeff in self.items()]}


def _check_shape(a, b):
    if (a.source, a.target) != (b.source, b.target):
        raise heiscat.errors.TermTypeError(
            "Cannot add morphisms '{}' -> '{}' and '{}' -> '{}'".format(
                heiscat.diagram.render_word(a.source),
                heiscat.diagram.render_word(a.target),
                heiscat.diagram.render_word(b.source),
                heiscat.diagram.render_word(b.target)))


def mor_add(a, b):
    _check_shape(a, b)
    terms = dict(a.terms)
    for diagram, coeff in b.terms.items():
        terms[diagram] = terms.get(diagram, SymPoly()) + coeff
    return NormalMorphism(a.source, a.target, terms)


def mor_scale(a, scalar):
    """
    Multiply every coefficient by a Sym element or a rational
    """
    scalar = SymPoly.coerce(scalar)
    return NormalMorphism(a.source, a.target,
                          {d: c*scalar for d, c in a.terms.items()})


def mor_compose(top, bottom, params):
    """
    top o bottom, re-normalized; coefficients are central and multiply
    """
    if bottom.target != top.source:
        raise heiscat.errors.TermTypeError(
            "Cannot compose: '{}' above '{}'".format(
                heiscat.diagram.render_word(top.source),
                heiscat.diagram.render_word(bottom.target)))
    total = NormalMorphism.zero(bottom.source, top.target)
    for upper, c_upper in top.items():
        for lower, c_lower in bottom.items():
            term = heiscat.diagram.compose(
                materialize(upper, top.source, top.target),
                materialize(lower, bottom.source, bottom.target))
            part = heiscat.normalform.engine.normalize(term, params)
            total = total + mor_scale(part, c_upper*c_lower)
    return total


def mor_tensor(left, right, params):
    """
    left (x) right; the coefficient of the left factor starts in the
    region between the two factors and is slid to the right
    """
    total = NormalMorphism.zero(left.source + right.source,
                                left.target + right.target)
    for d_left, c_left in left.items():
        for d_right, c_right in right.items():
            term = heiscat.diagram.tensor(
                materialize(d_left, left.source, left.target),
                materialize(d_right, right.source, right.target))
            decorated = heiscat.diagram.decorate(
                term, tokens=[(0, len(left.source), c_left)])
            part = heiscat.normalform.engine.normalize(decorated, params)
            total = total + mor_scale(part, c_right)
    return total


def mor_omega(morphism, params):
    """
    Image of a normal morphism under the reflection, normalized at -k
    """
    mirrored = replace(params, k=-params.k)
    total = NormalMorphism.zero(heiscat.diagram.flip_word(morphism.target),
                                heiscat.diagram.flip_word(morphism.source))
    for diagram, coeff in morphism.items():
        term = materialize(diagram, morphism.source, morphism.target)
        image, sign = heiscat.diagram.omega(term)
        part = heiscat.normalform.engine.normalize(image, mirrored)
        total = total + mor_scale(part,
                                  heiscat.symfunc.omega_sym(coeff) * sign)
    return total
