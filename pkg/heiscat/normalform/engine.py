#!/usr/bin/env python3
"""
Module containing the normalization driver

Pending diagrams are kept in two pools. Dirty diagrams (tokens away from
the right frame face, closed loops or closed components) are handled first
in arrival order. Clean diagrams are merged by their encoding, adding up
their coefficients, and the one with the most crossings is processed next,
so that equal terms coming from different branches cancel before they
spawn further work. Each step applies one rule:

    - carry a misplaced token one face closer to the right frame face
    - evaluate an empty loop
    - remove an empty curl or bigon
    - search triangle flips until a curl or bigon appears (non-reduced)
    - search triangle flips towards the canonical lift (reduced)
    - slide dots towards the distinguished endpoints
    - record the basis diagram
"""
# Standard libraries
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
import logging
# Local libraries
import heiscat.coeffs
import heiscat.diagram
import heiscat.errors
import heiscat.normalform.basis
import heiscat.normalform.planar
import heiscat.symfunc
from heiscat.symfunc import SymPoly


logger = logging.getLogger('heiscat')


@dataclass(frozen=True)
class CategoryParams:
    """
    Central charge and the guardrails of the rewriting engine

    Attributes:
        k (int): central charge
        max_steps (int): rewrite steps before giving up
        max_flip_states (int): diagrams visited by one flip search
        max_dots (int): largest dot count allowed on a strand
        delta: when set, the lowest bubble -e_1 is replaced by this scalar
    """
    k: int
    max_steps: int = 200000
    max_flip_states: int = 20000
    max_dots: int = 64
    delta: Fraction = None

    def __post_init__(self):
        for name in ("max_steps", "max_flip_states", "max_dots"):
            if getattr(self, name) <= 0:
                raise ValueError("Invalid {}: {}".format(
                    name, getattr(self, name)))
        if self.delta is not None:
            object.__setattr__(self, "delta",
                               heiscat.coeffs.to_fraction(self.delta))

    @classmethod
    def from_config(cls, k, config=None, **overrides):
        """
        Build the parameters from the "config" section of a JSON file
        """
        config = dict(config or {})
        values = {name: config[name]
                  for name in ("max_steps", "max_flip_states", "max_dots",
                               "delta")
                  if config.get(name) is not None}
        values.update({n: v for n, v in overrides.items() if v is not None})
        return cls(int(k), **values)


class Normalizer():
    """
    Rewrites a term of Heis_k into the basis of reduced lifts
    """
    def __init__(self, params):
        self.params = params
        self.dirty = deque()
        self.clean = {}
        self.result = {}
        self.steps = 0
        self._targets = {}

    def __call__(self, item):
        return self.run(item)

    def run(self, item):
        """
        Normalize a DiagramTerm or a Decorated term
        """
        if isinstance(item, heiscat.diagram.Decorated):
            term, tokens, coeff = item.term, item.tokens, item.coeff
        else:
            term, tokens, coeff = item, (), 1
        heiscat.diagram.validate(term)
        self.dirty, self.clean, self.result = deque(), {}, {}
        self.steps = 0
        for diagram in heiscat.normalform.planar.from_term(
                term, self.params.k, tokens, coeff):
            self.push(diagram)
        while self.dirty or self.clean:
            self.steps += 1
            if self.steps > self.params.max_steps:
                raise heiscat.errors.ResourceCapError("rewrite steps",
                                                      self.params.max_steps)
            for diagram in self.step(self.pop()):
                self.push(diagram)
        msg = "Normalized '{}' at k={}:".format(term.render(), self.params.k)
        msg += "\n- Rewrite steps: {}".format(self.steps)
        msg += "\n- Basis diagrams: {}".format(len(self.result))
        logger.debug(msg)
        return heiscat.normalform.basis.NormalMorphism(
            term.source, term.target, self.result)

    # Pools

    def push(self, diagram):
        if diagram.is_zero():
            return
        if not diagram.is_clean():
            self.dirty.append(diagram)
            return
        key = diagram.encode()
        coeff = diagram.pop_coefficient()
        if key in self.clean:
            total = self.clean[key][1] + coeff
            if total.is_zero():
                del self.clean[key]
            else:
                self.clean[key][1] = total
        else:
            self.clean[key] = [diagram, coeff]

    def pop(self):
        if self.dirty:
            return self.dirty.popleft()
        key = max(self.clean, key=lambda k: len(self.clean[k][0].nodes))
        diagram, coeff = self.clean.pop(key)
        diagram.mul_token(diagram.right, coeff)
        return diagram

    # Rules

    def step(self, diagram):
        """
        Apply one rule and return the resulting diagrams
        """
        self._check_dots(diagram)
        misplaced = diagram.misplaced_token()
        if misplaced is not None:
            face, via = misplaced
            value = diagram.tokens[face]
            if value.is_constant():
                moved = diagram.copy()
                del moved.tokens[face]
                moved.mul_token(moved.right, value)
                return [moved]
            return diagram.slide_token(face, via)
        for lid in sorted(diagram.loops):
            if diagram.is_empty_loop(lid):
                return [diagram.copy().evaluate_loop(lid)]
        monogons = diagram.monogons()
        if monogons:
            return diagram.curl(monogons[0])
        bigons = diagram.bigons()
        if bigons:
            face = bigons[0]
            main, corrections = self.clear(diagram, diagram.face_edges(face))
            return corrections + main.r2(face)
        if not diagram.is_reduced():
            main, corrections = self.search(diagram, None)
            return corrections + [main]
        target = self.canonical_key(diagram)
        if diagram.encode(dots=False) != target:
            main, corrections = self.search(diagram, target)
            return corrections + [main]
        slide = self.misplaced_dots(diagram)
        if slide is not None:
            main, corrections = diagram.slide_dot(*slide)
            return corrections + [main]
        self.record(diagram)
        return []

    def _check_dots(self, diagram):
        counts = [e.dots for e in diagram.edges.values()] + \
            [l.dots for l in diagram.loops.values()]
        if counts and max(counts) > self.params.max_dots:
            raise heiscat.errors.ResourceCapError("dots", self.params.max_dots)

    def clear(self, diagram, eids, corrections=True):
        """
        Push the dots off the given edges through their head crossings
        """
        collected = []
        for eid in eids:
            if diagram.edges[eid].dots:
                diagram, extra = diagram.slide_dot(eid, True, corrections)
                collected += extra
        return diagram, collected

    def flip(self, diagram, face, corrections=True):
        cleared, collected = self.clear(diagram, diagram.face_edges(face),
                                        corrections)
        main, extra = cleared.flip(face, corrections)
        return main, collected + extra

    def search(self, diagram, target):
        """
        Breadth first search over triangle flips

        With target None the search stops at the first diagram holding a
        curl or a bigon, otherwise at the diagram whose shape is target.
        The flips along the found path are then replayed with their
        correction terms.
        """
        start = diagram.encode(dots=False)
        parents = {start: None}
        states = {start: diagram}
        queue = deque([start])
        found = None
        while queue and found is None:
            key = queue.popleft()
            state = states.pop(key)
            for face in state.triangles():
                following, _ = self.flip(state, face, corrections=False)
                new_key = following.encode(dots=False)
                if new_key in parents:
                    continue
                parents[new_key] = (key, face)
                if len(parents) > self.params.max_flip_states:
                    raise heiscat.errors.ResourceCapError(
                        "flip states", self.params.max_flip_states)
                if (target is None and (following.monogons() or
                                        following.bigons())) or \
                        new_key == target:
                    found = new_key
                    break
                states[new_key] = following
                queue.append(new_key)
        if found is None:
            logger.debug("No flip sequence found for a diagram with {} "
                         "crossings".format(len(diagram.nodes)))
            raise heiscat.errors.SearchExhaustedError(len(parents))
        path = []
        while parents[found] is not None:
            found, face = parents[found]
            path.append(face)
        logger.debug("Flip search: {} states, path of {} flips".format(
            len(parents), len(path)))
        main, corrections = diagram, []
        for face in reversed(path):
            main, extra = self.flip(main, face)
            corrections += extra
        return main, corrections

    def canonical_key(self, diagram):
        matching = diagram.matching()
        index = (matching, diagram.source, diagram.target)
        if index not in self._targets:
            lift = heiscat.normalform.basis.reduced_lift(
                matching, diagram.source, diagram.target)
            shape = heiscat.normalform.planar.build(
                lift.source, lift.target, lift.slices, (), self.params.k)
            self._targets[index] = shape.encode(dots=False)
        return self._targets[index]

    def misplaced_dots(self, diagram):
        """
        (edge, forward) for the first dotted edge that is not the
        distinguished edge of its strand, or None
        """
        special = diagram.distinguished_edges()
        for tail, head, path, _ in diagram.strands():
            pair = (heiscat.normalform.planar.endpoint(tail),
                    heiscat.normalform.planar.endpoint(head))
            goal = path.index(special[pair])
            for position, eid in enumerate(path):
                if position != goal and diagram.edges[eid].dots:
                    return eid, position < goal
        return None

    def record(self, diagram):
        special = diagram.distinguished_edges()
        matching = diagram.matching()
        dots = tuple(diagram.edges[special[pair]].dots for pair in matching)
        key = heiscat.normalform.basis.NormalDiagram(matching, dots)
        coeff = diagram.coefficient
        if self.params.delta is not None:
            coeff = heiscat.symfunc.specialize_lowest(coeff, self.params.delta)
        total = self.result.get(key, SymPoly()) + coeff
        if total.is_zero():
            self.result.pop(key, None)
        else:
            self.result[key] = total


def normalize(term, params):
    """
    Normal form of a term (or decorated term) in Heis_k
    """
    if isinstance(params, int):
        params = CategoryParams(params)
    return Normalizer(params).run(term)
