#!/usr/bin/env python3
"""
Module containing the verification suites

Every suite returns a CheckReport. Symbolic checks normalize both sides of
a relation in Heis_k; matrix checks compare both sides under the
cyclotomic functor, which only exists for k < 0. A failing case always
carries a witness with the two unequal values.
"""
# Standard libraries
from dataclasses import dataclass, field
from fractions import Fraction
import itertools
import logging
import math
# 3rd party libraries
import numpy as np
# Local libraries
import heiscat.coeffs
import heiscat.diagram
import heiscat.errors
import heiscat.functor
import heiscat.hecke
import heiscat.normalform.basis
import heiscat.normalform.engine
import heiscat.symfunc
from heiscat.diagram import UP, DOWN, Cap, Cross, Cup, Dot, Kind
from heiscat.symfunc import Orientation, SymPoly


logger = logging.getLogger('heiscat')

SUITES = ("defining", "derived", "khovanov", "independence", "fuzz", "hecke",
          "series", "phipsi", "omega")


@dataclass
class CheckReport:
    """
    Outcome of one suite: an ordered list of named pass/fail cases
    """
    suite: str
    params: dict = field(default_factory=dict)
    seed: int = None
    cases: list = field(default_factory=list)

    def add(self, name, passed, witness=None):
        case = {"name": name, "status": "pass" if passed else "fail"}
        if not passed and witness is not None:
            case["witness"] = witness
        self.cases.append(case)
        if not passed:
            logger.debug("Case failed: {}".format(name))
        return passed

    def merge(self, other):
        self.cases.extend(other.cases)
        return self

    @property
    def passed(self):
        return all(c["status"] == "pass" for c in self.cases)

    def failures(self):
        return [c for c in self.cases if c["status"] == "fail"]

    def to_json(self):
        return {"suite": self.suite, "params": self.params, "seed": self.seed,
                "cases": list(self.cases)}

    def render(self):
        lines = ["{}: {} cases, {} failed".format(
            self.suite, len(self.cases), len(self.failures()))]
        for case in self.cases:
            lines.append("  [{}] {}".format(case["status"], case["name"]))
            if "witness" in case:
                for key, value in case["witness"].items():
                    lines.append("      {}: {}".format(key, value))
        return "\n".join(lines)


@dataclass(frozen=True)
class Relation:
    """
    Two Sym-linear combinations of decorated terms that must agree
    """
    name: str
    source: tuple
    target: tuple
    lhs: tuple
    rhs: tuple


def _dec(text, coeff=1, tokens=()):
    return heiscat.diagram.decorate(heiscat.diagram.parse(text), coeff, tokens)


def _strand(word, pos, dots):
    """
    word with an up dot of multiplicity dots at pos, as parseable text
    """
    return "{} | {}".format(word, "dot@{}^{}".format(pos, dots) if dots else "")


def _relation(name, lhs, rhs):
    lhs, rhs = tuple(lhs), tuple(rhs)
    term = (lhs or rhs)[0].term
    return Relation(name, term.source, term.target, lhs, rhs)


# Relation catalogue

def defining_relations():
    """
    The degenerate affine Hecke relations and the right adjunction
    """
    return [
        _relation("crossing squared on up up",
                  [_dec("up up | s@0 ; s@0")], [_dec("up up | ")]),
        _relation("dot slides through a crossing",
                  [_dec("up up | s@0 ; dot@0"),
                   _dec("up up | dot@1 ; s@0", -1)],
                  [_dec("up up | ")]),
        _relation("braid on three up strands",
                  [_dec("up up up | s@0 ; s@1 ; s@0")],
                  [_dec("up up up | s@1 ; s@0 ; s@1")]),
        _relation("right zigzag on up",
                  [_dec("up | cup_r@1 ; cap_r@0")], [_dec("up | ")]),
        _relation("right zigzag on down",
                  [_dec("down | cup_r@0 ; cap_r@1")], [_dec("down | ")]),
    ]


def _smoothings(word, cap, cup, dot_pos, orientation, count, k):
    """
    Cap-cup smoothings of an antiparallel double crossing with their bubbles
    """
    terms = []
    for total in range(count):
        value = heiscat.symfunc.bubble(orientation, -total-2, k)
        if value.is_zero():
            continue
        for a in range(total+1):
            b = total - a
            slices = (["dot@{}^{}".format(dot_pos, a)] if a else []) + [cap]
            level = len(slices)
            slices += [cup] + (["dot@{}^{}".format(dot_pos, b)] if b else [])
            terms.append(_dec("{} | {}".format(word, " ; ".join(slices)),
                              tokens=[(level, 0, value)]))
    return terms


def _alternating_braid(k):
    lhs = [_dec("up down up | t@0 ; s@1 ; t'@0")]
    rhs = [_dec("up down up | t'@1 ; s@0 ; t@1")]
    if k == 2:
        rhs.append(_dec("up down up | cap_r@0 ; cup_l@0"))
    elif k == -2:
        rhs.append(_dec("up down up | cap_l@1 ; cup_r@1", -1))
    elif abs(k) > 2:
        return None
    return _relation("alternating braid on up down up", lhs, rhs)


def derived_relations(k):
    """
    Consequences of the defining relations at central charge k

    The right hand sides are stated with Sym tokens, as the normal form
    algorithm produces them.
    """
    relations = defining_relations()
    relations += [
        _relation("left zigzag on up",
                  [_dec("up | cup_l@0 ; cap_l@1")], [_dec("up | ")]),
        _relation("left zigzag on down",
                  [_dec("down | cup_l@1 ; cap_l@0")], [_dec("down | ")]),
        _relation("down dot is the right mate of the up dot",
                  [_dec("down | x'@0")],
                  [_dec("down | cup_r@0 ; dot@1 ; cap_r@1")]),
        _relation("down dot is the left mate of the up dot",
                  [_dec("down | x'@0")],
                  [_dec("down | cup_l@1 ; dot@1 ; cap_l@0")]),
        _relation("down crossing is the left mate of the up crossing",
                  [_dec("down down | s'@0")],
                  [_dec("down down | cup_l@2 ; cup_l@3 ; s@2 ; cap_l@1 ; "
                        "cap_l@0")]),
    ]
    relations.append(_relation(
        "rightward then leftward crossing",
        [_dec("up down | t@0 ; t'@0")],
        [_dec("up down | ")] + _smoothings("up down", "cap_r@0", "cup_l@0",
                                           0, Orientation.CCW, max(k, 0), k)))
    relations.append(_relation(
        "leftward then rightward crossing",
        [_dec("down up | t'@0 ; t@0")],
        [_dec("down up | ")] + _smoothings("down up", "cap_l@0", "cup_r@0",
                                           1, Orientation.CW, max(-k, 0), k)))
    for r in range(3):
        right, left = [], []
        for s in range(r+abs(k)+1):
            value = -heiscat.symfunc.bubble(Orientation.CW, r-s-1, k)
            if not value.is_zero():
                right.append(_dec(_strand("up", 0, s), tokens=[(0, 1, value)]))
            value = heiscat.symfunc.bubble(Orientation.CCW, r-s-1, k)
            if not value.is_zero():
                left.append(_dec(_strand("up", 0, s), tokens=[(0, 0, value)]))
        relations.append(Relation(
            "right curl with {} dots".format(r), (UP,), (UP,),
            (heiscat.diagram.decorate(heiscat.diagram.right_curl(r)),),
            tuple(right)))
        relations.append(Relation(
            "left curl with {} dots".format(r), (UP,), (UP,),
            (heiscat.diagram.decorate(heiscat.diagram.left_curl(r)),),
            tuple(left)))
    empty = heiscat.diagram.identity(())
    for dots in range(4):
        for orientation, builder in ((Orientation.CW,
                                      heiscat.diagram.cw_bubble),
                                     (Orientation.CCW,
                                      heiscat.diagram.ccw_bubble)):
            value = heiscat.symfunc.bubble(orientation, dots, k)
            relations.append(Relation(
                "{} bubble with {} dots".format(orientation.value, dots),
                (), (), (heiscat.diagram.decorate(builder(dots)),),
                (heiscat.diagram.decorate(empty, tokens=[(0, 0, value)]),)))
    for a, b in itertools.product(range(2), repeat=2):
        product = heiscat.symfunc.bubble(Orientation.CCW, a, k) * \
            heiscat.symfunc.bubble(Orientation.CW, b, k)
        term = heiscat.diagram.tensor(heiscat.diagram.ccw_bubble(a),
                                      heiscat.diagram.cw_bubble(b))
        relations.append(Relation(
            "bubbles with {} and {} dots side by side".format(a, b), (), (),
            (heiscat.diagram.decorate(term),),
            (heiscat.diagram.decorate(empty, tokens=[(0, 0, product)]),)))
    for n in range(1, 4):
        rhs = [_dec("up | ", tokens=[(0, 1, SymPoly.e(n))])]
        for s in range(n-1):
            rhs.append(_dec(_strand("up", 0, s), -(s+1),
                            tokens=[(0, 1, SymPoly.e(n-2-s))]))
        relations.append(_relation(
            "e_{} slides across an up strand".format(n),
            [_dec("up | ", tokens=[(0, 0, SymPoly.e(n))])], rhs))
    braid = _alternating_braid(k)
    if braid is not None:
        relations.append(braid)
    return relations


def khovanov_relations():
    """
    The extra relations of the presentation at k = -1 with f = u
    """
    return [
        _relation("rightward then leftward crossing is the identity",
                  [_dec("up down | t@0 ; t'@0")], [_dec("up down | ")]),
        _relation("leftward then rightward crossing",
                  [_dec("down up | t'@0 ; t@0")],
                  [_dec("down up | "), _dec("down up | cap_l@0 ; cup_r@0", -1)]),
        Relation("counterclockwise bubble with 0 dots is 1", (), (),
                 (heiscat.diagram.decorate(heiscat.diagram.ccw_bubble(0)),),
                 (heiscat.diagram.decorate(heiscat.diagram.identity(())),)),
        Relation("left curl vanishes", (UP,), (UP,),
                 (heiscat.diagram.decorate(heiscat.diagram.left_curl(0)),),
                 ()),
    ]


# Symbolic and matrix comparisons

def _normal_sum(source, target, items, params):
    total = heiscat.normalform.basis.NormalMorphism.zero(source, target)
    for item in items:
        total = total + heiscat.normalform.engine.normalize(item, params)
    return total


def check_symbolic(report, relation, params):
    """
    Normalize both sides of a relation and compare
    """
    name = "{} (k={})".format(relation.name, params.k)
    try:
        lhs = _normal_sum(relation.source, relation.target, relation.lhs,
                          params)
        rhs = _normal_sum(relation.source, relation.target, relation.rhs,
                          params)
    except heiscat.errors.HeisError as err:
        return report.add(name, False, {"error": str(err)})
    return report.add(name, lhs == rhs,
                      {"lhs": lhs.render(), "rhs": rhs.render()})


def contexts(width, nmax, downs=True):
    """
    Words placed to the right of a relation of the given width
    """
    letters = (UP, DOWN) if downs else (UP,)
    result = []
    for size in range(max(nmax, width) - width + 1):
        result += list(itertools.product(letters, repeat=size))
    return result


def _matrix_sum(items, source, target, context, functor):
    total = functor.zero_map(source + context, target + context)
    for item in items:
        term = heiscat.diagram.tensor(item.term,
                                      heiscat.diagram.identity(context))
        decorated = heiscat.diagram.Decorated(term, item.tokens, item.coeff)
        total = total + functor.eval_decorated(decorated).matrix
    return total


def check_matrix(report, relation, functor, context=()):
    """
    Evaluate both sides of a relation, tensored on the right with the
    identity of context, and compare the matrices
    """
    name = "{} [f={}, context '{}']".format(
        relation.name, functor.data, heiscat.diagram.render_word(context))
    try:
        lhs = _matrix_sum(relation.lhs, relation.source, relation.target,
                          context, functor)
        rhs = _matrix_sum(relation.rhs, relation.source, relation.target,
                          context, functor)
    except heiscat.errors.HeisError as err:
        return report.add(name, False, {"error": str(err)})
    return report.add(name, heiscat.functor.matrix_equal(lhs, rhs),
                      {"lhs": heiscat.functor.matrix_to_text(lhs),
                       "rhs": heiscat.functor.matrix_to_text(rhs)})


def _params(k, config):
    return heiscat.normalform.engine.CategoryParams.from_config(k, config)


def _data_json(data):
    return str(data)


# Suites

def check_defining(data, nmax, functor=None):
    """
    Hecke relations, right adjunction and invertibility of the Mackey
    matrices under the functor attached to data
    """
    if nmax < 1:
        raise ValueError("Invalid nmax: {}".format(nmax))
    functor = functor or heiscat.functor.get_functor(data)
    report = CheckReport("defining", {"f": _data_json(data), "nmax": nmax})
    for relation in defining_relations():
        for context in contexts(len(relation.source), nmax):
            check_matrix(report, relation, functor, context)
    for n in range(nmax+1):
        name = "Mackey matrix invertible at n={} [f={}]".format(n, data)
        try:
            mat = functor.mackey_matrix((UP,)*n)
            heiscat.functor.inverse(mat)
            report.add(name, True)
        except heiscat.errors.HeisError as err:
            report.add(name, False, {"error": str(err)})
    return report


def check_derived(data, nmax, charges=(-2, -1, 0, 1, 2), config=None):
    """
    Derived relations: symbolically for every charge, as matrices at the
    charge of data
    """
    report = CheckReport("derived", {"f": _data_json(data), "nmax": nmax,
                                     "charges": list(charges)})
    for k in charges:
        params = _params(k, config)
        for relation in derived_relations(k):
            check_symbolic(report, relation, params)
    functor = heiscat.functor.get_functor(data)
    for relation in derived_relations(data.k):
        for context in contexts(len(relation.source), nmax, downs=False):
            check_matrix(report, relation, functor, context)
    return report


def check_khovanov(nmax=2, config=None):
    """
    The presentation at k = -1 checked symbolically and with f = u
    """
    data = heiscat.hecke.CyclotomicData.parse("u")
    report = CheckReport("khovanov", {"f": "u", "nmax": nmax})
    params = _params(-1, config)
    functor = heiscat.functor.get_functor(data)
    for relation in khovanov_relations():
        check_symbolic(report, relation, params)
        for context in contexts(len(relation.source), nmax, downs=False):
            check_matrix(report, relation, functor, context)
    return report


def _vectorize(term, pool, extra):
    parts = []
    for data in pool:
        for m in range(extra+1):
            context = (UP,)*m
            image = heiscat.functor.eval_term(
                heiscat.diagram.tensor(term,
                                       heiscat.diagram.identity(context)),
                data).matrix
            parts.extend(image.flatten().tolist())
    return parts


def check_independence(source, target, max_dots, pool, extra=2):
    """
    Rank of the stacked functor images of the truncated basis

    Each basis diagram is evaluated for every f in pool and for every
    context of at most `extra` up strands tensored on its right. All these
    images are flattened into one row, so contexts add columns and can
    raise the rank.
    """
    if len(pool) < 2:
        raise ValueError("Invalid pool, at least two polynomials needed: "
                         "{}".format(len(pool)))
    source = heiscat.diagram.word_from_letters(source)
    target = heiscat.diagram.word_from_letters(target)
    report = CheckReport("independence", {
        "source": heiscat.diagram.render_word(source),
        "target": heiscat.diagram.render_word(target),
        "max_dots": max_dots, "pool": [_data_json(d) for d in pool]})
    basis = heiscat.normalform.basis.enumerate_basis(source, target, max_dots)
    rows = [_vectorize(heiscat.normalform.basis.materialize(b, source, target),
                       pool, extra) for b in basis]
    if rows and rows[0]:
        rank = heiscat.functor.rank(np.array(rows, dtype=object))
    else:
        rank = 0
    msg = "Independence of '{}' -> '{}':".format(
        heiscat.diagram.render_word(source), heiscat.diagram.render_word(target))
    msg += "\n- Basis size: {}".format(len(basis))
    msg += "\n- Rank: {}".format(rank)
    logger.debug(msg)
    report.add("rank of {} basis diagrams".format(len(basis)),
               rank == len(basis),
               {"rank": rank, "basis": len(basis),
                "deficit": len(basis) - rank})
    return report


# Random terms

def random_term(rng, max_crossings=4, max_dots=3, max_letters=4,
                max_slices=8):
    """
    A random well-typed term without decorated cups and caps
    """
    word = tuple(UP if rng.integers(2) else DOWN
                 for _ in range(rng.integers(0, max_letters+1)))
    source = word
    slices = []
    crossings = dots = 0
    for _ in range(rng.integers(0, max_slices+1)):
        n = len(word)
        options = []
        if dots < max_dots:
            options += [("dot", p) for p in range(n)]
        if crossings < max_crossings:
            options += [("cross", p) for p in range(n-1)]
        if n+2 <= max_letters:
            options += [(name, p) for p in range(n+1)
                        for name in ("cup_r", "cup_l")]
        options += [("cap", p) for p in range(n-1) if word[p] is not word[p+1]]
        if not options:
            break
        name, p = options[rng.integers(len(options))]
        if name == "dot":
            piece = Dot(p, word[p], 1)
            dots += 1
        elif name == "cross":
            piece = Cross(p, heiscat.diagram.cross_kind(word[p], word[p+1]))
            crossings += 1
        elif name == "cap":
            piece = Cap(p, heiscat.diagram.cap_kind(word[p], word[p+1]))
        else:
            piece = Cup(p, Kind.RIGHTWARD if name == "cup_r" else Kind.LEFTWARD)
        word = heiscat.diagram.apply_slice(piece, word)
        slices.append(piece)
    return heiscat.diagram.DiagramTerm(source, tuple(slices))


def shrink(term, fails):
    """
    Drop slices while the term stays well typed and still fails
    """
    changed = True
    while changed:
        changed = False
        for index in range(len(term.slices)):
            slices = term.slices[:index] + term.slices[index+1:]
            try:
                candidate = heiscat.diagram.DiagramTerm(term.source, slices)
            except heiscat.errors.TermTypeError:
                continue
            if fails(candidate):
                term = candidate
                changed = True
                break
    return term


def _oracle_values(term, data, config):
    params = _params(data.k, config)
    normal = heiscat.normalform.engine.normalize(term, params)
    return (heiscat.functor.eval_morphism(normal, data).matrix,
            heiscat.functor.eval_term(term, data).matrix)


def _oracle_fails(term, data, config):
    try:
        normal, direct = _oracle_values(term, data, config)
    except heiscat.errors.HeisError:
        return False
    return not heiscat.functor.matrix_equal(normal, direct)


def check_oracle(report, name, term, data, config=None):
    """
    Compare the functor image of a term with that of its normal form
    """
    try:
        normal, direct = _oracle_values(term, data, config)
    except heiscat.errors.HeisError as err:
        return report.add(name, False, {"term": term.render(),
                                        "error": str(err)})
    if heiscat.functor.matrix_equal(normal, direct):
        return report.add(name, True)
    small = shrink(term, lambda t: _oracle_fails(t, data, config))
    normal, direct = _oracle_values(small, data, config)
    return report.add(name, False, {
        "term": small.render(),
        "normal form": heiscat.functor.matrix_to_text(normal),
        "direct": heiscat.functor.matrix_to_text(direct)})


def fuzz_normalizer(seed, count, pool, max_crossings=4, max_dots=3,
                    max_letters=4, config=None):
    """
    eval(normalize(t)) = eval(t) on seeded random terms
    """
    rng = np.random.default_rng(seed)
    report = CheckReport("fuzz", {
        "count": count, "pool": [_data_json(d) for d in pool],
        "max_crossings": max_crossings, "max_dots": max_dots,
        "max_letters": max_letters}, seed)
    for index in range(count):
        term = random_term(rng, max_crossings, max_dots, max_letters)
        for data in pool:
            check_oracle(report, "term {} '{}' [f={}]".format(
                index, term.render(), data), term, data, config)
    return report


# Supplementary suites

def check_hecke(pool, nmax, seed=0):
    """
    Dimensions of H_n^f and of the Mackey matrices, and associativity
    """
    rng = np.random.default_rng(seed)
    report = CheckReport("hecke", {"pool": [_data_json(d) for d in pool],
                                   "nmax": nmax}, seed)
    for data in pool:
        ell = data.ell
        for n in range(nmax+1):
            expected = ell**n * math.factorial(n)
            found = (len(heiscat.hecke.pbw_basis(n, data)),
                     heiscat.hecke.dim(n, data),
                     heiscat.functor.build_space((UP,)*n, data).dim)
            report.add("dimension of H_{}^f [f={}]".format(n, data),
                       found == (expected,)*3,
                       {"expected": expected, "found": list(found)})
        for n in range(nmax):
            shape = heiscat.functor.mackey_map(n, data).shape
            crossing = heiscat.functor.build_space((UP, DOWN) + (UP,)*n,
                                                   data).dim
            cups = heiscat.functor.build_space((UP,)*n, data).dim
            size = ell**(n+1) * math.factorial(n+1)
            report.add("Mackey dimensions at n={} [f={}]".format(n, data),
                       shape == (size, size) and crossing + ell*cups == size and
                       crossing == ell**(n+1) * math.factorial(n) * n,
                       {"shape": list(shape), "expected": size})
        for n in range(2, nmax+1):
            labels = heiscat.hecke.pbw_basis(n, data)
            for _ in range(3):
                a, b, c = (heiscat.hecke.HeckeElem(
                    n, {labels[rng.integers(len(labels))]: 1})
                    for _ in range(3))
                left = heiscat.hecke.cyc_mul(
                    heiscat.hecke.cyc_mul(a, b, data), c, data)
                right = heiscat.hecke.cyc_mul(
                    a, heiscat.hecke.cyc_mul(b, c, data), data)
                report.add("associativity in H_{}^f [f={}]".format(n, data),
                           left == right,
                           {"a": str(a), "b": str(b), "c": str(c),
                            "(ab)c": str(left), "a(bc)": str(right)})
    return report


def _random_monic(rng, max_degree=3, bound=3, min_degree=0):
    degree = int(rng.integers(min_degree, max_degree+1))
    coeffs = tuple(int(c) for c in rng.integers(-bound, bound+1, size=degree))
    return heiscat.coeffs.Poly(coeffs + (1,))


def cyclotomic_residues(data, order):
    """
    sum_(s=0..l) z_s delta_(r-s) for r = 1..order, with z_0 = 1 and f' = 1

    All of them vanish, since delta inverts u^-l f(u).
    """
    delta = heiscat.coeffs.delta_series(data.f, heiscat.coeffs.Poly((1,)),
                                        order)
    z = (Fraction(1),) + tuple(heiscat.coeffs.to_fraction(c) for c in data.z)
    return [sum(z[s]*delta[r-s] for s in range(min(r, data.ell)+1))
            for r in range(1, order+1)]


def check_series(seed=0, pairs=5, order=8, sym_order=6, charges=(-2, -1, 0,
                                                                 1, 2)):
    """
    delta * delta' = -1, z * delta vanishes in positive degree, the two
    bubble series are inverse, e(u)h(-u) = 1
    """
    rng = np.random.default_rng(seed)
    report = CheckReport("series", {"pairs": pairs, "order": order,
                                    "sym_order": sym_order}, seed)
    minus_one = heiscat.coeffs.DeltaSeries((-1,) + (0,)*order)
    for _ in range(pairs):
        f = _random_monic(rng)
        fprime = _random_monic(rng)
        product = heiscat.coeffs.series_mul(
            heiscat.coeffs.delta_series(f, fprime, order),
            heiscat.coeffs.delta_prime_series(f, fprime, order))
        report.add("delta * delta' = -1 for f={}, f'={}".format(f, fprime),
                   product == minus_one, {"product": str(product)})
    for _ in range(pairs):
        data = heiscat.hecke.CyclotomicData(_random_monic(rng, min_degree=1))
        residues = cyclotomic_residues(data, order)
        report.add("z * delta = 0 in degrees 1..{} for f={}".format(
            order, data), not any(residues),
            {"residues": [heiscat.coeffs.format_fraction(r)
                          for r in residues]})
    for k in charges:
        for t in range(sym_order+1):
            total = SymPoly()
            for a in range(t+1):
                total = total + \
                    heiscat.symfunc.bubble(Orientation.CCW, a-k-1, k) * \
                    heiscat.symfunc.bubble(Orientation.CW, t-a+k-1, k)
            expected = SymPoly.constant(-1) if t == 0 else SymPoly()
            report.add("bubble series product in degree {} (k={})".format(
                t, k), total == expected, {"sum": str(total)})
    report.add("e(u) h(-u) = 1 up to degree {}".format(sym_order),
               heiscat.symfunc.series_identity_check(sym_order))
    return report


def check_phi_psi(pool, nmax):
    """
    psi o phi is the identity on the PBW basis of H_n^f
    """
    report = CheckReport("phipsi", {"pool": [_data_json(d) for d in pool],
                                    "nmax": nmax})
    for data in pool:
        for n in range(1, nmax+1):
            for label in heiscat.hecke.pbw_basis(n, data):
                elem = heiscat.hecke.HeckeElem(n, {label: 1})
                image = heiscat.hecke.HeckeElem(n, {})
                for coeff, term in heiscat.functor.phi(elem):
                    image = image + heiscat.functor.psi(term, n, data) * \
                        Fraction(coeff)
                report.add("psi(phi({})) in H_{}^f [f={}]".format(
                    elem, n, data), image == elem,
                    {"element": str(elem), "image": str(image)})
    return report


def omega_terms():
    """
    Terms on which the reflection is checked by default
    """
    return [heiscat.diagram.parse(text) for text in (
        "up | dot@0", "up up | s@0 ; dot@1", "up down | t@0 ; t'@0",
        "down up | t'@0 ; t@0", ". | cup_r@0 ; cap_l@0",
        ". | cup_l@0 ; dot@0^2 ; cap_r@0")] + \
        [heiscat.diagram.right_curl(1), heiscat.diagram.left_curl(1)]


def check_omega(terms=None, charges=(-1, 0, 1), config=None, seed=None,
                count=0):
    """
    Normalizing the reflected term at -k agrees with reflecting the normal
    form at k

    With count > 0, that many small random terms drawn from seed are
    checked after the given ones.
    """
    terms = omega_terms() if terms is None else list(terms)
    if count:
        rng = np.random.default_rng(seed)
        terms += [random_term(rng, max_crossings=2, max_dots=2,
                              max_letters=3, max_slices=6)
                  for _ in range(count)]
    report = CheckReport("omega", {"charges": list(charges), "count": count},
                         seed)
    for k in charges:
        params = _params(k, config)
        mirrored = _params(-k, config)
        for term in terms:
            name = "reflection of '{}' (k={})".format(term.render(), k)
            try:
                normal = heiscat.normalform.engine.normalize(term, params)
                image, sign = heiscat.diagram.omega(term)
                direct = heiscat.normalform.engine.normalize(image, mirrored)
                direct = direct * sign
                moved = heiscat.normalform.basis.mor_omega(normal, params)
            except heiscat.errors.HeisError as err:
                report.add(name, False, {"error": str(err)})
                continue
            report.add(name, direct == moved,
                       {"reflected then normalized": direct.render(),
                        "normalized then reflected": moved.render()})
    return report


# Dispatch

def _pool(config, f=None):
    if f is not None:
        return [f if isinstance(f, heiscat.hecke.CyclotomicData)
                else heiscat.hecke.CyclotomicData.parse(f)]
    return [heiscat.hecke.CyclotomicData.parse(text)
            for text in config.get("pool", ["u", "u^2"])]


def run_suite(name, config=None, f=None, nmax=None, seed=None):
    """
    Run a suite by name; explicit arguments override the configuration
    """
    config = dict(config or {})
    if name not in SUITES:
        raise ValueError("Invalid suite: {}".format(name))
    nmax = nmax if nmax is not None else config.get("nmax", 2)
    seed = seed if seed is not None else config.get("seed", 1)
    charges = tuple(config.get("charges", (-2, -1, 0, 1, 2)))
    pool = _pool(config, f)
    if name == "defining":
        report = CheckReport("defining", {"nmax": nmax})
        for data in pool:
            report.merge(check_defining(data, nmax))
    elif name == "derived":
        report = CheckReport("derived", {"nmax": nmax,
                                         "charges": list(charges)})
        for data in pool:
            report.merge(check_derived(data, nmax, charges, config))
    elif name == "khovanov":
        report = check_khovanov(nmax, config)
    elif name == "independence":
        pool = _pool(config) if f is None else \
            _pool(config) + [heiscat.hecke.CyclotomicData.parse(f)]
        report = CheckReport("independence",
                             {"pool": [_data_json(d) for d in pool]})
        for source, target in config.get("independence_pairs", [["up", "up"]]):
            report.merge(check_independence(
                heiscat.diagram.parse_word(source),
                heiscat.diagram.parse_word(target),
                config.get("max_dots_basis", 2), pool))
    elif name == "fuzz":
        report = fuzz_normalizer(seed, config.get("count", 20), pool,
                                 config.get("max_crossings", 4),
                                 config.get("max_term_dots", 3),
                                 config.get("max_letters", 4), config)
    elif name == "hecke":
        report = check_hecke(pool, nmax, seed)
    elif name == "series":
        report = check_series(seed, config.get("pairs", 5),
                              config.get("order", 8),
                              config.get("sym_order", 6), charges)
    elif name == "phipsi":
        report = check_phi_psi(pool, nmax)
    else:
        report = check_omega(None, charges, config, seed,
                             config.get("omega_count", 0))
    report.seed = seed if report.seed is None else report.seed
    msg = "Suite '{}' finished:".format(name)
    msg += "\n- Cases: {}".format(len(report.cases))
    msg += "\n- Failures: {}".format(len(report.failures()))
    logger.info(msg)
    return report
