#!/usr/bin/env python3
"""
Module containing the cyclotomic evaluation functor

Objects go to chains of induction (up) and restriction (down) functors
applied to the trivial H_0^f-module, so every morphism becomes an exact
rational matrix. Results are numpy object arrays of Fractions; slice maps
are kept as sparse DomainMatrix over QQ, which also does the inverses
and ranks.
"""
# Standard libraries
from dataclasses import dataclass
from fractions import Fraction
import logging
# 3rd party libraries
import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
# Local libraries
import heiscat.coeffs
import heiscat.diagram
import heiscat.errors
import heiscat.hecke
import heiscat.normalform.basis
import heiscat.symfunc
from heiscat.diagram import UP, DOWN, Kind


logger = logging.getLogger('heiscat')


def zeros(rows, cols):
    return np.full((rows, cols), Fraction(0), dtype=object)


def eye(size):
    mat = zeros(size, size)
    for i in range(size):
        mat[i, i] = Fraction(1)
    return mat


def from_rows(rows):
    rows = [[heiscat.coeffs.to_fraction(v) for v in row] for row in rows]
    if not rows:
        return zeros(0, 0)
    return np.array(rows, dtype=object)


def sparse_inverse(mat):
    """
    Nonzero entries {(i, j): value} of the inverse of a square rational
    matrix, by sparse row reduction of [mat | 1]
    """
    size = mat.shape[0]
    if mat.shape != (size, size):
        raise heiscat.errors.SingularMatrixError(
            "Matrix of size {} is not square".format(mat.shape))
    if size == 0:
        return {}
    reduced, pivots = to_sparse(np.hstack([mat, eye(size)])).rref()
    if tuple(pivots[:size]) != tuple(range(size)):
        raise heiscat.errors.SingularMatrixError(
            "Matrix of size {} is singular".format(mat.shape))
    return {(i, j-size): value
            for (i, j), value in sparse_entries(reduced).items() if j >= size}


def inverse(mat):
    """
    Exact inverse of a square rational matrix
    """
    entries = sparse_inverse(mat)
    out = zeros(*mat.shape)
    for (i, j), value in entries.items():
        out[i, j] = value
    return out


def rank(mat):
    if 0 in mat.shape:
        return 0
    return int(to_sparse(mat).rank())


def to_sparse(mat):
    """
    Sparse DomainMatrix over QQ holding the nonzero entries of mat
    """
    rows = {}
    for i, j in zip(*np.nonzero(mat)):
        value = heiscat.coeffs.to_fraction(mat[i, j])
        rows.setdefault(int(i), {})[int(j)] = QQ(value.numerator,
                                                 value.denominator)
    return DomainMatrix(rows, mat.shape, QQ)


def sparse_entries(dm):
    entries = {}
    for i, row in dm.to_sparse().rep.items():
        for j, value in row.items():
            entries[i, j] = Fraction(int(value.numerator),
                                     int(value.denominator))
    return entries


def from_sparse(dm):
    out = zeros(*dm.shape)
    for (i, j), value in sparse_entries(dm).items():
        out[i, j] = value
    return out


def sparse_eye(size):
    return DomainMatrix({i: {i: QQ.one} for i in range(size)},
                        (size, size), QQ)


def sparse_power(dm, power):
    result = dm
    for _ in range(power-1):
        result = result.matmul(dm)
    return result


def repeat_block(dm, copies):
    """
    Block diagonal matrix with `copies` copies of dm (identity (x) dm)
    """
    if copies == 1:
        return dm
    rows, cols = dm.shape
    blocks = {}
    for b in range(copies):
        for i, row in dm.to_sparse().rep.items():
            blocks[b*rows + i] = {b*cols + j: v for j, v in row.items()}
    return DomainMatrix(blocks, (rows*copies, cols*copies), QQ)


def matrix_to_json(mat):
    return [[heiscat.coeffs.format_fraction(v) for v in row] for row in mat]


def matrix_equal(a, b):
    return a.shape == b.shape and bool(np.all(a == b))


def matrix_to_text(mat):
    if 0 in mat.shape:
        return "[] ({}x{})".format(*mat.shape)
    rows = ["[" + ", ".join(str(v) for v in row) + "]" for row in mat]
    return "[" + ",\n ".join(rows) + "]"


class ModuleSpace():
    """
    The module Psi_f(X)(k) for an object word X

    Labels are paths: one coset label (a, j) per up letter, outermost
    (leftmost letter) first. Generator matrices are computed lazily.
    """
    def __init__(self, functor, word, level, dim, labels, parent=None,
                 inner=None):
        self.functor = functor
        self.word = word
        self.level = level
        self.dim = dim
        self.labels = labels
        # For a restriction, parent is the space restricted from
        self.parent = parent
        # For an induction, inner is the space induced from
        self.inner = inner
        self._gens = {}
        self._rho = {}

    @property
    def is_zero(self):
        return self.level is None

    def gen(self, name, index):
        """
        Sparse matrix of x_index ('x') or s_index ('s') acting on the space
        """
        key = (name, index)
        if key not in self._gens:
            if self.parent is not None:
                self._gens[key] = self.parent.gen(name, index)
            else:
                self._gens[key] = to_sparse(
                    self.functor.induced_generator(self, name, index))
        return self._gens[key]

    def rho(self, elem):
        """
        Matrix of a reduced element of H_level^f acting on the space
        """
        total = zeros(self.dim, self.dim)
        for (perm, exps), coeff in elem.terms.items():
            coeff = heiscat.coeffs.to_fraction(coeff)
            for (i, j), value in self._rho_monomial(perm, exps).items():
                total[i, j] += value * coeff
        return total

    def _rho_monomial(self, perm, exps):
        # Nonzero entries of x^exps T_perm
        key = (perm, exps)
        if key not in self._rho:
            mat = sparse_eye(self.dim)
            for i, power in enumerate(exps):
                for _ in range(power):
                    mat = mat.matmul(self.gen("x", i+1))
            for j in heiscat.hecke.reduced_word(perm):
                mat = mat.matmul(self.gen("s", j))
            self._rho[key] = sparse_entries(mat)
        return self._rho[key]


@dataclass(frozen=True)
class LinMap:
    """
    Exact matrix between the spaces of two object words
    """
    source: tuple
    target: tuple
    matrix: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and matrix_equal(self.matrix, other.matrix))

    def __add__(self, other):
        return LinMap(self.source, self.target, self.matrix + other.matrix)

    def scaled(self, scalar):
        return LinMap(self.source, self.target,
                      self.matrix * heiscat.coeffs.to_fraction(scalar))

    def to_json(self):
        return {"source": heiscat.diagram.render_word(self.source),
                "target": heiscat.diagram.render_word(self.target),
                "matrix": matrix_to_json(self.matrix)}


class CyclotomicFunctor():
    """
    Evaluation of diagrams through Psi_f for one cyclotomic datum
    """
    def __init__(self, data):
        self.data = data
        self.reducer = heiscat.hecke.get_reducer(data)
        self._spaces = {}
        self._split_inverse = {}
        self._split_cache = {}
        self._mackey = {}
        self._steps = {}

    # Hecke side

    def _split_matrix(self, m):
        """
        Columns of the inverse of the matrix sending (coset b, PBW g) to
        b*g in H_(m+1)^f, each a dict {row: value} of its nonzero entries
        """
        if m not in self._split_inverse:
            data = self.data
            columns = []
            inner_basis = heiscat.hecke.pbw_basis(m, data)
            for label in heiscat.hecke.coset_labels(m, data):
                b_elem = heiscat.hecke.coset_element(m, label, data)
                for perm, exps in inner_basis:
                    g = heiscat.hecke.HeckeElem(m, {(perm, exps): 1}).embed()
                    product = self.reducer(heiscat.hecke.haff_mul(b_elem, g))
                    columns.append(heiscat.hecke.coordinates(product, data))
            mat = from_rows(list(zip(*columns)))
            size = heiscat.hecke.dim(m+1, data)
            if mat.shape != (size, size):
                raise heiscat.errors.SingularMatrixError(
                    "Induction basis at level {} has the wrong size".format(m))
            logger.debug("Inverting induction matrix of size {} (f={})".format(
                size, data))
            inverse_columns = [{} for _ in range(size)]
            for (i, j), value in sparse_inverse(mat).items():
                inverse_columns[j][i] = value
            self._split_inverse[m] = inverse_columns
        return self._split_inverse[m]

    def split(self, elem, m):
        """
        Write elem in H_(m+1)^f as sum_b b * h_b with h_b in H_m^f

        Returns a dict {coset index: HeckeElem on m strands}.
        """
        key = (m, elem)
        if key in self._split_cache:
            return self._split_cache[key]
        data = self.data
        columns = self._split_matrix(m)
        solution = {}
        for j, value in enumerate(heiscat.hecke.coordinates(elem, data)):
            if value == 0:
                continue
            for i, entry in columns[j].items():
                solution[i] = solution.get(i, 0) + entry*value
        inner_basis = heiscat.hecke.pbw_basis(m, data)
        width = len(inner_basis)
        result = {}
        for index, coeff in sorted(solution.items()):
            if coeff == 0:
                continue
            b_index, g_index = divmod(index, width)
            term = heiscat.hecke.HeckeElem(m, {inner_basis[g_index]: coeff})
            result[b_index] = result[b_index] + term if b_index in result \
                else term
        self._split_cache[key] = result
        return result

    # Spaces

    def build_space(self, word):
        word = heiscat.diagram.word_from_letters(word)
        if word in self._spaces:
            return self._spaces[word]
        if not word:
            space = ModuleSpace(self, word, 0, 1, [()])
        else:
            inner = self.build_space(word[1:])
            if inner.is_zero:
                space = ModuleSpace(self, word, None, 0, [])
            elif word[0] is UP:
                m = inner.level
                cosets = heiscat.hecke.coset_labels(m, self.data)
                labels = [(c,) + lab for c in cosets for lab in inner.labels]
                space = ModuleSpace(self, word, m+1, len(labels), labels,
                                    inner=inner)
            elif inner.level == 0:
                space = ModuleSpace(self, word, None, 0, [])
            else:
                space = ModuleSpace(self, word, inner.level-1, inner.dim,
                                    inner.labels, parent=inner)
        self._spaces[word] = space
        return space

    def induced_generator(self, space, name, index):
        """
        Action of x_index or s_index of H_(m+1)^f on Ind(inner)
        """
        inner = space.inner
        m = inner.level
        n = m+1
        if name == "x":
            gen = heiscat.hecke.HeckeElem.x(n, index)
        else:
            gen = heiscat.hecke.HeckeElem.s(n, index)
        cosets = heiscat.hecke.coset_labels(m, self.data)
        dim = inner.dim
        mat = zeros(space.dim, space.dim)
        for b, label in enumerate(cosets):
            b_elem = heiscat.hecke.coset_element(m, label, self.data)
            product = self.reducer(heiscat.hecke.haff_mul(gen, b_elem))
            for b2, h in self.split(product, m).items():
                mat[b2*dim:(b2+1)*dim, b*dim:(b+1)*dim] += inner.rho(h)
        return mat

    # Natural transformations on V = space of the suffix

    def nat_dot(self, inner):
        """
        b (x) v -> b x_(m+1) (x) v on Ind V
        """
        m = inner.level
        n = m+1
        cosets = heiscat.hecke.coset_labels(m, self.data)
        dim = inner.dim
        mat = zeros(len(cosets)*dim, len(cosets)*dim)
        for b, label in enumerate(cosets):
            b_elem = heiscat.hecke.coset_element(m, label, self.data)
            product = self.reducer(heiscat.hecke.haff_mul(
                b_elem, heiscat.hecke.HeckeElem.x(n, n)))
            for b2, h in self.split(product, m).items():
                mat[b2*dim:(b2+1)*dim, b*dim:(b+1)*dim] += inner.rho(h)
        return mat

    def nat_cross(self, inner):
        """
        h (x) v -> h s_(m+1) (x) v on Ind Ind V
        """
        m = inner.level
        data = self.data
        inner_cosets = heiscat.hecke.coset_labels(m, data)
        outer_cosets = heiscat.hecke.coset_labels(m+1, data)
        dim = inner.dim
        width = len(inner_cosets)
        size = len(outer_cosets)*width*dim
        mat = zeros(size, size)
        crossing = heiscat.hecke.HeckeElem.s(m+2, m+1)
        for b2, outer_label in enumerate(outer_cosets):
            outer = heiscat.hecke.coset_element(m+1, outer_label, data)
            for b1, inner_label in enumerate(inner_cosets):
                low = heiscat.hecke.coset_element(m, inner_label, data).embed()
                product = self.reducer(heiscat.hecke.haff_mul(
                    heiscat.hecke.haff_mul(outer, low), crossing))
                col = (b2*width + b1)*dim
                for c2, h2 in self.split(product, m+1).items():
                    for c1, h1 in self.split(h2, m).items():
                        row = (c2*width + c1)*dim
                        mat[row:row+dim, col:col+dim] += inner.rho(h1)
        return mat

    def nat_cup(self, inner):
        """
        v -> 1 (x) v from V to Res Ind V
        """
        m = inner.level
        cosets = heiscat.hecke.coset_labels(m, self.data)
        unit = cosets.index((0, m+1))
        dim = inner.dim
        mat = zeros(len(cosets)*dim, dim)
        for v in range(dim):
            mat[unit*dim+v, v] = Fraction(1)
        return mat

    def nat_cap(self, inner):
        """
        b (x) v -> b v from Ind Res V to V
        """
        m = inner.level
        if m == 0:
            return zeros(inner.dim, 0)
        cosets = heiscat.hecke.coset_labels(m-1, self.data)
        blocks = [inner.rho(heiscat.hecke.coset_element(m-1, label, self.data))
                  for label in cosets]
        return np.hstack(blocks)

    def nat_rightward(self, inner):
        """
        b (x) v -> b s_m (x) v from Ind Res V to Res Ind V
        """
        m = inner.level
        data = self.data
        low = heiscat.hecke.coset_labels(m-1, data)
        high = heiscat.hecke.coset_labels(m, data)
        dim = inner.dim
        mat = zeros(len(high)*dim, len(low)*dim)
        crossing = heiscat.hecke.HeckeElem.s(m+1, m)
        for b, label in enumerate(low):
            b_elem = heiscat.hecke.coset_element(m-1, label, data).embed()
            product = self.reducer(heiscat.hecke.haff_mul(b_elem, crossing))
            for c, h in self.split(product, m).items():
                mat[c*dim:(c+1)*dim, b*dim:(b+1)*dim] += inner.rho(h)
        return mat

    # Slices in context

    def _prefix_factor(self, prefix, level):
        factor = 1
        for letter in reversed(prefix):
            if level is None:
                return 0
            if letter is UP:
                factor *= self.data.ell*(level+1)
                level += 1
            elif level == 0:
                return 0
            else:
                level -= 1
        return factor if level is not None else 0

    def zero_map(self, source, target):
        return zeros(self.build_space(target).dim,
                     self.build_space(source).dim)

    def gen_matrix(self, piece, word):
        """
        Matrix of one slice acting on the space of its source word
        """
        word = heiscat.diagram.word_from_letters(word)
        return from_sparse(self._step(piece, word))

    def _step(self, piece, word):
        key = (piece, word)
        if key not in self._steps:
            self._steps[key] = self._slice_map(piece, word)
        return self._steps[key]

    def _slice_map(self, piece, word):
        target = heiscat.diagram.apply_slice(piece, word)
        if isinstance(piece, heiscat.diagram.Cup) and \
                piece.kind not in (Kind.RIGHTWARD, Kind.LEFTWARD):
            raise ValueError("Invalid slice for k={}: decorated cups need "
                             "k > 0".format(self.data.k))
        if isinstance(piece, heiscat.diagram.Cap) and \
                piece.kind not in (Kind.RIGHTWARD, Kind.LEFTWARD) and \
                not 0 <= piece.decoration < self.data.ell:
            raise ValueError("Invalid decorated cap index {} for k={}".format(
                piece.decoration, self.data.k))
        rows = self.build_space(target).dim
        cols = self.build_space(word).dim
        if rows == 0 or cols == 0:
            # Every suffix of a nonzero word is nonzero
            return DomainMatrix({}, (rows, cols), QQ)
        pos = piece.pos
        if isinstance(piece, heiscat.diagram.Dot):
            if piece.orient is DOWN:
                # x_n of V acting on Res V
                outer = self.build_space(word[pos+1:])
                local = sparse_power(outer.gen("x", outer.level), piece.mult)
                return self._wrap(word, pos, local, outer.level-1)
            suffix = self.build_space(word[pos+1:])
            local = sparse_power(to_sparse(self.nat_dot(suffix)), piece.mult)
            return self._wrap(word, pos, local, suffix.level+1)
        if isinstance(piece, heiscat.diagram.Cross):
            suffix = self.build_space(word[pos+2:])
            if piece.kind is Kind.UPUP:
                return self._wrap(word, pos,
                                  to_sparse(self.nat_cross(suffix)),
                                  suffix.level+2)
            if piece.kind is Kind.RIGHTWARD:
                return self._wrap(word, pos,
                                  to_sparse(self.nat_rightward(suffix)),
                                  suffix.level)
            if piece.kind is Kind.DOWNDOWN:
                # s_(n-1) of V acting on Res Res V
                return self._wrap(word, pos,
                                  suffix.gen("s", suffix.level-1),
                                  suffix.level-2)
            return self._wrap_mackey(word, pos, 0)
        if isinstance(piece, heiscat.diagram.Cup):
            if piece.kind is Kind.RIGHTWARD:
                suffix = self.build_space(word[pos:])
                return self._wrap(word, pos, to_sparse(self.nat_cup(suffix)),
                                  suffix.level)
            sub = [heiscat.diagram.Cup(pos, Kind.RIGHTWARD),
                   heiscat.diagram.Dot(pos+1, UP, self.data.ell),
                   heiscat.diagram.Cross(pos, Kind.LEFTWARD)]
            return self._chain(word, sub)
        # Caps
        if piece.kind is Kind.RIGHTWARD:
            suffix = self.build_space(word[pos+2:])
            return self._wrap(word, pos, to_sparse(self.nat_cap(suffix)),
                              suffix.level)
        if piece.kind is Kind.LEFTWARD:
            return self._wrap_mackey(word, pos, self.data.ell)
        return self._wrap_mackey(word, pos, piece.decoration+1)

    def _wrap(self, word, pos, local, level):
        return repeat_block(local, self._prefix_factor(word[:pos], level))

    def _chain(self, word, slices):
        product = sparse_eye(self.build_space(word).dim)
        for piece in slices:
            product = self._step(piece, word).matmul(product)
            word = heiscat.diagram.apply_slice(piece, word)
        return product

    def _eval_slices(self, word, slices):
        return from_sparse(self._chain(word, slices))

    def mackey_blocks(self, suffix):
        """
        Rows of the inverse of [t | c | x c | ... | x^(l-1) c] at suffix S

        Block 0 is the leftward crossing t' : down up S -> up down S and
        block r+1 is the decorated cap of index r : down up S -> S.
        """
        suffix = heiscat.diagram.word_from_letters(suffix)
        if suffix not in self._mackey:
            mat = self.mackey_matrix(suffix)
            inv = inverse(mat)
            sizes = [self.build_space((UP, DOWN) + suffix).dim]
            sizes += [self.build_space(suffix).dim] * self.data.ell
            blocks = []
            start = 0
            for size in sizes:
                blocks.append(inv[start:start+size, :])
                start += size
            logger.debug("Mackey inverse for suffix '{}' (f={})".format(
                heiscat.diagram.render_word(suffix), self.data))
            self._mackey[suffix] = blocks
        return self._mackey[suffix]

    def mackey_matrix(self, suffix):
        suffix = heiscat.diagram.word_from_letters(suffix)
        columns = [self._eval_slices((UP, DOWN) + suffix,
                                     [heiscat.diagram.Cross(0, Kind.RIGHTWARD)])]
        for r in range(self.data.ell):
            sub = [heiscat.diagram.Cup(0, Kind.RIGHTWARD)]
            if r:
                sub.append(heiscat.diagram.Dot(1, UP, r))
            columns.append(self._eval_slices(suffix, sub))
        rows = self.build_space((DOWN, UP) + suffix).dim
        columns = [c if c.shape[0] == rows else zeros(rows, 0)
                   for c in columns]
        return np.hstack(columns)

    def _wrap_mackey(self, word, pos, block):
        suffix = word[pos+2:]
        local = to_sparse(self.mackey_blocks(suffix)[block])
        level = self.build_space((DOWN, UP) + suffix).level
        return self._wrap(word, pos, local, level)

    # Terms and morphisms

    def eval_term(self, term):
        mat = self._eval_slices(term.source, list(term.slices))
        return LinMap(term.source, term.target, mat)

    def eval_decorated(self, decorated):
        """
        Evaluate a term whose regions carry Sym tokens

        Tokens in the rightmost region are scalars; any other token is
        realised by counterclockwise bubbles in the h-basis.
        """
        term = decorated.term
        scalar = Fraction(decorated.coeff)
        inner_tokens = []
        for level, gap, value in decorated.tokens:
            if gap == len(term.words[level]):
                scalar *= self.specialize(value)
            else:
                inner_tokens.append((level, gap, value))
        total = None
        for coeff, expanded in self._expand_tokens(term, inner_tokens):
            part = self.eval_term(expanded).matrix * coeff
            total = part if total is None else total + part
        if total is None:
            total = self.zero_map(term.source, term.target)
        return LinMap(term.source, term.target, total * scalar)

    def _expand_tokens(self, term, tokens):
        expansions = [(Fraction(1), {})]
        for index, (level, gap, value) in enumerate(tokens):
            options = []
            for parts, coeff in heiscat.symfunc.to_h_basis(value).items():
                options.append((coeff * (-1)**sum(parts), parts))
            expansions = [(c1*c2, {**chosen, index: parts})
                          for c1, chosen in expansions
                          for c2, parts in options]
        ell = self.data.ell
        for coeff, chosen in expansions:
            slices = []
            for level in range(len(term.slices)+1):
                for index, (tlevel, gap, _) in enumerate(tokens):
                    if tlevel != level:
                        continue
                    for part in chosen[index]:
                        slices.append(heiscat.diagram.Cup(gap, Kind.RIGHTWARD))
                        slices.append(heiscat.diagram.Dot(gap+1, UP,
                                                          part+ell-1))
                        slices.append(heiscat.diagram.Cap(gap, Kind.LEFTWARD))
                if level < len(term.slices):
                    slices.append(term.slices[level])
            yield coeff, heiscat.diagram.DiagramTerm(term.source, slices)

    def specialize(self, value):
        value = heiscat.symfunc.SymPoly.coerce(value)
        order = max(value.max_part, 1)
        delta = heiscat.coeffs.delta_series(self.data.f,
                                            heiscat.coeffs.Poly((1,)), order)
        return heiscat.symfunc.specialize(value, delta, self.data.k)

    def eval_morphism(self, morphism):
        total = self.zero_map(morphism.source, morphism.target)
        for diagram, coeff in morphism.terms.items():
            term = heiscat.normalform.basis.materialize(
                diagram, morphism.source, morphism.target)
            total = total + self.eval_term(term).matrix * \
                self.specialize(coeff)
        return LinMap(morphism.source, morphism.target, total)

    # The maps between H_n^f and endomorphisms of n up strands

    def psi(self, term, n):
        """
        Psi of an endomorphism of up^n applied to 1, read back in H_n^f
        """
        data = self.data
        space = self.build_space((UP,)*n)
        unit = tuple((0, m+1) for m in range(n-1, -1, -1))
        column = self.eval_term(term).matrix[:, space.labels.index(unit)]
        result = heiscat.hecke.HeckeElem(n, {})
        for coeff, label in zip(column, space.labels):
            if coeff == 0:
                continue
            elem = heiscat.hecke.HeckeElem.one(n)
            for depth, coset in enumerate(label):
                m = n-1-depth
                piece = heiscat.hecke.coset_element(m, coset, data)
                elem = heiscat.hecke.haff_mul(elem, piece.embed(n-m-1)
                                              if n-m-1 else piece)
            result = result + self.reducer(elem) * coeff
        return result


_FUNCTORS = {}


def get_functor(data):
    if data not in _FUNCTORS:
        _FUNCTORS[data] = CyclotomicFunctor(data)
    return _FUNCTORS[data]


def build_space(word, data):
    return get_functor(data).build_space(word)


def gen_matrix(piece, word, data):
    functor = get_functor(data)
    word = heiscat.diagram.word_from_letters(word)
    target = heiscat.diagram.apply_slice(piece, word)
    return LinMap(word, target, functor.gen_matrix(piece, word))


def mackey_map(n, data):
    """
    The inversion matrix at the regular module H_n^f (suffix up^n)
    """
    return get_functor(data).mackey_matrix((UP,)*n)


def mackey_inverse(n, data):
    return inverse(mackey_map(n, data))


def eval_term(term, data):
    return get_functor(data).eval_term(term)


def eval_decorated(decorated, data):
    return get_functor(data).eval_decorated(decorated)


def eval_morphism(morphism, data):
    return get_functor(data).eval_morphism(morphism)


def phi(elem):
    """
    H_n -> End(up^n) as a list of (coefficient, DiagramTerm)
    """
    return [(coeff, heiscat.diagram.phi_monomial(elem.n, perm, exps))
            for (perm, exps), coeff in sorted(elem.terms.items())]


def psi(term, n, data):
    return get_functor(data).psi(term, n)
