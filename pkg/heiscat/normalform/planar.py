#!/usr/bin/env python3
"""
Module containing the planar-map form of a diagram and its local moves

A diagram is stored as crossings with four slots (counterclockwise from
the south west: SW=0, SE=1, NE=2, NW=3, opposite slots lie on one strand),
oriented edges between slots or boundary points, crossingless closed loops
and Sym tokens sitting in faces. Faces are named by integers and only ever
merge. Every local move replaces a cluster of crossings inside a small
disk, which keeps the rewiring in one place (PlanarDiagram.rewire).
"""
# Standard libraries
from collections import deque
from dataclasses import dataclass, replace
from fractions import Fraction
import functools
import logging
from math import comb
# Local libraries
import heiscat.coeffs
import heiscat.symfunc
from heiscat.diagram import UP, DOWN, Kind, Cap, Cross, Cup, Dot
from heiscat.symfunc import Orientation, SymPoly


logger = logging.getLogger('heiscat')

BOTTOM = 'B'
TOP = 'T'


@dataclass(frozen=True)
class Edge:
    """
    Oriented edge from tail to head; left and right are faces seen along it

    Ends are (node, slot) with node either a crossing id or a boundary
    point (BOTTOM, i) / (TOP, j), whose slot is always 0.
    """
    tail: tuple
    head: tuple
    dots: int
    left: int
    right: int


@dataclass(frozen=True)
class Loop:
    dots: int
    left: int
    right: int


def is_boundary(node):
    return isinstance(node, tuple)


class _Path:
    """
    Strand piece under construction while sweeping a term upwards
    """
    __slots__ = ("tail", "head", "dots", "left", "right")

    def __init__(self, tail=None, head=None, dots=0, left=None, right=None):
        self.tail = tail
        self.head = head
        self.dots = dots
        self.left = left
        self.right = right


class PlanarDiagram():
    """
    Mutable planar map of one diagram, with its Sym tokens

    Attributes:
        source, target (tuple): object words at the bottom and top
        k (int): central charge
        nodes (dict): crossing id -> tuple of four edge ids
        ends (dict): boundary point -> edge id
        edges (dict): edge id -> Edge
        loops (dict): loop id -> Loop
        tokens (dict): face -> SymPoly; the token of the right frame face
         is the coefficient of the diagram
        left, right (int): faces touching the left and right frame
    """
    def __init__(self, source, target, k):
        self.source = tuple(source)
        self.target = tuple(target)
        self.k = k
        self.nodes = {}
        self.ends = {}
        self.edges = {}
        self.loops = {}
        self.tokens = {}
        self.left = None
        self.right = None
        self._counter = 0

    def new_id(self):
        self._counter += 1
        return self._counter

    def copy(self):
        other = PlanarDiagram.__new__(PlanarDiagram)
        other.source = self.source
        other.target = self.target
        other.k = self.k
        other.nodes = dict(self.nodes)
        other.ends = dict(self.ends)
        other.edges = dict(self.edges)
        other.loops = dict(self.loops)
        other.tokens = dict(self.tokens)
        other.left = self.left
        other.right = self.right
        other._counter = self._counter
        return other

    # Incidence

    def edge_at(self, node, slot=0):
        if is_boundary(node):
            return self.ends[node]
        return self.nodes[node][slot]

    def other_end(self, eid, end):
        edge = self.edges[eid]
        return edge.head if edge.tail == end else edge.tail

    def face_between(self, node, slot):
        """
        Face between slot and the next slot counterclockwise
        """
        edge = self.edges[self.edge_at(node, slot)]
        return edge.left if edge.tail == (node, slot) else edge.right

    def _attach(self, end, eid):
        node, slot = end
        if is_boundary(node):
            self.ends[node] = eid
        else:
            slots = list(self.nodes[node])
            slots[slot] = eid
            self.nodes[node] = tuple(slots)

    def set_edge(self, eid, edge):
        self.edges[eid] = edge
        self._attach(edge.tail, eid)
        self._attach(edge.head, eid)

    def set_dots(self, eid, dots):
        self.edges[eid] = replace(self.edges[eid], dots=dots)

    # Faces and tokens

    def token(self, face):
        return self.tokens.get(face, SymPoly.one())

    def mul_token(self, face, value):
        value = SymPoly.coerce(value)
        if value == 1:
            return
        self.tokens[face] = self.token(face) * value

    @property
    def coefficient(self):
        return self.token(self.right)

    def is_zero(self):
        return any(value.is_zero() for value in self.tokens.values())

    def pop_coefficient(self):
        return self.tokens.pop(self.right, SymPoly.one())

    def is_clean(self):
        """
        Only the coefficient as token, no loops, every crossing on a strand
        """
        if self.loops:
            return False
        if any(face != self.right and value != 1
               for face, value in self.tokens.items()):
            return False
        return not self.closed_crossings()

    def misplaced_token(self):
        """
        (face, edge or loop to cross) for the first token away from the
        right frame face, moving it one step closer; None if there is none
        """
        faces = sorted(face for face, value in self.tokens.items()
                       if face != self.right and value != 1)
        if not faces:
            return None
        face = faces[0]
        dist, graph = self.distances(self.right)
        if face not in dist:
            raise ValueError("Invalid face for token: {}".format(face))
        for via, other in graph[face]:
            if dist.get(other) == dist[face] - 1:
                return face, via
        raise ValueError("Invalid face for token: {}".format(face))

    def merge_faces(self, keep, gone):
        """
        Rename face gone into keep everywhere
        """
        if keep == gone:
            return keep
        for eid, edge in list(self.edges.items()):
            if edge.left == gone or edge.right == gone:
                self.edges[eid] = replace(
                    edge, left=keep if edge.left == gone else edge.left,
                    right=keep if edge.right == gone else edge.right)
        for lid, loop in list(self.loops.items()):
            if loop.left == gone or loop.right == gone:
                self.loops[lid] = replace(
                    loop, left=keep if loop.left == gone else loop.left,
                    right=keep if loop.right == gone else loop.right)
        if gone in self.tokens:
            self.mul_token(keep, self.tokens.pop(gone))
        if self.left == gone:
            self.left = keep
        if self.right == gone:
            self.right = keep
        return keep

    def face_sides(self):
        """
        Face -> list of edge ids on its boundary (twice if both sides)
        """
        sides = {}
        for eid in sorted(self.edges):
            edge = self.edges[eid]
            sides.setdefault(edge.left, []).append(eid)
            sides.setdefault(edge.right, []).append(eid)
        return sides

    def loops_by_face(self):
        faces = {}
        for lid, loop in self.loops.items():
            faces.setdefault(loop.left, []).append(lid)
            faces.setdefault(loop.right, []).append(lid)
        return faces

    def _dual_neighbours(self, skip_loop=None):
        graph = {}
        for eid in sorted(self.edges):
            edge = self.edges[eid]
            if edge.left != edge.right:
                graph.setdefault(edge.left, []).append((('e', eid), edge.right))
                graph.setdefault(edge.right, []).append((('e', eid), edge.left))
        for lid in sorted(self.loops):
            if lid == skip_loop:
                continue
            loop = self.loops[lid]
            graph.setdefault(loop.left, []).append((('l', lid), loop.right))
            graph.setdefault(loop.right, []).append((('l', lid), loop.left))
        return graph

    def distances(self, start, skip_loop=None):
        graph = self._dual_neighbours(skip_loop)
        dist = {start: 0}
        queue = deque([start])
        while queue:
            face = queue.popleft()
            for _, other in graph.get(face, ()):
                if other not in dist:
                    dist[other] = dist[face] + 1
                    queue.append(other)
        return dist, graph

    # Strands

    def strands(self):
        """
        Oriented strands from boundary to boundary

        Returns a list of (tail point, head point, edge ids, crossings
        passed) ordered by tail point.
        """
        result = []
        for node in self.boundary_points():
            eid = self.ends[node]
            if self.edges[eid].tail != (node, 0):
                continue
            path, passed = [], []
            while True:
                path.append(eid)
                head_node, slot = self.edges[eid].head
                if is_boundary(head_node):
                    break
                passed.append(head_node)
                eid = self.nodes[head_node][(slot+2) % 4]
            result.append((node, head_node, path, passed))
        return result

    def boundary_points(self):
        return [(BOTTOM, i) for i in range(len(self.source))] + \
            [(TOP, j) for j in range(len(self.target))]

    def closed_crossings(self):
        seen = set()
        for _, _, _, passed in self.strands():
            seen.update(passed)
        return sorted(v for v in self.nodes if v not in seen)

    def is_reduced(self):
        """
        No loops, no closed components and no pair of strands (or strand
        with itself) meeting twice
        """
        if self.loops or self.closed_crossings():
            return False
        owners = {}
        for index, (_, _, _, passed) in enumerate(self.strands()):
            if len(set(passed)) != len(passed):
                return False
            for v in passed:
                owners.setdefault(v, []).append(index)
        pairs = set()
        for v, who in owners.items():
            pair = tuple(sorted(who))
            if pair in pairs:
                return False
            pairs.add(pair)
        return True

    def matching(self):
        """
        Sorted pairs (tail endpoint, head endpoint); endpoints are (0, i)
        on the source and (1, j) on the target
        """
        pairs = []
        for tail, head, _, _ in self.strands():
            pairs.append((endpoint(tail), endpoint(head)))
        return tuple(sorted(pairs))

    def distinguished_edges(self):
        """
        Strand (as its matching pair) -> id of the edge touching its
        distinguished endpoint
        """
        result = {}
        for tail, head, path, _ in self.strands():
            pair = (endpoint(tail), endpoint(head))
            ends = sorted((tail, head), key=lambda n: (n[0] != TOP, n[1]))
            result[pair] = self.ends[ends[0]]
        return result

    # Encoding

    def encode(self, dots=True):
        """
        Hashable key identifying the diagram up to renaming of ids

        Crossings are numbered in breadth first order from the boundary,
        each with the slot it was entered through, so the key fixes the
        rotation system. Components away from the boundary use their
        smallest encoding over all starting crossings and slots.
        """
        order = {}
        for node in self.boundary_points():
            self._number_from(self.edges[self.ends[node]], node, order)
        attached = self._encode_edges(order, dots)
        floating = []
        rest = [v for v in sorted(self.nodes) if v not in order]
        while rest:
            component = self._component(rest[0])
            best = None
            for start in sorted(component):
                for offset in range(4):
                    local = {start: (0, offset)}
                    self._spread(local, deque([start]))
                    key = self._encode_edges(local, dots, component)
                    if best is None or key < best:
                        best = key
            floating.append(best)
            rest = [v for v in rest if v not in component]
        loops = tuple(sorted(loop.dots if dots else 0
                             for loop in self.loops.values()))
        return attached, tuple(sorted(floating)), loops

    def _number_from(self, edge, node, order):
        far = edge.head if edge.tail == (node, 0) else edge.tail
        if is_boundary(far[0]) or far[0] in order:
            return
        order[far[0]] = (len(order), far[1])
        self._spread(order, deque([far[0]]))

    def _spread(self, order, queue):
        while queue:
            v = queue.popleft()
            offset = order[v][1]
            for rel in range(4):
                slot = (offset+rel) % 4
                node, far_slot = self.other_end(self.nodes[v][slot], (v, slot))
                if not is_boundary(node) and node not in order:
                    order[node] = (len(order), far_slot)
                    queue.append(node)

    def _ref(self, end, order):
        node, slot = end
        if is_boundary(node):
            return (node[0].lower(), node[1])
        index, offset = order[node]
        return ('x', index, (slot-offset) % 4)

    def _encode_edges(self, order, dots, within=None):
        entries = []
        for edge in self.edges.values():
            node = edge.tail[0]
            if within is not None:
                if is_boundary(node) or node not in within:
                    continue
            elif not is_boundary(node) and node not in order:
                continue
            entries.append((self._ref(edge.tail, order),
                            self._ref(edge.head, order),
                            edge.dots if dots else 0))
        return tuple(sorted(entries))

    def _component(self, start):
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for slot in range(4):
                node, _ = self.other_end(self.nodes[v][slot], (v, slot))
                if node not in seen:
                    seen.add(node)
                    queue.append(node)
        return seen

    # Local configurations

    def monogons(self):
        return [face for face, _ in self._small_faces(1)]

    def bigons(self):
        return [face for face, _ in self._small_faces(2)]

    def triangles(self):
        return [face for face, _ in self._small_faces(3)]

    def _small_faces(self, size):
        """
        Empty faces bounded by `size` distinct edges between distinct
        crossings (one looping edge for size 1); frame faces excluded
        """
        found = []
        with_loops = self.loops_by_face()
        for face, eids in sorted(self.face_sides().items()):
            if len(eids) != size or len(set(eids)) != size:
                continue
            if face in (self.left, self.right) or face in with_loops:
                continue
            if self.token(face) != 1:
                continue
            ends = [(self.edges[e].tail[0], self.edges[e].head[0])
                    for e in eids]
            if any(is_boundary(a) or is_boundary(b) for a, b in ends):
                continue
            if size == 1:
                a, b = ends[0]
                if a == b:
                    found.append((face, eids))
                continue
            if any(a == b for a, b in ends):
                continue
            nodes = {n for pair in ends for n in pair}
            if len(nodes) != size:
                continue
            if size == 2 and set(ends[0]) != set(ends[1]):
                continue
            if size == 3 and len({frozenset(p) for p in ends}) != 3:
                continue
            found.append((face, eids))
        return found

    def face_edges(self, face):
        return [e for e in self.face_sides().get(face, ())]

    # The disk replacement primitive

    def walk(self, start, internal):
        """
        Stubs and arcs met going counterclockwise around a cluster

        Starting at the stub `start`, returns the stubs in counterclockwise
        order and, for each stub i, the face between stub i and stub i+1.
        """
        stubs, arcs = [], []
        current = start
        while True:
            stubs.append(current)
            arcs.append(self.face_between(*current))
            node, slot = current
            turn = (slot+1) % 4
            while self.nodes[node][turn] in internal:
                node, far = self.other_end(self.nodes[node][turn],
                                           (node, turn))
                turn = (far+1) % 4
            current = (node, turn)
            if current == start:
                return stubs, arcs

    def rewire(self, cluster, internal, stubs, arcs, links, crossings=0,
               extra=()):
        """
        Replace the inside of a disk

        @param cluster: crossing ids removed
        @param internal: edge ids removed together with the crossings
        @param stubs, arcs: output of walk around the cluster
        @param links: (end, end, dots) with ends ('s', stub index) or
         ('c', new crossing index, slot)
        @param crossings: number of new crossings
        @param extra: (arc index, SymPoly) tokens placed after the rewiring
        """
        m = len(stubs)
        stub_edge = [self.edge_at(*s) for s in stubs]
        incoming = [self.edges[eid].head == s
                    for eid, s in zip(stub_edge, stubs)]
        oriented = _orient_links(links, incoming)
        at_stub = {}
        leaving = {}
        for index, (tail, head, _) in enumerate(oriented):
            leaving[tail] = ('L', index, 1)
            leaving[head] = ('L', index, -1)
            for end in (tail, head):
                if end[0] == 's':
                    at_stub[end[1]] = index
        faces = _trace_local_faces(oriented, leaving, m, crossings)
        inner = set()
        for eid in internal:
            inner.update((self.edges[eid].left, self.edges[eid].right))
        inner -= set(arcs)
        inner -= {self.left, self.right}
        for face in inner:
            self.tokens.pop(face, None)
        # merge the arcs that end up in one face, name the enclosed ones
        alias = {}

        def resolve(face):
            while face in alias:
                face = alias[face]
            return face

        dart_face = {}
        for darts in faces:
            touched = [resolve(arcs[d[1]]) for d in darts if d[0] == 'A']
            if touched:
                keep = touched[0]
                for other in touched[1:]:
                    other = resolve(other)
                    if other != keep:
                        self.merge_faces(keep, other)
                        alias[other] = keep
                name = ('arc', darts)
            else:
                name = self.new_id()
            for dart in darts:
                if dart[0] == 'L':
                    dart_face[dart] = name
        final = {}
        for darts in faces:
            touched = [arcs[d[1]] for d in darts if d[0] == 'A']
            if touched:
                final[('arc', darts)] = resolve(touched[0])

        def face_of(dart):
            name = dart_face[dart]
            return final.get(name, name)

        for face, value in extra:
            self.mul_token(resolve(arcs[face]), value)
        # remove the old inside and rebuild the chains through the disk
        stub_set = {s: i for i, s in enumerate(stubs)}
        outside = {}
        for i, eid in enumerate(stub_edge):
            outside[i] = self.edges[eid]
        for eid in set(internal) | set(stub_edge):
            self.edges.pop(eid, None)
        for v in cluster:
            self.nodes.pop(v, None)
        new_nodes = []
        for _ in range(crossings):
            v = self.new_id()
            self.nodes[v] = (None,)*4
            new_nodes.append(v)

        def local_end(end):
            return (new_nodes[end[1]], end[2])

        used = set()

        def run(index, tail, dots):
            first = index
            while True:
                used.add(index)
                _, head, link_dots = oriented[index]
                dots += link_dots
                if head[0] == 'c':
                    end = local_end(head)
                    break
                edge = outside[head[1]]
                dots += edge.dots
                if edge.head in stub_set:
                    index = at_stub[stub_set[edge.head]]
                    if index == first:
                        return dots
                    continue
                end = edge.head
                break
            self.set_edge(self.new_id(), Edge(
                tail, end, dots, face_of(('L', first, 1)),
                face_of(('L', first, -1))))
            return None

        for i in range(m):
            edge = outside[i]
            if incoming[i] and edge.tail not in stub_set:
                run(at_stub[i], edge.tail, edge.dots)
        for index, (tail, _, _) in enumerate(oriented):
            if tail[0] == 'c':
                run(index, local_end(tail), 0)
        for index in range(len(oriented)):
            if index not in used:
                dots = run(index, None, 0)
                self.loops[self.new_id()] = Loop(
                    dots, face_of(('L', index, 1)), face_of(('L', index, -1)))
        return self

    # Moves

    def slide_dot(self, eid, forward=True, corrections=True):
        """
        Move all dots of an edge through its head (forward) or tail crossing

        Returns (main, corrections); the corrections are smoothings of the
        crossing with signs and dots given by the Hecke relations.
        """
        edge = self.edges[eid]
        count = edge.dots
        v, slot = edge.head if forward else edge.tail
        main = self.copy()
        main.set_dots(eid, 0)
        far = self.nodes[v][(slot+2) % 4]
        main.set_dots(far, main.edges[far].dots + count)
        if not corrections or count == 0:
            return main, []
        ins = [s for s in range(4) if self.edges[self.nodes[v][s]].head == (v, s)]
        in_a = ins[0] if (ins[0]+1) % 4 not in ins else ins[1]
        in_b, out_b, out_a = (in_a-1) % 4, (in_a+1) % 4, (in_a+2) % 4
        on_a = slot in (in_a, out_a)
        sign = -1 if on_a == forward else 1
        result = []
        stubs, arcs = self.walk((v, 0), set())
        for a in range(count):
            other = self.copy()
            other.set_dots(eid, 0)
            links = [(('s', in_b), ('s', out_a), a),
                     (('s', in_a), ('s', out_b), count-1-a)]
            other.rewire([v], set(), stubs, arcs, links)
            other.mul_token(other.right, sign)
            result.append(other)
        return main, result

    def r2(self, face):
        """
        Remove an empty dotless bigon

        Parallel bigons vanish into two straight strands; antiparallel ones
        add smoothings carrying a bubble of negative degree.
        """
        e1, e2 = self.face_edges(face)
        first, second = self.edges[e1], self.edges[e2]
        u = first.tail[0]
        v = first.head[0]
        internal = {e1, e2}
        start = next((u, s) for s in range(4) if self.nodes[u][s] not in internal)
        stubs, arcs = self.walk(start, internal)
        index = {s: i for i, s in enumerate(stubs)}

        def straight(edge):
            (a, p), (b, q) = edge.tail, edge.head
            return (('s', index[(a, (p+2) % 4)]), ('s', index[(b, (q+2) % 4)]), 0)

        main = self.copy()
        main.rewire([u, v], internal, stubs, arcs,
                    [straight(first), straight(second)])
        result = [main]
        if second.tail[0] == u:
            return result
        orientation = Orientation.CCW if face == first.left else Orientation.CW
        at_u = [i for i, s in enumerate(stubs) if s[0] == u]
        at_v = [i for i, s in enumerate(stubs) if s[0] == v]
        side = next(i for i in range(4)
                    if stubs[i][0] == u and stubs[(i+1) % 4][0] == v)
        for total in range(abs(self.k)):
            value = heiscat.symfunc.bubble(orientation, -total-2, self.k)
            if value.is_zero():
                continue
            for a in range(total+1):
                other = self.copy()
                links = [(('s', at_u[0]), ('s', at_u[1]), a),
                         (('s', at_v[0]), ('s', at_v[1]), total-a)]
                other.rewire([u, v], internal, stubs, arcs, links,
                             extra=[(side, value)])
                result.append(other)
        return result

    def curl(self, face):
        """
        Replace an empty curl by a sum of dotted strands times bubbles
        """
        eid, = self.face_edges(face)
        edge = self.edges[eid]
        v = edge.tail[0]
        r = edge.dots
        start = next((v, s) for s in range(4) if self.nodes[v][s] != eid)
        stubs, arcs = self.walk(start, {eid})
        outer = edge.right if face == edge.left else edge.left
        side = arcs.index(outer) if outer in arcs else 0
        ccw = face == edge.left
        result = []
        for s in range(r+abs(self.k)+1):
            if ccw:
                value = heiscat.symfunc.bubble(Orientation.CCW, r-s-1, self.k)
            else:
                value = -heiscat.symfunc.bubble(Orientation.CW, r-s-1, self.k)
            if value.is_zero():
                continue
            other = self.copy()
            other.rewire([v], {eid}, stubs, arcs, [(('s', 0), ('s', 1), s)],
                         extra=[(side, value)])
            result.append(other)
        return result

    def flip(self, face, corrections=True):
        """
        Move a strand across an empty dotless triangle

        Returns (main, corrections). A triangle whose sides form an
        oriented cycle adds smoothings carrying a bubble, with sign + for a
        counterclockwise cycle and - for a clockwise one.
        """
        eids = self.face_edges(face)
        internal = set(eids)
        cluster = sorted({self.edges[e].tail[0] for e in eids} |
                         {self.edges[e].head[0] for e in eids})
        u = cluster[0]
        start = next((u, s) for s in range(4) if self.nodes[u][s] not in internal)
        stubs, arcs = self.walk(start, internal)
        pairs_a = [(0, 1), (2, 3), (4, 5)]
        pairs_b = [(1, 2), (3, 4), (5, 0)]
        after = pairs_b if stubs[0][0] == stubs[1][0] else pairs_a
        main = self.copy()
        main.rewire(cluster, internal, stubs, arcs, _triangle_links(after), 3)
        if not corrections:
            return main, []
        incoming = [self.edges[self.edge_at(*s)].head == s for s in stubs]
        if any(incoming[i] == incoming[(i+1) % 6] for i in range(6)):
            return main, []
        sign = 1 if face == self.edges[eids[0]].left else -1
        ins = [i for i in range(6) if incoming[i]]
        if self.k >= 0:
            orientation = Orientation.CCW
            ends = [(i, (i+1) % 6) for i in ins]
            side = next(i for i in range(6) if not incoming[i])
        else:
            orientation = Orientation.CW
            ends = [((i-1) % 6, i) for i in ins]
            side = ins[0]
        result = []
        for total in range(max(abs(self.k)-1, 0)):
            value = heiscat.symfunc.bubble(orientation, -total-3, self.k)
            if value.is_zero():
                continue
            for r in range(total+1):
                for s in range(total-r+1):
                    dots = (r, s, total-r-s)
                    links = [(('s', a), ('s', b), d)
                             for (a, b), d in zip(ends, dots)]
                    other = self.copy()
                    other.rewire(cluster, internal, stubs, arcs, links,
                                 extra=[(side, value)])
                    other.mul_token(other.right, sign)
                    result.append(other)
        return main, result

    def slide_token(self, face, via):
        """
        Move the token of a face across one edge or loop

        Returns the diagrams of the sum, one per number of dots left on
        the crossed strand.
        """
        kind, ident = via
        target = self.edges[ident] if kind == 'e' else self.loops[ident]
        value = self.tokens[face]
        if face == target.left:
            image = _token_image(value, True)
            other_face = target.right
        else:
            image = _token_image(value, False)
            other_face = target.left
        result = []
        for dots, coeff in sorted(image.items()):
            if coeff.is_zero():
                continue
            other = self.copy()
            del other.tokens[face]
            other.mul_token(other_face, coeff)
            if kind == 'e':
                other.set_dots(ident, target.dots + dots)
            else:
                other.loops[ident] = replace(target, dots=target.dots + dots)
            result.append(other)
        return result

    def loop_inside(self, lid):
        """
        The face enclosed by a loop
        """
        loop = self.loops[lid]
        dist, _ = self.distances(self.right, skip_loop=lid)
        return loop.right if loop.left in dist else loop.left

    def is_empty_loop(self, lid):
        inside = self.loop_inside(lid)
        if inside in self.face_sides() or self.token(inside) != 1:
            return False
        return all(inside not in (o.left, o.right)
                   for i, o in self.loops.items() if i != lid)

    def evaluate_loop(self, lid):
        """
        Replace an empty loop by its bubble value in the outer face
        """
        inside = self.loop_inside(lid)
        loop = self.loops.pop(lid)
        outside = loop.right if inside == loop.left else loop.left
        orientation = Orientation.CCW if inside == loop.left \
            else Orientation.CW
        self.tokens.pop(inside, None)
        self.mul_token(outside, heiscat.symfunc.bubble(orientation,
                                                       loop.dots, self.k))
        return self


def endpoint(node):
    return (0 if node[0] == BOTTOM else 1, node[1])


def _orient_links(links, incoming):
    """
    Orient links from stub directions and straight passage at crossings
    """
    oriented = [None]*len(links)
    by_end = {}
    for index, (a, b, _) in enumerate(links):
        by_end[a] = index
        by_end[b] = index

    def fix(index, tail):
        a, b, dots = links[index]
        oriented[index] = (tail, b if tail == a else a, dots)

    for index, (a, b, _) in enumerate(links):
        for end in (a, b):
            if end[0] == 's' and oriented[index] is None:
                if incoming[end[1]]:
                    fix(index, end)
                else:
                    fix(index, b if end == a else a)
    changed = True
    while changed:
        changed = False
        for index, link in enumerate(oriented):
            if link is None:
                continue
            tail, head, _ = link
            for end, is_tail in ((tail, True), (head, False)):
                if end[0] != 'c':
                    continue
                across = ('c', end[1], (end[2]+2) % 4)
                other = by_end[across]
                if oriented[other] is not None:
                    continue
                # a head entering at a slot leaves at the opposite slot
                a, b, _ = links[other]
                if is_tail:
                    fix(other, a if b == across else b)
                else:
                    fix(other, across)
                changed = True
    if any(link is None for link in oriented):
        raise ValueError("Invalid rewiring: unoriented link")
    return oriented


def _trace_local_faces(oriented, leaving, m, crossings):
    """
    Faces of the local disk picture as lists of darts

    Darts are ('L', link, +1/-1), ('A', i) for arc i run counterclockwise
    and ('X', i) for arc i run clockwise; each traced face lies on the
    left of its darts. The exterior face (made of X darts) is dropped.
    """
    def vertex(end):
        return ('s', end[1]) if end[0] == 's' else ('c', end[1])

    def dest(dart):
        if dart[0] == 'L':
            tail, head, _ = oriented[dart[1]]
            return vertex(head if dart[2] == 1 else tail)
        if dart[0] == 'A':
            return ('s', (dart[1]+1) % m)
        return ('s', (dart[1]-1) % m)

    def rev(dart):
        if dart[0] == 'L':
            return ('L', dart[1], -dart[2])
        if dart[0] == 'A':
            return ('X', (dart[1]+1) % m)
        return ('A', (dart[1]-1) % m)

    def rotation(vert):
        if vert[0] == 's':
            i = vert[1]
            return [leaving[('s', i)], ('X', i), ('A', i)]
        return [leaving[('c', vert[1], q)] for q in range(4)]

    darts = [('A', i) for i in range(m)] + [('X', i) for i in range(m)]
    for index in range(len(oriented)):
        darts += [('L', index, 1), ('L', index, -1)]
    seen = set()
    faces = []
    for dart in darts:
        if dart in seen:
            continue
        face = []
        current = dart
        while current not in seen:
            seen.add(current)
            face.append(current)
            rot = rotation(dest(current))
            current = rot[rot.index(rev(current))-1]
        if not any(d[0] == 'X' for d in face):
            faces.append(tuple(face))
    return faces


def _triangle_links(pairs):
    """
    Links of three crossings, one per stub pair, with straight strands
    joining stub i to stub i+3
    """
    holder = {}
    slots = []
    for j, (p, q) in enumerate(pairs):
        ends = sorted({p, (p+3) % 6, q, (q+3) % 6})
        slots.append(ends)
        holder[p] = j
        holder[q] = j
    links = []
    for j, (p, q) in enumerate(pairs):
        for s, target in enumerate(slots[j]):
            if target in (p, q):
                links.append((('c', j, s), ('s', target), 0))
                continue
            other = holder[target]
            far = slots[other].index((target+3) % 6)
            if (j, s) < (other, far):
                links.append((('c', j, s), ('c', other, far), 0))
    return links


def _poly_mul(a, b):
    result = {}
    for da, ca in a.items():
        for db, cb in b.items():
            result[da+db] = result.get(da+db, SymPoly()) + ca*cb
    return result


@functools.lru_cache(maxsize=None)
def _part_image(n, left_to_right):
    image = {}
    if left_to_right:
        image[0] = SymPoly.e(n)
        for s in range(n-1):
            image[s] = image.get(s, SymPoly()) - SymPoly.e(n-2-s) * (s+1)
    else:
        image[0] = SymPoly.e(n)
        for j in range(2, n+1):
            for m in range(1, j//2+1):
                dots = j-2*m
                image[dots] = image.get(dots, SymPoly()) + \
                    SymPoly.e(n-j) * comb(j-1, 2*m-1)
    return tuple(sorted(image.items()))


def _token_image(value, left_to_right):
    """
    A token carried across a strand, as {dots on the strand: SymPoly}

    Going from the left of a strand to its right, e_n becomes
    e_n - sum_s (s+1) x^s e_(n-2-s); the opposite direction uses the
    inverse substitution. Both extend to ring maps.
    """
    total = {}
    for parts, coeff in value.terms.items():
        term = {0: SymPoly.constant(coeff)}
        for part in parts:
            term = _poly_mul(term, dict(_part_image(part, left_to_right)))
        for dots, poly in term.items():
            total[dots] = total.get(dots, SymPoly()) + poly
    return {d: p for d, p in total.items() if not p.is_zero()}


def from_term(term, k, tokens=(), coeff=1):
    """
    Planar diagrams of a (decorated) term

    Decorated cups and caps are expanded into leftward ones with dots and
    bubbles, so a list of diagrams is returned.
    """
    result = []
    for scalar, slices, placed in expand_spades(term, tokens, k):
        diagram = build(term.source, term.target, slices, placed, k)
        diagram.mul_token(diagram.right, Fraction(scalar) *
                          heiscat.coeffs.to_fraction(coeff))
        result.append(diagram)
    return result


def expand_spades(term, tokens, k):
    """
    Yield (scalar, slices, tokens) with every decorated cup and cap replaced
    """
    partials = [(1, [], [], [])]
    for piece in term.slices:
        grown = []
        for scalar, slices, levels, extra in partials:
            levels = levels + [len(slices)]
            decorated = isinstance(piece, (Cup, Cap)) and \
                piece.kind is Kind.SPADE
            if not decorated:
                grown.append((scalar, slices + [piece], levels, extra))
                continue
            p, r = piece.pos, piece.decoration
            if isinstance(piece, Cup):
                if not 0 <= r < k:
                    raise ValueError("Invalid decorated cup: r={} k={}".format(
                        r, k))
                for s in range(k-r):
                    value = heiscat.symfunc.bubble(Orientation.CCW, -r-s-2, k)
                    if value.is_zero():
                        continue
                    new = [Cup(p, Kind.LEFTWARD)] + \
                        ([Dot(p, UP, s)] if s else [])
                    grown.append((-scalar, slices + new, levels,
                                  extra + [(len(slices), p, value)]))
            else:
                if not 0 <= r < -k:
                    raise ValueError("Invalid decorated cap: r={} k={}".format(
                        r, k))
                for s in range(-k-r):
                    value = heiscat.symfunc.bubble(Orientation.CW, -r-s-2, k)
                    if value.is_zero():
                        continue
                    new = ([Dot(p+1, UP, s)] if s else []) + \
                        [Cap(p, Kind.LEFTWARD)]
                    grown.append((-scalar, slices + new, levels,
                                  extra + [(len(slices), p, value)]))
        partials = grown
    for scalar, slices, levels, extra in partials:
        levels = levels + [len(slices)]
        placed = [(levels[level], gap, value) for level, gap, value in tokens]
        yield scalar, slices, placed + extra


def build(source, target, slices, tokens, k):
    """
    Sweep the slices upwards and record the planar map
    """
    diagram = PlanarDiagram(source, target, k)
    parent = {}

    def new_face():
        face = diagram.new_id()
        parent[face] = face
        return face

    def find(face):
        while parent[face] != face:
            parent[face] = parent[parent[face]]
            face = parent[face]
        return face

    finished, loops, placed = [], [], []

    def close(path, letter, end):
        if letter is UP:
            path.head = end
        else:
            path.tail = end
        if path.tail is not None and path.head is not None:
            finished.append(path)

    word = list(source)
    gaps = [new_face() for _ in range(len(word)+1)]
    left, right = gaps[0], gaps[-1]
    paths = []
    for i, letter in enumerate(word):
        end = ((BOTTOM, i), 0)
        if letter is UP:
            paths.append(_Path(tail=end, left=gaps[i], right=gaps[i+1]))
        else:
            paths.append(_Path(head=end, left=gaps[i+1], right=gaps[i]))
    by_level = {}
    for level, gap, value in tokens:
        by_level.setdefault(level, []).append((gap, value))
    for level in range(len(slices)+1):
        for gap, value in by_level.get(level, ()):
            placed.append((gaps[gap], value))
        if level == len(slices):
            break
        piece = slices[level]
        p = piece.pos
        if isinstance(piece, Dot):
            paths[p].dots += piece.mult
        elif isinstance(piece, Cross):
            v = diagram.new_id()
            diagram.nodes[v] = (None,)*4
            below, above = paths[p], paths[p+1]
            low, high = word[p], word[p+1]
            close(below, low, (v, 0))
            close(above, high, (v, 1))
            middle = new_face()
            if high is UP:
                west = _Path(tail=(v, 3), left=gaps[p], right=middle)
            else:
                west = _Path(head=(v, 3), left=middle, right=gaps[p])
            if low is UP:
                east = _Path(tail=(v, 2), left=middle, right=gaps[p+2])
            else:
                east = _Path(head=(v, 2), left=gaps[p+2], right=middle)
            paths[p], paths[p+1] = west, east
            word[p], word[p+1] = high, low
            gaps[p+1] = middle
        elif isinstance(piece, Cup):
            inner, outer = new_face(), gaps[p]
            if piece.kind is Kind.RIGHTWARD:
                path = _Path(left=inner, right=outer)
                letters = [DOWN, UP]
            else:
                path = _Path(left=outer, right=inner)
                letters = [UP, DOWN]
            paths[p:p] = [path, path]
            word[p:p] = letters
            gaps = gaps[:p+1] + [inner, outer] + gaps[p+1:]
        else:
            first, second = paths[p], paths[p+1]
            a, b = find(gaps[p]), find(gaps[p+2])
            if a != b:
                parent[b] = a
            if first is second:
                loops.append(first)
            else:
                if piece.kind is Kind.RIGHTWARD:
                    merged = _Path(first.tail, second.head)
                else:
                    merged = _Path(second.tail, first.head)
                merged.dots = first.dots + second.dots
                merged.left, merged.right = first.left, first.right
                for i, path in enumerate(paths):
                    if i not in (p, p+1) and (path is first or path is second):
                        paths[i] = merged
                if merged.tail is not None and merged.head is not None:
                    finished.append(merged)
            del paths[p:p+2]
            del word[p:p+2]
            gaps = gaps[:p+1] + gaps[p+3:]
    for j, letter in enumerate(word):
        close(paths[j], letter, ((TOP, j), 0))
    for path in finished:
        diagram.set_edge(diagram.new_id(), Edge(
            path.tail, path.head, path.dots, find(path.left),
            find(path.right)))
    for path in loops:
        diagram.loops[diagram.new_id()] = Loop(path.dots, find(path.left),
                                               find(path.right))
    diagram.left, diagram.right = find(left), find(right)
    for face, value in placed:
        diagram.mul_token(find(face), value)
    logger.debug("Built planar diagram: {} crossings, {} loops".format(
        len(diagram.nodes), len(diagram.loops)))
    return diagram
