# Copyright 2024 The tracelab authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
String diagrams of the free prop over a monoidal graph.

A :class:`Diagram` is stored as a boundary-anchored acyclic port graph.
Producer ports are the domain positions and the node outputs; consumer
ports are the codomain positions and the node inputs.  Every consumer is
wired to exactly one producer and every producer feeds exactly one
consumer.  Ports are :class:`Port` values whose node is :data:`BOUNDARY`
for the domain (producer side) or codomain (consumer side).

Two diagrams denote the same morphism exactly when their port graphs are
isomorphic relative to the boundary, which :func:`canonical_form` decides.
"""

from .errors import InvalidDocument, InvalidDiagram, SignatureMismatch, \
    BoundaryMismatch, NotAPermutation, BoundaryNotFull, SourceTargetMismatch
from .signature import MonoidalGraph, GraphMorphism, DistributedAlphabet, map_word, require_int, require_list, \
    str_list
from collections import deque
from dataclasses import dataclass, field
from typing import List, Mapping, Sequence, Tuple
import json
import logging
import networkx as nx
import numpy as np


_log = logging.getLogger(__name__)
BOUNDARY = -1


@dataclass(frozen=True, order=True)
class Port:
    node: int
    index: int

    def __repr__(self):
        if self.node == BOUNDARY:
            return f'Port(boundary, {self.index})'
        return f'Port({self.node}, {self.index})'


@dataclass(frozen=True)
class CanonicalForm:
    """The canonical node order and the flat encoding of a diagram.

    Only the encoding takes part in equality: equal diagrams have
    byte-identical encodings.
    """
    order: Tuple[int, ...] = field(compare=False)
    encoding: bytes


class Diagram:
    """A string diagram dom -> cod over a monoidal graph.

    :param signature: The :class:`MonoidalGraph`.
    :param dom: The domain word.
    :param cod: The codomain word.
    :param nodes: The generator name of each node, indexed by node id.
    :param wires: The mapping from each consumer port to its producer port.
    :param validate: When True (default), check sorts, port incidence
        and acyclicity.  The operations in this module build valid
        diagrams and skip the check.
    :raise InvalidDiagram: If validation fails.
    """

    def __init__(self, signature: MonoidalGraph, dom, cod, nodes, wires: Mapping[Port, Port], validate=True):
        self.signature = signature
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.nodes = tuple(nodes)
        self._wires = dict(wires)
        self._reverse = None
        self._canonical = None
        if validate:
            self._validate()

    def _box(self, node):
        return self.signature.box(self.nodes[node])

    def producer_ports(self) -> List[Port]:
        ports = [Port(BOUNDARY, i) for i in range(len(self.dom))]
        for n in range(len(self.nodes)):
            ports.extend(Port(n, j) for j in range(len(self._box(n).coarity)))
        return ports

    def consumer_ports(self) -> List[Port]:
        ports = [Port(BOUNDARY, i) for i in range(len(self.cod))]
        for n in range(len(self.nodes)):
            ports.extend(Port(n, j) for j in range(len(self._box(n).arity)))
        return ports

    def producer_sort(self, port: Port) -> str:
        if port.node == BOUNDARY:
            return self.dom[port.index]
        return self._box(port.node).coarity[port.index]

    def consumer_sort(self, port: Port) -> str:
        if port.node == BOUNDARY:
            return self.cod[port.index]
        return self._box(port.node).arity[port.index]

    def producer(self, consumer: Port) -> Port:
        """The producer port wired to a consumer port."""
        return self._wires[consumer]

    def consumer(self, producer: Port) -> Port:
        """The consumer port wired to a producer port."""
        if self._reverse is None:
            self._reverse = {p: c for c, p in self._wires.items()}
        return self._reverse[producer]

    def wires_by_consumer(self) -> Mapping[Port, Port]:
        """A copy of the consumer to producer wire mapping."""
        return dict(self._wires)

    @property
    def wires(self) -> List[Tuple[Port, Port]]:
        """The sorted list of (producer, consumer) wires."""
        return sorted((p, c) for c, p in self._wires.items())

    def _validate(self):
        self.signature.check_word(self.dom)
        self.signature.check_word(self.cod)
        for name in self.nodes:
            self.signature.box(name)
        consumers = self.consumer_ports()
        producers = self.producer_ports()
        if set(self._wires.keys()) != set(consumers) or len(self._wires) != len(consumers):
            raise InvalidDiagram('every consumer port must be incident to exactly one wire')
        if sorted(self._wires.values()) != sorted(producers):
            raise InvalidDiagram('every producer port must be incident to exactly one wire')
        for c, p in self._wires.items():
            if self.consumer_sort(c) != self.producer_sort(p):
                raise InvalidDiagram(f'wire {p} -> {c} joins sort {self.producer_sort(p)} '
                                     f'to sort {self.consumer_sort(c)}')
        if not nx.is_directed_acyclic_graph(self.node_graph()):
            raise InvalidDiagram('the diagram contains a cycle')

    def node_graph(self) -> nx.DiGraph:
        """The directed graph on node ids induced by the wires."""
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.nodes)))
        for c, p in self._wires.items():
            if c.node != BOUNDARY and p.node != BOUNDARY:
                g.add_edge(p.node, c.node)
        return g

    def nodes_of(self, name) -> List[int]:
        """The ids of the nodes labeled by a generator."""
        return [n for n, label in enumerate(self.nodes) if label == name]

    def is_endomorphism(self, word) -> bool:
        word = tuple(word)
        return self.dom == word and self.cod == word

    def __len__(self):
        return len(self.nodes)

    def __rshift__(self, other):
        return compose(self, other)

    def __matmul__(self, other):
        return tensor(self, other)

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.signature == other.signature and canonical_form(self) == canonical_form(other)

    def __hash__(self):
        return hash(canonical_form(self).encoding)

    def __repr__(self):
        return f'Diagram({".".join(self.dom) or "I"} -> {".".join(self.cod) or "I"}, nodes={list(self.nodes)})'

    def to_map(self):
        order = canonical_form(self).order
        position = {n: idx for idx, n in enumerate(order)}

        def ref(port, side):
            if port.node == BOUNDARY:
                return {'boundary': port.index}
            return {'node': position[port.node], 'port': port.index, 'side': side}

        wires = sorted(self.wires, key=lambda w: (
            -1 if w[0].node == BOUNDARY else position[w[0].node], w[0].index))
        return {
            'signature': self.signature.name or self.signature.to_map(),
            'dom': list(self.dom),
            'cod': list(self.cod),
            'nodes': [{'id': idx, 'generator': self.nodes[n]} for idx, n in enumerate(order)],
            'wires': [{'sort': self.producer_sort(p), 'from': ref(p, 'out'), 'to': ref(c, 'in')}
                      for p, c in wires],
        }

    @staticmethod
    def from_map(d, signature: MonoidalGraph = None, graphs: Mapping[str, MonoidalGraph] = None):
        """Construct a diagram from its ``diagram`` document.

        :param d: The document dict.
        :param signature: The signature.  None resolves the document
            'signature' entry, which is either an embedded monoidal_graph
            document or a name looked up in graphs.
        :param graphs: The optional name to :class:`MonoidalGraph` mapping.
        :raise InvalidDocument: On schema errors.
        :raise InvalidDiagram: If the described port graph is not a diagram.
        """
        if not isinstance(d, Mapping):
            raise InvalidDocument('diagram: expected an object')
        for key in ['dom', 'cod', 'nodes', 'wires']:
            if key not in d:
                raise InvalidDocument(f'diagram: missing key {key}')
        if signature is None:
            signature = resolve_graph(d.get('signature'), graphs)
        ids = {}
        nodes = []
        for entry in require_list(d['nodes'], 'diagram.nodes'):
            if not isinstance(entry, Mapping) or 'id' not in entry or not isinstance(entry.get('generator'), str):
                raise InvalidDocument('diagram.nodes entries need id and generator')
            key = str(entry['id'])
            if key in ids:
                raise InvalidDocument(f'diagram: duplicate node id {key}')
            ids[key] = len(nodes)
            nodes.append(entry['generator'])

        def parse_ref(ref, side):
            if not isinstance(ref, Mapping):
                raise InvalidDocument(f'diagram: invalid port reference {ref}')
            if 'boundary' in ref:
                return Port(BOUNDARY, require_int(ref['boundary'], 'diagram boundary reference'))
            try:
                node = ids[str(ref['node'])]
                index = require_int(ref['port'], 'diagram port reference')
            except KeyError:
                raise InvalidDocument(f'diagram: invalid port reference {ref}')
            if ref.get('side', side) != side:
                raise InvalidDocument(f'diagram: port reference {ref} must be on side {side}')
            return Port(node, index)

        wires = {}
        for w in require_list(d['wires'], 'diagram.wires'):
            if not isinstance(w, Mapping) or 'from' not in w or 'to' not in w:
                raise InvalidDocument('diagram.wires entries need from and to')
            p = parse_ref(w['from'], 'out')
            c = parse_ref(w['to'], 'in')
            if c in wires:
                raise InvalidDiagram(f'consumer port {c} has more than one wire')
            wires[c] = p
        diagram = Diagram(signature, str_list(d['dom'], 'diagram.dom'), str_list(d['cod'], 'diagram.cod'),
                          nodes, wires)
        for w in d['wires']:
            if 'sort' in w:
                p = parse_ref(w['from'], 'out')
                if diagram.producer_sort(p) != w['sort']:
                    raise InvalidDiagram(f'wire from {w["from"]} declared with sort {w["sort"]}')
        return diagram


def resolve_graph(ref, graphs: Mapping[str, MonoidalGraph] = None) -> MonoidalGraph:
    """Resolve a signature reference: an embedded graph document or a name."""
    if isinstance(ref, Mapping):
        return MonoidalGraph.from_map(ref)
    if isinstance(ref, str) and graphs is not None and ref in graphs:
        return graphs[ref]
    raise InvalidDocument(f'unresolved signature reference {ref!r}')


# --- construction ---------------------------------------------------------


def identity(signature: MonoidalGraph, word) -> Diagram:
    """The identity diagram on a word; the empty word gives the empty diagram.

    :raise UnknownSort: If a letter is not a sort of the signature.
    """
    word = signature.check_word(word)
    wires = {Port(BOUNDARY, i): Port(BOUNDARY, i) for i in range(len(word))}
    return Diagram(signature, word, word, (), wires, validate=False)


def generator(signature: MonoidalGraph, name) -> Diagram:
    """The single-node diagram of a generator.

    :raise UnknownGenerator: If name is not a generator.
    """
    box = signature.box(name)
    wires = {}
    for j in range(len(box.arity)):
        wires[Port(0, j)] = Port(BOUNDARY, j)
    for j in range(len(box.coarity)):
        wires[Port(BOUNDARY, j)] = Port(0, j)
    return Diagram(signature, box.arity, box.coarity, (name, ), wires, validate=False)


def symmetry(signature: MonoidalGraph, w1, w2) -> Diagram:
    """The symmetry w1.w2 -> w2.w1 that crosses the two blocks of wires."""
    w1 = signature.check_word(w1)
    w2 = signature.check_word(w2)
    n1, n2 = len(w1), len(w2)
    wires = {}
    for k in range(n2):
        wires[Port(BOUNDARY, k)] = Port(BOUNDARY, n1 + k)
    for j in range(n1):
        wires[Port(BOUNDARY, n2 + j)] = Port(BOUNDARY, j)
    return Diagram(signature, w1 + w2, w2 + w1, (), wires, validate=False)


def _check_signature(d: Diagram, e: Diagram):
    if d.signature != e.signature:
        raise SignatureMismatch('diagrams are over different monoidal graphs')


def compose(d: Diagram, e: Diagram) -> Diagram:
    """Sequential composition in diagrammatic order: d then e.

    :raise BoundaryMismatch: If cod(d) != dom(e).
    """
    _check_signature(d, e)
    if d.cod != e.dom:
        raise BoundaryMismatch(f'cannot compose {list(d.cod)} with {list(e.dom)}')
    offset = len(d.nodes)
    wires = {c: p for c, p in d._wires.items() if c.node != BOUNDARY}
    for c, p in e._wires.items():
        if c.node != BOUNDARY:
            c = Port(c.node + offset, c.index)
        if p.node == BOUNDARY:
            p = d._wires[Port(BOUNDARY, p.index)]
        else:
            p = Port(p.node + offset, p.index)
        wires[c] = p
    return Diagram(d.signature, d.dom, e.cod, d.nodes + e.nodes, wires, validate=False)


def tensor(d: Diagram, e: Diagram) -> Diagram:
    """Parallel composition: d above e."""
    _check_signature(d, e)
    offset = len(d.nodes)
    n_dom, n_cod = len(d.dom), len(d.cod)
    wires = dict(d._wires)
    for c, p in e._wires.items():
        if c.node == BOUNDARY:
            c = Port(BOUNDARY, c.index + n_cod)
        else:
            c = Port(c.node + offset, c.index)
        if p.node == BOUNDARY:
            p = Port(BOUNDARY, p.index + n_dom)
        else:
            p = Port(p.node + offset, p.index)
        wires[c] = p
    return Diagram(d.signature, d.dom + e.dom, d.cod + e.cod, d.nodes + e.nodes, wires, validate=False)


def permutation_diagram(signature: MonoidalGraph, word, perm: Sequence[int]) -> Diagram:
    """The node-free diagram that moves wire i to position perm[i].

    :param signature: The signature.
    :param word: The domain word.
    :param perm: The 0-based permutation of range(len(word)).
    :return: The diagram word -> w' where w'[perm[i]] = word[i].
    :raise NotAPermutation: If perm is not a bijection on the positions.
    """
    word = signature.check_word(word)
    n = len(word)
    p = np.asarray(list(perm), dtype=np.int64)
    if p.shape != (n, ) or not np.array_equal(np.sort(p), np.arange(n)):
        raise NotAPermutation(f'{list(perm)} is not a permutation of {n} positions')
    cod = [None] * n
    wires = {}
    for i, j in enumerate(p.tolist()):
        cod[j] = word[i]
        wires[Port(BOUNDARY, j)] = Port(BOUNDARY, i)
    return Diagram(signature, word, cod, (), wires, validate=False)


def relabel(d: Diagram, m: GraphMorphism) -> Diagram:
    """The image of a diagram under the prop functor induced by a graph morphism."""
    if d.signature != m.source:
        raise SignatureMismatch('diagram is not over the morphism source')
    nodes = [m.box_map[name] for name in d.nodes]
    return Diagram(m.target, map_word(m.sort_map, d.dom), map_word(m.sort_map, d.cod),
                   nodes, d._wires, validate=False)


# --- equality -------------------------------------------------------------


def _traverse(d: Diagram, roots):
    """Number nodes in breadth-first order, visiting ports in index order."""
    order = []
    seen = set()
    queue = deque()

    def visit(n):
        if n != BOUNDARY and n not in seen:
            seen.add(n)
            order.append(n)
            queue.append(n)

    for r in roots:
        visit(r)
    while queue:
        n = queue.popleft()
        box = d._box(n)
        for j in range(len(box.arity)):
            visit(d.producer(Port(n, j)).node)
        for j in range(len(box.coarity)):
            visit(d.consumer(Port(n, j)).node)
    return order


def _component_key(d: Diagram, order):
    local = {n: idx for idx, n in enumerate(order)}
    labels = tuple(d.nodes[n] for n in order)
    inputs = []
    for n in order:
        for j in range(len(d._box(n).arity)):
            p = d.producer(Port(n, j))
            inputs.append((local[p.node], p.index))
    return labels, tuple(inputs)


def canonical_form(d: Diagram) -> CanonicalForm:
    """Compute the canonical form of a diagram.

    Nodes connected to the boundary are numbered by a traversal that
    starts at the domain then codomain positions, which is unique because
    ports are ordered.  Each closed component (no path to the boundary)
    is numbered from every candidate root with the smallest generator
    label, keeping the least encoding; components are then sorted.
    """
    if d._canonical is not None:
        return d._canonical
    roots = [d.consumer(Port(BOUNDARY, i)).node for i in range(len(d.dom))]
    roots += [d.producer(Port(BOUNDARY, i)).node for i in range(len(d.cod))]
    order = _traverse(d, roots)
    remaining = set(range(len(d.nodes))) - set(order)
    components = []
    while remaining:
        component = _traverse(d, [min(remaining)])
        remaining.difference_update(component)
        label = min(d.nodes[n] for n in component)
        best = None
        for root in sorted(n for n in component if d.nodes[n] == label):
            candidate = _traverse(d, [root])
            key = _component_key(d, candidate)
            if best is None or key < best[0]:
                best = (key, candidate)
        components.append(best)
    components.sort(key=lambda x: x[0])
    for _, component in components:
        order.extend(component)

    position = {n: idx for idx, n in enumerate(order)}

    def renumber(port):
        return [BOUNDARY if port.node == BOUNDARY else position[port.node], port.index]

    payload = {
        'dom': d.dom,
        'cod': d.cod,
        'nodes': [d.nodes[n] for n in order],
        'wires': sorted(renumber(p) + renumber(c) for p, c in d.wires),
    }
    encoding = json.dumps(payload, separators=(',', ':'), ensure_ascii=False).encode('utf-8')
    d._canonical = CanonicalForm(tuple(order), encoding)
    return d._canonical


def equals(d: Diagram, e: Diagram) -> bool:
    """True iff d and e denote the same morphism of the free prop.

    :raise SignatureMismatch: If the signatures differ.
    """
    _check_signature(d, e)
    return canonical_form(d) == canonical_form(e)


# --- full-boundary diagrams over distributed alphabets --------------------


def slice_at(signature: MonoidalGraph, boundary, name) -> Diagram:
    """Embed a generator into an endomorphism of a boundary word.

    The generator wires are brought to the top by the permutation that
    keeps the relative order of both the chosen and the remaining wires,
    the generator is tensored with identities, and the inverse
    permutation restores the boundary.

    :param signature: The signature.
    :param boundary: The word, in which each sort of the generator
        boundary appears exactly once.
    :param name: The generator, with equal source and target.
    :return: The endomorphism diagram of boundary.
    """
    boundary = signature.check_word(boundary)
    box = signature.box(name)
    if box.arity != box.coarity:
        raise SourceTargetMismatch(f'generator {name} does not conserve its boundary')
    positions = []
    for s in box.arity:
        if boundary.count(s) != 1:
            raise BoundaryNotFull(f'sort {s} of generator {name} must appear once in {list(boundary)}')
        positions.append(boundary.index(s))
    n = len(boundary)
    rest = [i for i in range(n) if i not in positions]
    perm = np.empty(n, dtype=np.int64)
    perm[positions] = np.arange(len(positions))
    perm[rest] = np.arange(len(positions), n)
    p = permutation_diagram(signature, boundary, perm)
    middle = tensor(generator(signature, name), identity(signature, [boundary[i] for i in rest]))
    inverse = permutation_diagram(signature, p.cod, np.argsort(perm))
    return compose(compose(p, middle), inverse)


def build_N(a: DistributedAlphabet, name) -> Diagram:
    """The full-boundary diagram N(name) that embeds a generator.

    :raise UnknownGenerator: If name is not a generator of a.
    """
    try:
        return a._slices[name]
    except KeyError:
        d = slice_at(a.graph, a.boundary, name)
        a._slices[name] = d
        return d


def fold_N(a: DistributedAlphabet, names) -> Diagram:
    """The composite N(names[0]) then ... then N(names[-1])."""
    d = identity(a.graph, a.boundary)
    for name in names:
        d = compose(d, build_N(a, name))
    return d


def _check_full(a: DistributedAlphabet, d: Diagram):
    if d.signature != a.graph:
        raise SignatureMismatch('diagram is not over the distributed alphabet')
    if not d.is_endomorphism(a.boundary):
        raise BoundaryNotFull(f'expected {list(a.boundary)} -> {list(a.boundary)}, '
                              f'got {list(d.dom)} -> {list(d.cod)}')


def to_generator_sequence(a: DistributedAlphabet, d: Diagram) -> List[str]:
    """Slice a full-boundary diagram into a sequence of generators.

    Among nodes ready at the same time, the node whose smallest location
    is smallest goes first, then by generator name.

    :param a: The distributed alphabet.
    :param d: The diagram 1...k -> 1...k over a.
    :return: The generator names gamma_1, ..., gamma_m such that
        :func:`fold_N` of them equals d.
    :raise BoundaryNotFull: If d is not a full-boundary endomorphism.
    """
    _check_full(a, d)

    def key(n):
        return min(a.loc(d.nodes[n])), d.nodes[n], n

    order = nx.lexicographical_topological_sort(d.node_graph(), key=key)
    return [d.nodes[n] for n in order]
