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
Premonoidal diagrams as diagrams with a runtime wire.

The runtime graph of a monoidal graph adds a fresh sort R and threads it
through every generator.  A premonoidal diagram is a diagram over the
runtime graph with R exactly once in its domain and codomain, always at
position 0.  Since every generator consumes and produces R, the nodes of
a premonoidal diagram are totally ordered and generators never
interchange.
"""

from .diagram import Diagram, Port, compose, equals, identity, slice_at, symmetry, tensor
from .errors import BoundaryMismatch, ReservedSortName, SignatureMismatch
from .signature import Box, DistributedAlphabet, MonoidalGraph
from .trace import diagram_to_trace, serializations
from dataclasses import dataclass
from typing import List, Tuple
import logging


_log = logging.getLogger(__name__)
RUNTIME_SORT = '_R'


@dataclass(frozen=True)
class RuntimeGraph:
    """A monoidal graph with its runtime graph.

    :param underlying: The original graph.
    :param graph: The runtime graph: sorts R followed by the original sorts,
        and a generator R.w -> R.w' for each generator w -> w'.
    """
    underlying: MonoidalGraph
    graph: MonoidalGraph


def runtime_graph(g: MonoidalGraph) -> RuntimeGraph:
    """Build the runtime graph of a monoidal graph.

    :raise ReservedSortName: If g already declares the runtime sort.
    """
    if RUNTIME_SORT in g.sorts:
        raise ReservedSortName(f'sort name {RUNTIME_SORT} is reserved for the runtime')
    boxes = [Box(b.name, (RUNTIME_SORT, ) + b.arity, (RUNTIME_SORT, ) + b.coarity) for b in g.boxes]
    name = f'{g.name}{RUNTIME_SORT}' if g.name else ''
    return RuntimeGraph(g, MonoidalGraph((RUNTIME_SORT, ) + g.sorts, boxes, name=name))


def is_premonoidal(d: Diagram) -> bool:
    """True iff R occurs exactly once in dom and cod, at position 0."""
    return (RUNTIME_SORT in d.signature.sorts
            and d.dom[:1] == (RUNTIME_SORT, ) and d.dom.count(RUNTIME_SORT) == 1
            and d.cod[:1] == (RUNTIME_SORT, ) and d.cod.count(RUNTIME_SORT) == 1)


class PremonoidalDiagram:
    """A morphism of the free premonoidal category.

    :param runtime: The :class:`RuntimeGraph`.
    :param diagram: The diagram over runtime.graph.
    :raise SignatureMismatch: If diagram is not over the runtime graph.
    :raise BoundaryMismatch: If R is not alone at position 0 of dom and cod.
    """

    def __init__(self, runtime: RuntimeGraph, diagram: Diagram):
        if diagram.signature != runtime.graph:
            raise SignatureMismatch('diagram is not over the runtime graph')
        if not is_premonoidal(diagram):
            raise BoundaryMismatch(f'runtime sort must lead dom and cod once: '
                                  f'{list(diagram.dom)} -> {list(diagram.cod)}')
        self.runtime = runtime
        self.diagram = diagram

    @property
    def dom(self) -> Tuple[str, ...]:
        """The domain without the runtime sort."""
        return self.diagram.dom[1:]

    @property
    def cod(self) -> Tuple[str, ...]:
        return self.diagram.cod[1:]

    def __eq__(self, other):
        if not isinstance(other, PremonoidalDiagram):
            return NotImplemented
        return self.runtime == other.runtime and equals(self.diagram, other.diagram)

    def __hash__(self):
        return hash(self.diagram)

    def __rshift__(self, other):
        return premonoidal_compose(self, other)

    def __repr__(self):
        return f'PremonoidalDiagram({list(self.dom)} -> {list(self.cod)}, nodes={list(self.diagram.nodes)})'

    def to_map(self):
        return self.diagram.to_map()

    @staticmethod
    def from_map(d, runtime: RuntimeGraph):
        return PremonoidalDiagram(runtime, Diagram.from_map(d, signature=runtime.graph))


def premonoidal_identity(runtime: RuntimeGraph, word) -> PremonoidalDiagram:
    return PremonoidalDiagram(runtime, identity(runtime.graph, (RUNTIME_SORT, ) + _user_word(runtime, word)))


def _user_word(runtime: RuntimeGraph, word) -> Tuple[str, ...]:
    word = (word, ) if isinstance(word, str) else tuple(word)
    if RUNTIME_SORT in word:
        raise ReservedSortName(f'cannot whisker with the runtime sort {RUNTIME_SORT}')
    return runtime.underlying.check_word(word)


def word_to_premonoidal(a: DistributedAlphabet, word) -> PremonoidalDiagram:
    """The runtime diagram of a word: one runtime-threaded slice per letter.

    :raise UnknownAction: If a letter is not an action of a.
    """
    runtime = runtime_graph(a.graph)
    boundary = (RUNTIME_SORT, ) + a.boundary
    d = identity(runtime.graph, boundary)
    for x in word:
        a.check_action(x)
        d = compose(d, slice_at(runtime.graph, boundary, x))
    return PremonoidalDiagram(runtime, d)


def erase_runtime(pd: PremonoidalDiagram) -> Diagram:
    """Delete the runtime wire, giving a diagram over the underlying graph."""
    d = pd.diagram

    def shift(port):
        return Port(port.node, port.index - 1)

    wires = {shift(c): shift(p) for c, p in d.wires_by_consumer().items()
             if d.consumer_sort(c) != RUNTIME_SORT}
    return Diagram(pd.runtime.underlying, d.dom[1:], d.cod[1:], d.nodes, wires, validate=False)


def premonoidal_compose(p: PremonoidalDiagram, q: PremonoidalDiagram) -> PremonoidalDiagram:
    """Sequential composition, p then q."""
    if p.runtime != q.runtime:
        raise SignatureMismatch('premonoidal diagrams over different runtime graphs')
    return PremonoidalDiagram(p.runtime, compose(p.diagram, q.diagram))


def whisker_left(word, pd: PremonoidalDiagram) -> PremonoidalDiagram:
    """Add identity wires for word between the runtime and pd.

    :param word: A sort or a word of sorts of the underlying graph.
    :param pd: The premonoidal diagram R.w -> R.w'.
    :return: The premonoidal diagram R.word.w -> R.word.w'.
    :raise ReservedSortName: If word contains the runtime sort.
    """
    g = pd.runtime.graph
    word = _user_word(pd.runtime, word)
    r = (RUNTIME_SORT, )
    before = tensor(symmetry(g, r, word), identity(g, pd.dom))
    after = tensor(symmetry(g, word, r), identity(g, pd.cod))
    d = compose(compose(before, tensor(identity(g, word), pd.diagram)), after)
    return PremonoidalDiagram(pd.runtime, d)


def whisker_right(pd: PremonoidalDiagram, word) -> PremonoidalDiagram:
    """Add identity wires for word below pd.

    :raise ReservedSortName: If word contains the runtime sort.
    """
    word = _user_word(pd.runtime, word)
    return PremonoidalDiagram(pd.runtime, tensor(pd.diagram, identity(pd.runtime.graph, word)))


def premonoidal_symmetry(runtime: RuntimeGraph, w1, w2) -> PremonoidalDiagram:
    """The central symmetry R.w1.w2 -> R.w2.w1."""
    w1 = _user_word(runtime, w1)
    w2 = _user_word(runtime, w2)
    g = runtime.graph
    return PremonoidalDiagram(runtime, tensor(identity(g, (RUNTIME_SORT, )), symmetry(g, w1, w2)))


def serialization_preimage(a: DistributedAlphabet, d: Diagram, max_results=None) -> List[Tuple[str, ...]]:
    """The words whose runtime diagrams erase to d, in lexicographic order.

    :raise BoundaryNotFull: If d is not an endomorphism of 1...k.
    :raise EnumerationOverflow: If there are more than max_results words.
    """
    return serializations(diagram_to_trace(a, d), max_results)
