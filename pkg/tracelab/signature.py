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
Monoidal graphs, graph morphisms, distributions and independence relations.

A monoidal graph is a multi-input, multi-output signature: a list of sorts
and a list of boxes, each box with a source (arity) and target (coarity)
word over the sorts.  Words are tuples of sort names.

Distributions and independence relations are the two classical ways of
describing which actions of a concurrent system may commute.  They are
related by a Galois insertion:  :func:`independence_to_distribution`
followed by :func:`distribution_to_independence` is the identity.
"""

from .errors import InvalidDocument, UnknownSort, UnknownGenerator, UnknownAction, \
    AlphabetMismatch, IncompatibleBoxImage, EmptyComponent, EmptyDistribution, SortsNotOrdinal, \
    SortsOutOfOrder, SortRepeated, SourceTargetMismatch, EmptyBoundary
from . import config
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Sequence, Tuple
import itertools
import logging
import networkx as nx


_log = logging.getLogger(__name__)
Word = Tuple[str, ...]


def require_keys(d, keys, what):
    if not isinstance(d, Mapping):
        raise InvalidDocument(f'{what}: expected an object, got {type(d).__name__}')
    missing = [k for k in keys if k not in d]
    if missing:
        raise InvalidDocument(f'{what}: missing keys {missing}')


def require_list(x, what):
    if not isinstance(x, (list, tuple)):
        raise InvalidDocument(f'{what}: expected a list, got {type(x).__name__}')
    return x


def str_list(x, what):
    if not isinstance(x, (list, tuple)) or not all(isinstance(s, str) for s in x):
        raise InvalidDocument(f'{what}: expected a list of strings')
    return tuple(x)


def require_int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidDocument(f'{what}: expected an integer, got {x!r}')
    return x


@dataclass(frozen=True)
class Box:
    """A generator of a monoidal graph."""
    name: str
    arity: Word
    coarity: Word

    def __post_init__(self):
        object.__setattr__(self, 'arity', tuple(self.arity))
        object.__setattr__(self, 'coarity', tuple(self.coarity))

    def to_map(self):
        return {'name': self.name, 'arity': list(self.arity), 'coarity': list(self.coarity)}


@dataclass(frozen=True, eq=False)
class MonoidalGraph:
    """A finite monoidal graph.

    :param sorts: The ordered sort names, pairwise distinct.
    :param boxes: The generators, with pairwise distinct names.
    :param name: The optional name used by documents that refer to
        this graph.  The name does not take part in equality.
    """
    sorts: Word
    boxes: Tuple[Box, ...]
    name: str = field(default='', compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'sorts', tuple(self.sorts))
        object.__setattr__(self, 'boxes', tuple(self.boxes))
        if len(set(self.sorts)) != len(self.sorts):
            raise InvalidDocument(f'duplicate sort names in {list(self.sorts)}')
        sort_index = {s: idx for idx, s in enumerate(self.sorts)}
        box_map = {}
        for b in self.boxes:
            if b.name in box_map:
                raise InvalidDocument(f'duplicate generator name {b.name}')
            for s in b.arity + b.coarity:
                if s not in sort_index:
                    raise UnknownSort(f'generator {b.name} uses undeclared sort {s}')
            box_map[b.name] = b
        object.__setattr__(self, '_sort_index', sort_index)
        object.__setattr__(self, '_box_map', box_map)

    def __eq__(self, other):
        if not isinstance(other, MonoidalGraph):
            return NotImplemented
        return self.sorts == other.sorts and frozenset(self.boxes) == frozenset(other.boxes)

    def __hash__(self):
        return hash((self.sorts, frozenset(self.boxes)))

    def __contains__(self, name):
        return name in self._box_map

    def box(self, name) -> Box:
        """Get a generator by name.

        :raise UnknownGenerator: If the graph has no such generator.
        """
        try:
            return self._box_map[name]
        except KeyError:
            raise UnknownGenerator(f'unknown generator {name}')

    @property
    def box_names(self):
        return tuple(b.name for b in self.boxes)

    def sort_index(self, sort) -> int:
        try:
            return self._sort_index[sort]
        except KeyError:
            raise UnknownSort(f'unknown sort {sort}')

    def check_word(self, word) -> Word:
        """Check that every letter of a word is a declared sort.

        :return: The word as a tuple.
        :raise UnknownSort: On the first undeclared sort.
        """
        word = tuple(word)
        for s in word:
            self.sort_index(s)
        return word

    def to_map(self):
        d = {
            'sorts': list(self.sorts),
            'boxes': [b.to_map() for b in self.boxes],
        }
        if self.name:
            d['name'] = self.name
        return d

    @staticmethod
    def from_map(d, name=None):
        """Construct a monoidal graph from its ``monoidal_graph`` document.

        :param d: The dict with keys sorts, boxes and optionally name.
        :param name: The name override.
        """
        require_keys(d, ['sorts', 'boxes'], 'monoidal_graph')
        sorts = str_list(d['sorts'], 'monoidal_graph.sorts')
        boxes = []
        for b in require_list(d['boxes'], 'monoidal_graph.boxes'):
            require_keys(b, ['name', 'arity', 'coarity'], 'monoidal_graph.boxes')
            if not isinstance(b['name'], str):
                raise InvalidDocument(f'monoidal_graph.boxes: name {b["name"]!r} is not a string')
            boxes.append(Box(b['name'],
                             str_list(b['arity'], f'box {b["name"]} arity'),
                             str_list(b['coarity'], f'box {b["name"]} coarity')))
        return MonoidalGraph(sorts, boxes, name=name or d.get('name', ''))


def map_word(sort_map: Mapping[str, str], word) -> Word:
    """Apply a sort map letterwise."""
    try:
        return tuple(sort_map[s] for s in word)
    except KeyError as ex:
        raise UnknownSort(f'sort map undefined on {ex.args[0]}')


@dataclass(frozen=True, eq=False)
class GraphMorphism:
    """A morphism of monoidal graphs, see :func:`validate_graph_morphism`."""
    source: MonoidalGraph
    target: MonoidalGraph
    sort_map: Dict[str, str]
    box_map: Dict[str, str]

    def __eq__(self, other):
        if not isinstance(other, GraphMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and dict(self.sort_map) == dict(other.sort_map)
                and dict(self.box_map) == dict(other.box_map))

    @staticmethod
    def identity(g: MonoidalGraph) -> 'GraphMorphism':
        return GraphMorphism(g, g, {s: s for s in g.sorts}, {b.name: b.name for b in g.boxes})


def validate_graph_morphism(m: GraphMorphism) -> GraphMorphism:
    """Check that a morphism preserves the boundary of every box.

    :param m: The candidate morphism.
    :return: m.
    :raise UnknownSort: If the sort map is not total or leaves the target sorts.
    :raise UnknownGenerator: If the box map is not total or leaves the target boxes.
    :raise IncompatibleBoxImage: If a box image has the wrong boundary.
    """
    for s in m.source.sorts:
        if s not in m.sort_map:
            raise UnknownSort(f'sort map undefined on {s}')
        m.target.sort_index(m.sort_map[s])
    for b in m.source.boxes:
        if b.name not in m.box_map:
            raise UnknownGenerator(f'box map undefined on {b.name}')
        image = m.target.box(m.box_map[b.name])
        if map_word(m.sort_map, b.arity) != image.arity or map_word(m.sort_map, b.coarity) != image.coarity:
            raise IncompatibleBoxImage(
                f'box {b.name}: {list(b.arity)} -> {list(b.coarity)} cannot map to '
                f'{image.name}: {list(image.arity)} -> {list(image.coarity)}')
    return m


def compose_morphisms(m1: GraphMorphism, m2: GraphMorphism) -> GraphMorphism:
    """The composite morphism m1 then m2."""
    if m1.target != m2.source:
        raise AlphabetMismatch('morphisms are not composable')
    return GraphMorphism(m1.source, m2.target,
                         {s: m2.sort_map[t] for s, t in m1.sort_map.items()},
                         {b: m2.box_map[c] for b, c in m1.box_map.items()})


# --- distributed alphabets ------------------------------------------------


class DistributedAlphabet:
    """A monoidal graph satisfying the distributed alphabet conditions.

    Construct with :func:`validate_distributed_alphabet`.  Sorts are the
    strings '1', ..., 'k'; locations are reported as the integers 1..k.
    """

    def __init__(self, graph: MonoidalGraph):
        self.graph = graph
        self._loc = {b.name: frozenset(int(s) for s in b.arity) for b in graph.boxes}
        self._slices = {}  # generator name -> N(generator) diagram

    def __eq__(self, other):
        if not isinstance(other, DistributedAlphabet):
            return NotImplemented
        return self.graph == other.graph

    def __hash__(self):
        return hash(self.graph)

    def __repr__(self):
        boxes = ', '.join(f'{b.name}:{".".join(b.arity)}' for b in self.graph.boxes)
        return f'DistributedAlphabet({boxes})'

    @property
    def name(self):
        return self.graph.name

    @property
    def k(self) -> int:
        """The number of locations."""
        return len(self.graph.sorts)

    @property
    def boundary(self) -> Word:
        """The full boundary word 1...k."""
        return self.graph.sorts

    @property
    def actions(self) -> Tuple[str, ...]:
        return self.graph.box_names

    def __contains__(self, action):
        return action in self.graph

    def loc(self, action) -> FrozenSet[int]:
        """The nonempty set of locations of an action.

        :raise UnknownGenerator: If the action is not a generator.
        """
        try:
            return self._loc[action]
        except KeyError:
            raise UnknownGenerator(f'unknown generator {action}')

    def independent(self, a, b) -> bool:
        """True when a and b are distinct and have disjoint locations."""
        return a != b and not (self.loc(a) & self.loc(b))

    def check_action(self, action):
        if action not in self._loc:
            raise UnknownAction(f'unknown action {action}')
        return action


def validate_distributed_alphabet(g: MonoidalGraph) -> DistributedAlphabet:
    """Validate the distributed alphabet conditions.

    * the sorts are the finite ordinal 1 < 2 < ... < k with k >= 1,
    * sorts appear in increasing order in each source and target,
    * each sort appears at most once in each source and target,
    * each source is nonempty and equal to its target.

    :param g: The monoidal graph.
    :return: The :class:`DistributedAlphabet` wrapper.
    :raise NotDistributedAlphabet: The subclass names the violated condition.
    """
    expect = tuple(str(i) for i in range(1, len(g.sorts) + 1))
    if not g.sorts or g.sorts != expect:
        raise SortsNotOrdinal(f'sorts {list(g.sorts)} are not the ordinal 1..k with k >= 1')
    for b in g.boxes:
        if b.arity != b.coarity:
            raise SourceTargetMismatch(
                f'generator {b.name}: source {list(b.arity)} differs from target {list(b.coarity)}')
        if not len(b.arity):
            raise EmptyBoundary(f'generator {b.name} has an empty boundary')
        if len(set(b.arity)) != len(b.arity):
            raise SortRepeated(f'generator {b.name} repeats a sort in {list(b.arity)}')
        indices = [int(s) for s in b.arity]
        if indices != sorted(indices):
            raise SortsOutOfOrder(f'generator {b.name} lists sorts out of order: {list(b.arity)}')
    return DistributedAlphabet(g)


def loc(a: DistributedAlphabet, action) -> FrozenSet[int]:
    """The locations of a generator, see :meth:`DistributedAlphabet.loc`."""
    return a.loc(action)


# --- independence relations and distributions -----------------------------


class IndependenceRelation:
    """A symmetric, irreflexive relation on a finite alphabet.

    :param alphabet: The actions.
    :param pairs: The independent pairs, each a 2-element iterable.
        Symmetry is structural: pairs are stored unordered.
    """

    def __init__(self, alphabet: Iterable[str], pairs: Iterable[Iterable[str]] = ()):
        self.alphabet = frozenset(alphabet)
        p = set()
        for pair in pairs:
            pair = tuple(pair)
            if len(pair) != 2:
                raise InvalidDocument(f'independence pair {list(pair)} must have two actions')
            if pair[0] == pair[1]:
                raise InvalidDocument(f'independence must be irreflexive: {list(pair)}')
            for x in pair:
                if x not in self.alphabet:
                    raise UnknownAction(f'pair {list(pair)} uses unknown action {x}')
            p.add(frozenset(pair))
        self.pairs = frozenset(p)

    def __eq__(self, other):
        if not isinstance(other, IndependenceRelation):
            return NotImplemented
        return self.alphabet == other.alphabet and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.alphabet, self.pairs))

    def __le__(self, other):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch('independence relations over different alphabets')
        return self.pairs <= other.pairs

    def __repr__(self):
        return f'IndependenceRelation({sorted(self.alphabet)}, {self.sorted_pairs()})'

    def independent(self, a, b) -> bool:
        return frozenset((a, b)) in self.pairs

    def sorted_pairs(self):
        return sorted(sorted(p) for p in self.pairs)

    def to_map(self):
        return {'alphabet': sorted(self.alphabet), 'pairs': self.sorted_pairs()}

    @staticmethod
    def from_map(d):
        require_keys(d, ['alphabet', 'pairs'], 'independence')
        alphabet = str_list(d['alphabet'], 'independence.alphabet')
        if len(set(alphabet)) != len(alphabet):
            raise InvalidDocument('independence.alphabet repeats an action')
        pairs = require_list(d['pairs'], 'independence.pairs')
        return IndependenceRelation(alphabet, [str_list(p, 'independence.pairs') for p in pairs])


def dependence(ind: IndependenceRelation):
    """The dependence relation as a set of unordered pairs of distinct actions."""
    return frozenset(frozenset(p) for p in itertools.combinations(sorted(ind.alphabet), 2)
                     if frozenset(p) not in ind.pairs)


class Distribution:
    """A distribution of an alphabet into locations.

    :param components: The tuple (Sigma_1, ..., Sigma_k) of nonempty action sets.
        Location i (1-based) holds components[i - 1].
    """

    def __init__(self, components: Iterable[Iterable[str]]):
        self.components = tuple(frozenset(c) for c in components)
        for idx, c in enumerate(self.components):
            if not c:
                raise EmptyComponent(f'location {idx + 1} is empty')
        self.alphabet = frozenset().union(*self.components)
        self._loc = {}
        for idx, c in enumerate(self.components):
            for action in c:
                self._loc.setdefault(action, set()).add(idx + 1)
        self._loc = {key: frozenset(value) for key, value in self._loc.items()}

    def __eq__(self, other):
        if not isinstance(other, Distribution):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __len__(self):
        return len(self.components)

    def __repr__(self):
        return f'Distribution({[sorted(c) for c in self.components]})'

    def loc(self, action) -> FrozenSet[int]:
        try:
            return self._loc[action]
        except KeyError:
            raise UnknownAction(f'unknown action {action}')

    def to_map(self):
        return {'components': [sorted(c) for c in self.components]}

    @staticmethod
    def from_map(d):
        require_keys(d, ['components'], 'distribution')
        components = require_list(d['components'], 'distribution.components')
        return Distribution([str_list(c, 'distribution.components') for c in components])


def _maximal_cliques_brute_force(vertices, edges):
    n = len(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    adjacent = [1 << i for i in range(n)]
    for a, b in edges:
        i, j = index[a], index[b]
        adjacent[i] |= 1 << j
        adjacent[j] |= 1 << i
    cliques = []
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        if any(mask & ~adjacent[i] for i in members):
            continue
        if any(not (mask >> u & 1) and (mask & adjacent[u]) == mask for u in range(n)):
            continue  # extendable, not maximal
        cliques.append([vertices[i] for i in members])
    return cliques


def maximal_cliques(vertices: Sequence[str], edges, brute_force_limit=None):
    """Find the maximal cliques of an undirected graph without self loops.

    :param vertices: The vertices.
    :param edges: The iterable of 2-element edges.
    :param brute_force_limit: The largest vertex count solved by subset
        enumeration.  None uses the configured clique_brute_force_limit.
        Larger graphs use Bron-Kerbosch with pivoting.
    :return: The cliques, each a sorted list, in lexicographic order.
    """
    vertices = sorted(vertices)
    edges = [tuple(e) for e in edges if len(set(e)) == 2]
    if brute_force_limit is None:
        brute_force_limit = config.DEFAULT.clique_brute_force_limit
    if len(vertices) <= brute_force_limit:
        cliques = _maximal_cliques_brute_force(vertices, edges)
    else:
        g = nx.Graph()
        g.add_nodes_from(vertices)
        g.add_edges_from(edges)
        cliques = list(nx.find_cliques(g))
    return sorted(sorted(c) for c in cliques)


def independence_to_distribution(ind: IndependenceRelation, brute_force_limit=None) -> Distribution:
    """Map an independence relation to the distribution of its dependency cliques.

    :param ind: The independence relation.
    :param brute_force_limit: See :func:`maximal_cliques`.
    :return: The distribution whose components are the maximal cliques of
        the dependency graph, ordered lexicographically by their sorted
        members.  The empty alphabet gives the empty distribution.
    """
    cliques = maximal_cliques(ind.alphabet, dependence(ind), brute_force_limit)
    _log.debug('independence_to_distribution: %d actions, %d locations', len(ind.alphabet), len(cliques))
    return Distribution(cliques)


def distribution_to_independence(d: Distribution) -> IndependenceRelation:
    """Two distinct actions are independent iff their locations are disjoint."""
    pairs = [(a, b) for a, b in itertools.combinations(sorted(d.alphabet), 2)
             if not (d.loc(a) & d.loc(b))]
    return IndependenceRelation(d.alphabet, pairs)


def distribution_leq(d1: Distribution, d2: Distribution) -> bool:
    """The preorder on distributions of the same alphabet.

    d1 <= d2 iff every pair of distinct actions that shares a location in
    d2 also shares a location in d1.

    :raise AlphabetMismatch: If the distributions cover different alphabets.
    """
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatch(f'{sorted(d1.alphabet)} != {sorted(d2.alphabet)}')
    for a, b in itertools.combinations(sorted(d1.alphabet), 2):
        if d2.loc(a) & d2.loc(b) and not d1.loc(a) & d1.loc(b):
            return False
    return True


def distribution_equiv(d1: Distribution, d2: Distribution) -> bool:
    """Equality in the preorder: d1 <= d2 and d2 <= d1."""
    return distribution_leq(d1, d2) and distribution_leq(d2, d1)


def distribution_to_alphabet(d: Distribution, name='') -> DistributedAlphabet:
    """The monoidal distributed alphabet of a distribution.

    Sorts are the locations '1'..'k'; action a becomes the generator
    a: loc(a) -> loc(a) with its locations in increasing order.
    Generators are listed in sorted action order.

    :raise EmptyDistribution: If d has no locations.  The empty alphabet
        is a valid distribution but a distributed alphabet needs k >= 1.
    """
    if not len(d):
        raise EmptyDistribution('the empty distribution has no distributed alphabet: '
                                'sorts must be 1..k with k >= 1')
    sorts = [str(i) for i in range(1, len(d) + 1)]
    boxes = []
    for action in sorted(d.alphabet):
        w = tuple(str(i) for i in sorted(d.loc(action)))
        boxes.append(Box(action, w, w))
    return validate_distributed_alphabet(MonoidalGraph(sorts, boxes, name=name))


def alphabet_to_distribution(a: DistributedAlphabet) -> Distribution:
    """The distribution of a monoidal distributed alphabet.

    :raise EmptyComponent: If some sort is used by no generator.
    """
    components = [[] for _ in range(a.k)]
    for action in a.actions:
        for i in a.loc(action):
            components[i - 1].append(action)
    return Distribution(components)
