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
Regular monoidal grammars.

A grammar is a morphism of monoidal graphs phi: M -> Gamma with an
initial and a final word over the sorts of M.  The boxes of M are the
productions, each labeled by the generator of Gamma it produces.  Its
language is the set of diagrams over Gamma that are images of diagrams
initial -> final over M.
"""

from .automata import MonoidalAutomaton, StateWord, accepts
from .diagram import Diagram, compose, generator, identity, tensor
from .errors import InvalidDocument, ProfileMismatch, SignatureMismatch, UnsupportedBoundaryLanguage
from .signature import Box, GraphMorphism, MonoidalGraph, Word, map_word, validate_graph_morphism
from typing import Mapping
import logging


_log = logging.getLogger(__name__)
DEAD_STATE = '_dead'


class Grammar:
    """A regular monoidal grammar.

    :param morphism: The :class:`GraphMorphism` M -> Gamma.
    :param initial: The initial word over the sorts of M.
    :param final: The final word over the sorts of M.
    """

    def __init__(self, morphism: GraphMorphism, initial, final):
        self.morphism = validate_graph_morphism(morphism)
        self.initial: Word = morphism.source.check_word(initial)
        self.final: Word = morphism.source.check_word(final)

    @property
    def productions(self) -> MonoidalGraph:
        return self.morphism.source

    @property
    def alphabet(self) -> MonoidalGraph:
        return self.morphism.target

    def __repr__(self):
        return f'Grammar({list(self.initial)} -> {list(self.final)}, {len(self.productions.boxes)} productions)'

    def to_map(self):
        m = self.morphism
        return {
            'M': m.source.to_map(),
            'Gamma': m.target.to_map(),
            'sortMap': dict(sorted(m.sort_map.items())),
            'boxMap': dict(sorted(m.box_map.items())),
            'initial': list(self.initial),
            'final': list(self.final),
        }

    @staticmethod
    def from_map(d):
        """Construct a grammar from its ``grammar`` document.

        :raise UnsupportedBoundaryLanguage: If initial or final is a list
            of words rather than a single word.
        """
        if not isinstance(d, Mapping):
            raise InvalidDocument('grammar: expected an object')
        for key in ['M', 'Gamma', 'sortMap', 'boxMap', 'initial', 'final']:
            if key not in d:
                raise InvalidDocument(f'grammar: missing key {key}')
        for key in ['initial', 'final']:
            value = d[key]
            if not isinstance(value, list):
                raise UnsupportedBoundaryLanguage(f'grammar.{key} must be a single word')
            if any(not isinstance(x, str) for x in value):
                raise UnsupportedBoundaryLanguage(f'grammar.{key} must be a single word, not a word list')
        m = GraphMorphism(MonoidalGraph.from_map(d['M']), MonoidalGraph.from_map(d['Gamma']),
                          _name_map(d['sortMap'], 'grammar.sortMap'), _name_map(d['boxMap'], 'grammar.boxMap'))
        return Grammar(m, d['initial'], d['final'])


def _name_map(value, what):
    if not isinstance(value, Mapping) or not all(isinstance(v, str) for v in value.values()):
        raise InvalidDocument(f'{what}: expected an object of names')
    return dict(value)


def grammar_to_automaton(g: Grammar) -> MonoidalAutomaton:
    """The transition automaton of a grammar.

    The states of a sort c of Gamma are the sorts of M over c, with a
    dead state when there are none.  Each production b of M over the
    generator gamma adds the transition arity(b) -> coarity(b) to gamma.
    """
    m = g.morphism
    states = {c: [] for c in m.target.sorts}
    for x in m.source.sorts:
        states[m.sort_map[x]].append(x)
    dead = DEAD_STATE
    while dead in m.source.sorts:
        dead = '_' + dead
    for c, q in states.items():
        if not q:
            _log.debug('sort %s has no productions, add dead state', c)
            q.append(dead)
    transitions = {}
    for b in m.source.boxes:
        transitions.setdefault(m.box_map[b.name], []).append((b.arity, b.coarity))
    return MonoidalAutomaton(m.target, states, transitions,
                             StateWord(map_word(m.sort_map, g.initial), g.initial),
                             StateWord(map_word(m.sort_map, g.final), g.final))


def membership(g: Grammar, d: Diagram) -> bool:
    """True iff a diagram belongs to the language of a grammar.

    Diagrams whose boundary does not match the images of the initial
    and final words are not members.

    :raise SignatureMismatch: If d is not over the grammar alphabet.
    """
    if d.signature != g.alphabet:
        raise SignatureMismatch('diagram is not over the grammar alphabet')
    try:
        return accepts(grammar_to_automaton(g), d)
    except ProfileMismatch:
        return False


def permutation_grammar(n: int, alphabet: MonoidalGraph = None) -> Grammar:
    """The grammar of the permutations of n wires.

    :param n: The number of wires.
    :param alphabet: The single-sort alphabet.  None uses a single sort
        '*' and no boxes.  Boxes of the alphabet are never produced.
    :return: The grammar with one sort, no productions and i = f = n.
    """
    if alphabet is None:
        alphabet = MonoidalGraph(['*'], [], name='permutations')
    if len(alphabet.sorts) != 1:
        raise ValueError(f'permutation alphabet needs one sort, got {list(alphabet.sorts)}')
    sort = alphabet.sorts[0]
    m = MonoidalGraph([sort], [], name='permutation_productions')
    return Grammar(GraphMorphism(m, alphabet, {sort: sort}, {}), [sort] * n, [sort] * n)


CIRCUIT = MonoidalGraph(['wire'], [
    Box('split', ['wire'], ['wire', 'wire']),
    Box('capacitor', ['wire'], ['wire']),
    Box('source', ['wire'], ['wire']),
    Box('join', ['wire', 'wire'], ['wire']),
], name='circuit')


def circuit_grammar() -> Grammar:
    """Open circuits of capacitors in series with a single voltage source."""
    m = MonoidalGraph(['S', 'A', 'B', 'C'], [
        Box('s', ['S'], ['A', 'B']),
        Box('c', ['A'], ['A']),
        Box('v', ['B'], ['C']),
        Box("s'", ['A', 'C'], ['S']),
    ], name='circuit_productions')
    morphism = GraphMorphism(m, CIRCUIT, {x: 'wire' for x in m.sorts},
                             {'s': 'split', 'c': 'capacitor', 'v': 'source', "s'": 'join'})
    return Grammar(morphism, ['S'], ['S'])


def series_circuit(k: int) -> Diagram:
    """The circuit with k capacitors in series with one source."""
    chain = identity(CIRCUIT, ['wire'])
    for _ in range(k):
        chain = compose(chain, generator(CIRCUIT, 'capacitor'))
    body = tensor(chain, generator(CIRCUIT, 'source'))
    return compose(compose(generator(CIRCUIT, 'split'), body), generator(CIRCUIT, 'join'))
