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
Symmetric monoidal automata and asynchronous automata.

A :class:`MonoidalAutomaton` assigns a finite state set to every sort and
a transition relation to every generator.  A diagram is evaluated as a
relation between state words by threading states along its wires.

An :class:`AsyncAutomaton` has one local state set per location of a
:class:`Distribution`; an action reads and rewrites only the states of
its own locations.  Over a distributed alphabet both kinds describe the
same machines, see :func:`async_to_monoidal` and :func:`monoidal_to_async`.

Both kinds accept with a finite set of final state words.
"""

from . import config
from .diagram import BOUNDARY, Diagram, Port, fold_N, resolve_graph
from .errors import AlphabetMismatch, BoundaryNotFull, InvalidDocument, NotDeterministic, \
    ProfileMismatch, UnknownAction, UnknownSort
from .signature import Distribution, MonoidalGraph, alphabet_to_distribution, distribution_to_alphabet, \
    require_list, str_list, validate_distributed_alphabet
from .trace import Trace, quotient_word
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Set, Tuple
import itertools
import logging
import networkx as nx


_log = logging.getLogger(__name__)
States = Tuple[str, ...]


@dataclass(frozen=True, order=True)
class StateWord:
    """A word of (sort, state) pairs."""
    sorts: Tuple[str, ...]
    states: States

    def __post_init__(self):
        object.__setattr__(self, 'sorts', tuple(self.sorts))
        object.__setattr__(self, 'states', tuple(self.states))
        if len(self.sorts) != len(self.states):
            raise ProfileMismatch(f'{len(self.sorts)} sorts but {len(self.states)} states')

    def __len__(self):
        return len(self.sorts)

    def __add__(self, other):
        return StateWord(self.sorts + other.sorts, self.states + other.states)

    def __repr__(self):
        pairs = ', '.join(f'{s}:{q}' for s, q in zip(self.sorts, self.states))
        return f'StateWord({pairs})'

    def to_map(self):
        return [[s, q] for s, q in zip(self.sorts, self.states)]

    @staticmethod
    def from_map(pairs):
        if not isinstance(pairs, (list, tuple)):
            raise InvalidDocument('state word must be a list of [sort, state] pairs')
        sorts, states = [], []
        for p in pairs:
            if not _is_pair(p):
                raise InvalidDocument(f'state word entry {p!r} is not a [sort, state] pair')
            sorts.append(p[0])
            states.append(p[1])
        return StateWord(sorts, states)


def _is_pair(p):
    return isinstance(p, (list, tuple)) and len(p) == 2 and all(isinstance(x, str) for x in p)


def _state_words_from_map(value):
    """Parse a final entry: one state word or a list of state words."""
    if isinstance(value, (list, tuple)) and value and not _is_pair(value[0]):
        return [StateWord.from_map(w) for w in value]
    return [StateWord.from_map(value)]


def _relation(pairs, what) -> Dict[States, FrozenSet[States]]:
    table = {}
    for p in require_list(pairs, what):
        if isinstance(p, Mapping):
            if 'in' not in p or 'out' not in p:
                raise InvalidDocument(f'{what}: transitions need in and out')
            src, dst = p['in'], p['out']
        elif isinstance(p, (list, tuple)) and len(p) == 2:
            src, dst = p
        else:
            raise InvalidDocument(f'{what}: transition {p!r} is not an (in, out) pair')
        table.setdefault(str_list(src, what), set()).add(str_list(dst, what))
    return {key: frozenset(value) for key, value in table.items()}


def _state_set(q, what) -> Tuple[str, ...]:
    # a bare string is not a state set
    if isinstance(q, str) or not isinstance(q, Iterable):
        raise InvalidDocument(f'{what}: expected a list of states, got {q!r}')
    q = tuple(q)
    if not all(isinstance(x, str) for x in q):
        raise InvalidDocument(f'{what}: states must be strings')
    return tuple(sorted(set(q)))


def _relation_to_map(table):
    return [{'in': list(src), 'out': list(dst)}
            for src in sorted(table) for dst in sorted(table[src])]


class MonoidalAutomaton:
    """A symmetric monoidal automaton over a monoidal graph.

    :param alphabet: The :class:`MonoidalGraph`.
    :param states: The mapping from each sort to its nonempty state set.
    :param transitions: The mapping from generator name to an iterable of
        (input states, output states) pairs, or of {'in', 'out'} dicts.
        Generators without an entry have the empty relation.
    :param initial: The initial :class:`StateWord`.
    :param final: The final :class:`StateWord` or an iterable of them.
    :raise InvalidDocument: If a state set is missing or empty, or a
        transition does not match its generator.
    :raise ProfileMismatch: If an initial or final state is not a state
        of its sort.
    """

    def __init__(self, alphabet: MonoidalGraph, states: Mapping[str, Iterable[str]], transitions,
                 initial: StateWord, final):
        self.alphabet = alphabet
        self.states: Dict[str, Tuple[str, ...]] = {}
        if not isinstance(states, Mapping):
            raise InvalidDocument('monoidal_automaton.states: expected an object')
        for s in alphabet.sorts:
            q = _state_set(states.get(s, ()), f'states of sort {s}')
            if not q:
                raise InvalidDocument(f'sort {s} needs a nonempty state set')
            self.states[s] = q
        for s in states:
            alphabet.sort_index(s)
        if not isinstance(transitions, Mapping):
            raise InvalidDocument('monoidal_automaton.transitions: expected an object')
        self._delta: Dict[str, Dict[States, FrozenSet[States]]] = {}
        for name, pairs in transitions.items():
            box = alphabet.box(name)
            table = _relation(pairs, f'generator {name}')
            for src, dst in ((src, dst) for src, outs in table.items() for dst in outs):
                if not self._in_states(box.arity, src) or not self._in_states(box.coarity, dst):
                    raise InvalidDocument(f'transition {list(src)} -> {list(dst)} does not match '
                                          f'{name}: {list(box.arity)} -> {list(box.coarity)}')
            self._delta[name] = table
        self.initial = self._check_state_word(initial)
        finals = [final] if isinstance(final, StateWord) else list(final)
        self.finals: FrozenSet[StateWord] = frozenset(self._check_state_word(f) for f in finals)

    def _in_states(self, sorts, states):
        return len(sorts) == len(states) and all(q in self.states[s] for s, q in zip(sorts, states))

    def _check_state_word(self, w: StateWord) -> StateWord:
        for s, q in zip(w.sorts, w.states):
            if s not in self.states:
                raise UnknownSort(f'unknown sort {s}')
            if q not in self.states[s]:
                raise ProfileMismatch(f'{q} is not a state of sort {s}')
        return w

    @property
    def final(self) -> StateWord:
        """The final state word of an automaton with exactly one."""
        if len(self.finals) != 1:
            raise ValueError(f'automaton has {len(self.finals)} final state words')
        return next(iter(self.finals))

    def delta(self, name, states) -> FrozenSet[States]:
        """The output state tuples of a generator on input states."""
        self.alphabet.box(name)
        return self._delta.get(name, {}).get(tuple(states), frozenset())

    def transitions(self, name):
        """The sorted (input, output) pairs of a generator."""
        table = self._delta.get(name, {})
        return [(src, dst) for src in sorted(table) for dst in sorted(table[src])]

    def __repr__(self):
        return f'MonoidalAutomaton({self.alphabet.name or "graph"}, states={self.states})'

    def to_map(self):
        finals = sorted(self.finals)
        return {
            'alphabet': self.alphabet.name or self.alphabet.to_map(),
            'states': {s: list(q) for s, q in self.states.items()},
            'transitions': {name: _relation_to_map(self._delta[name]) for name in sorted(self._delta)},
            'initial': self.initial.to_map(),
            'final': finals[0].to_map() if len(finals) == 1 else [f.to_map() for f in finals],
        }

    @staticmethod
    def from_map(d, alphabet: MonoidalGraph = None, graphs=None):
        """Construct an automaton from its ``monoidal_automaton`` document.

        The 'final' entry is one state word or a list of state words.
        """
        if not isinstance(d, Mapping):
            raise InvalidDocument('monoidal_automaton: expected an object')
        for key in ['states', 'transitions', 'initial', 'final']:
            if key not in d:
                raise InvalidDocument(f'monoidal_automaton: missing key {key}')
        if alphabet is None:
            alphabet = resolve_graph(d.get('alphabet'), graphs)
        return MonoidalAutomaton(alphabet, d['states'], d['transitions'],
                                 StateWord.from_map(d['initial']), _state_words_from_map(d['final']))


def _check_profile(word, s: StateWord, what):
    if tuple(word) != s.sorts:
        raise ProfileMismatch(f'{what}: state word sorts {list(s.sorts)} do not match {list(word)}')


def eval_diagram(A: MonoidalAutomaton, d: Diagram, s: StateWord) -> Set[StateWord]:
    """Evaluate a diagram as a relation applied to a state word.

    Nodes are processed in topological order.  The frontier is the list
    of live producer ports; each configuration assigns a state to every
    frontier wire.

    :param A: The automaton.
    :param d: The diagram over A.alphabet.
    :param s: The input state word, with sorts dom(d).
    :return: The set of output state words, with sorts cod(d).
    :raise ProfileMismatch: If s does not match dom(d).
    """
    if d.signature != A.alphabet:
        raise ProfileMismatch('diagram is not over the automaton alphabet')
    _check_profile(d.dom, s, 'eval')
    A._check_state_word(s)
    live = [Port(BOUNDARY, i) for i in range(len(d.dom))]
    configs = {s.states}
    for n in nx.lexicographical_topological_sort(d.node_graph()):
        if not configs:
            break
        name = d.nodes[n]
        box = d.signature.box(name)
        index = [live.index(d.producer(Port(n, j))) for j in range(len(box.arity))]
        rest = [i for i in range(len(live)) if i not in index]
        live = [live[i] for i in rest] + [Port(n, j) for j in range(len(box.coarity))]
        updated = set()
        for c in configs:
            kept = tuple(c[i] for i in rest)
            for out in A.delta(name, tuple(c[i] for i in index)):
                updated.add(kept + out)
        configs = updated
    if not configs:
        return set()
    output = [live.index(d.producer(Port(BOUNDARY, i))) for i in range(len(d.cod))]
    return {StateWord(d.cod, tuple(c[i] for i in output)) for c in configs}


def accepts(A: MonoidalAutomaton, d: Diagram) -> bool:
    """True iff some final state word is reachable from the initial one.

    :raise ProfileMismatch: If dom(d) does not match the initial sorts or
        cod(d) matches no final sorts.
    """
    _check_profile(d.dom, A.initial, 'initial')
    finals = [f for f in A.finals if f.sorts == tuple(d.cod)]
    if A.finals and not finals:
        raise ProfileMismatch(f'no final state word has sorts {list(d.cod)}')
    return not eval_diagram(A, d, A.initial).isdisjoint(finals)


def is_deterministic(A: MonoidalAutomaton) -> bool:
    return all(len(outs) <= 1 for table in A._delta.values() for outs in table.values())


def eval_deterministic(A: MonoidalAutomaton, d: Diagram, s: StateWord) -> Optional[StateWord]:
    """Evaluate a deterministic automaton as a partial function.

    :return: The unique output state word, or None if evaluation blocks.
    :raise NotDeterministic: If A is not deterministic.
    """
    if not is_deterministic(A):
        raise NotDeterministic('automaton has a transition with several outputs')
    result = eval_diagram(A, d, s)
    return next(iter(result)) if result else None


# --- asynchronous automata ------------------------------------------------


class AsyncAutomaton:
    """An asynchronous automaton over a distribution.

    :param distribution: The :class:`Distribution` with k locations.
    :param states: The k local state sets, location 1 first.
    :param transitions: The mapping from action to (input, output) pairs
        over the states of the action locations in increasing order.
    :param initial: The initial global state, a k-tuple.
    :param final: The iterable of final global states.
    """

    def __init__(self, distribution: Distribution, states, transitions, initial, final):
        self.distribution = distribution
        if isinstance(states, str) or not isinstance(states, Iterable):
            raise InvalidDocument('async_automaton.states: expected a list of state sets')
        self.states = tuple(_state_set(q, f'states of location {idx + 1}')
                            for idx, q in enumerate(states))
        if len(self.states) != len(distribution):
            raise InvalidDocument(f'{len(distribution)} locations need {len(distribution)} state sets')
        for idx, q in enumerate(self.states):
            if not q:
                raise InvalidDocument(f'location {idx + 1} needs a nonempty state set')
        if not isinstance(transitions, Mapping):
            raise InvalidDocument('async_automaton.transitions: expected an object')
        self._delta: Dict[str, Dict[States, FrozenSet[States]]] = {}
        for action, pairs in transitions.items():
            locations = self.locations(action)
            table = _relation(pairs, f'action {action}')
            for src, dst in ((src, dst) for src, outs in table.items() for dst in outs):
                if not self._local(locations, src) or not self._local(locations, dst):
                    raise InvalidDocument(f'transition {list(src)} -> {list(dst)} of {action} '
                                          f'does not match locations {list(locations)}')
            self._delta[action] = table
        self.initial = self._check_global(initial)
        self.final = frozenset(self._check_global(f) for f in final)

    def locations(self, action) -> Tuple[int, ...]:
        """The sorted locations of an action.

        :raise UnknownAction: If the action is not in the distribution.
        """
        return tuple(sorted(self.distribution.loc(action)))

    def _local(self, locations, states):
        return len(locations) == len(states) and all(q in self.states[k - 1] for k, q in zip(locations, states))

    def _check_global(self, q) -> States:
        q = tuple(q)
        if not self._local(range(1, len(self.states) + 1), q):
            raise ProfileMismatch(f'{list(q)} is not a global state')
        return q

    def transitions(self, action):
        table = self._delta.get(action, {})
        return [(src, dst) for src in sorted(table) for dst in sorted(table[src])]

    def __repr__(self):
        return f'AsyncAutomaton({self.distribution}, initial={self.initial})'

    def to_map(self):
        return {
            'distribution': self.distribution.to_map(),
            'states': [list(q) for q in self.states],
            'transitions': {action: _relation_to_map(self._delta[action]) for action in sorted(self._delta)},
            'initial': list(self.initial),
            'final': [list(f) for f in sorted(self.final)],
        }

    @staticmethod
    def from_map(d):
        if not isinstance(d, Mapping):
            raise InvalidDocument('async_automaton: expected an object')
        for key in ['distribution', 'states', 'transitions', 'initial', 'final']:
            if key not in d:
                raise InvalidDocument(f'async_automaton: missing key {key}')
        distribution = d['distribution']
        if isinstance(distribution, (list, tuple)):
            distribution = {'components': distribution}
        states = require_list(d['states'], 'async_automaton.states')
        initial = str_list(d['initial'], 'async_automaton.initial')
        final = [str_list(f, 'async_automaton.final')
                 for f in require_list(d['final'], 'async_automaton.final')]
        return AsyncAutomaton(Distribution.from_map(distribution), states, d['transitions'], initial, final)


def async_step(A: AsyncAutomaton, q, action) -> Set[States]:
    """The global successors of q on an action.

    :raise UnknownAction: If the action is not in the distribution.
    """
    locations = A.locations(action)
    q = tuple(q)
    result = set()
    for out in A._delta.get(action, {}).get(tuple(q[k - 1] for k in locations), ()):
        successor = list(q)
        for k, state in zip(locations, out):
            successor[k - 1] = state
        result.add(tuple(successor))
    return result


def async_run(A: AsyncAutomaton, word) -> Set[States]:
    """The set of global states reachable from the initial state by a word."""
    word = list(word)
    for action in word:
        A.locations(action)
    current = {A.initial}
    for action in word:
        current = set().union(*(async_step(A, q, action) for q in current))
    return current


def async_accepts_word(A: AsyncAutomaton, word) -> bool:
    return not async_run(A, word).isdisjoint(A.final)


def async_accepts_trace(A: AsyncAutomaton, t: Trace) -> bool:
    """Accept a trace by running one of its serializations.

    :raise AlphabetMismatch: If the trace alphabet does not match A.
    """
    if alphabet_to_distribution(t.alphabet) != A.distribution:
        raise AlphabetMismatch('trace alphabet does not match the automaton distribution')
    return async_accepts_word(A, t.word())


def async_to_monoidal(A: AsyncAutomaton) -> MonoidalAutomaton:
    """The monoidal automaton over the distributed alphabet of A.

    Location i becomes sort 'i' with the same states, each action keeps
    its local relation, and every final global state becomes a final
    state word.
    """
    a = distribution_to_alphabet(A.distribution)
    states = {str(k): A.states[k - 1] for k in range(1, len(A.states) + 1)}
    transitions = {action: A.transitions(action) for action in A._delta}
    return MonoidalAutomaton(a.graph, states, transitions,
                             StateWord(a.boundary, A.initial),
                             [StateWord(a.boundary, f) for f in A.final])


def monoidal_to_async(B: MonoidalAutomaton) -> AsyncAutomaton:
    """The asynchronous automaton of a monoidal automaton over a distributed alphabet.

    :raise NotDistributedAlphabet: If B.alphabet is not a distributed alphabet.
    :raise BoundaryNotFull: If the initial or a final state word does not
        have the sorts 1...k.
    """
    a = validate_distributed_alphabet(B.alphabet)
    for w in [B.initial, *B.finals]:
        if w.sorts != a.boundary:
            raise BoundaryNotFull(f'state word {w} is not over the full boundary {list(a.boundary)}')
    states = [B.states[s] for s in a.boundary]
    transitions = {name: B.transitions(name) for name in B._delta}
    return AsyncAutomaton(alphabet_to_distribution(a), states, transitions,
                          B.initial.states, [f.states for f in B.finals])


def is_trace_closed(A, max_length=None) -> bool:
    """Check that acceptance is constant on each trace.

    Every word up to max_length is grouped by its trace and accepted
    by A, which is an :class:`AsyncAutomaton` or a
    :class:`MonoidalAutomaton` over a distributed alphabet.

    :param A: The automaton.
    :param max_length: The longest word checked.  None uses the
        configured max_word_length.
    :return: True if no trace has both accepted and rejected words.
    """
    if max_length is None:
        max_length = config.DEFAULT.max_word_length
    if isinstance(A, AsyncAutomaton):
        a = distribution_to_alphabet(A.distribution)

        def accept(w):
            return async_accepts_word(A, w)
    else:
        a = validate_distributed_alphabet(A.alphabet)

        def accept(w):
            return accepts(A, fold_N(a, w))

    verdict = {}
    for length in range(max_length + 1):
        for w in itertools.product(a.actions, repeat=length):
            t = quotient_word(a, w)
            v = accept(w)
            if verdict.setdefault(t, v) != v:
                _log.info('acceptance differs within trace %r at word %s', t, ' '.join(w))
                return False
    return True
