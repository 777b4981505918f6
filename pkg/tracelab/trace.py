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
The trace monoid of a distributed alphabet.

Traces are kept in Foata normal form: a sequence of steps, each a set of
pairwise independent actions sorted by name, where every action of a
step depends on some action of the previous step.  Two actions are
independent when their location sets are disjoint.
"""

from . import config
from .diagram import Diagram, equals, fold_N, resolve_graph, to_generator_sequence
from .errors import AlphabetMismatch, EnumerationOverflow, InvalidDocument
from .signature import DistributedAlphabet, IndependenceRelation, validate_distributed_alphabet
from typing import Iterator, List, Mapping, Sequence, Tuple
import logging


_log = logging.getLogger(__name__)


class Trace:
    """An element of the trace monoid, see :func:`quotient_word`.

    :param alphabet: The :class:`DistributedAlphabet`.
    :param steps: The Foata normal form.  Callers outside this module
        should construct traces with :func:`quotient_word`.
    """

    def __init__(self, alphabet: DistributedAlphabet, steps):
        self.alphabet = alphabet
        self.steps: Tuple[Tuple[str, ...], ...] = tuple(tuple(sorted(s)) for s in steps)

    def word(self) -> Tuple[str, ...]:
        """The canonical serialization: the steps concatenated."""
        return tuple(x for step in self.steps for x in step)

    @property
    def width(self) -> int:
        """The size of the largest step, 0 for the empty trace."""
        return max((len(s) for s in self.steps), default=0)

    def __len__(self):
        return sum(len(s) for s in self.steps)

    def __eq__(self, other):
        if not isinstance(other, Trace):
            return NotImplemented
        return self.alphabet == other.alphabet and self.steps == other.steps

    def __hash__(self):
        return hash((self.alphabet, self.steps))

    def __add__(self, other):
        return trace_concat(self, other)

    def __repr__(self):
        steps = ' '.join('{' + ','.join(s) + '}' for s in self.steps)
        return f'Trace({steps})'

    def to_map(self):
        alphabet = self.alphabet.name or self.alphabet.graph.to_map()
        return {'alphabet': alphabet, 'steps': [list(s) for s in self.steps]}

    @staticmethod
    def from_map(d, alphabet: DistributedAlphabet = None, graphs=None):
        """Construct a trace from its ``trace`` document.

        :raise InvalidDocument: If the steps are not in Foata normal form.
        """
        if not isinstance(d, Mapping) or 'steps' not in d:
            raise InvalidDocument('trace: expected an object with steps')
        if alphabet is None:
            alphabet = validate_distributed_alphabet(resolve_graph(d.get('alphabet'), graphs))
        steps = d['steps']
        t = quotient_word(alphabet, [x for step in steps for x in step])
        if Trace(alphabet, steps).steps != t.steps:
            raise InvalidDocument(f'trace steps {steps} are not in Foata normal form')
        return t


def independence(a: DistributedAlphabet) -> IndependenceRelation:
    """The independence relation of an alphabet: disjoint locations."""
    actions = a.actions
    pairs = [(x, y) for i, x in enumerate(actions) for y in actions[i + 1:] if a.independent(x, y)]
    return IndependenceRelation(actions, pairs)


def quotient_word(a: DistributedAlphabet, word: Sequence[str]) -> Trace:
    """Compute the trace of a word.

    :param a: The distributed alphabet.
    :param word: The sequence of action names.
    :return: The trace, in Foata normal form.
    :raise UnknownAction: If a letter is not an action of a.
    """
    height = {}
    steps: List[List[str]] = []
    for x in word:
        a.check_action(x)
        locations = a.loc(x)
        level = max(height.get(k, 0) for k in locations)
        if level == len(steps):
            steps.append([])
        steps[level].append(x)
        for k in locations:
            height[k] = level + 1
    return Trace(a, steps)


def _check_alphabet(t1: Trace, t2: Trace):
    if t1.alphabet != t2.alphabet:
        raise AlphabetMismatch('traces are over different alphabets')


def trace_equals(t1: Trace, t2: Trace) -> bool:
    _check_alphabet(t1, t2)
    return t1.steps == t2.steps


def trace_concat(t1: Trace, t2: Trace) -> Trace:
    _check_alphabet(t1, t2)
    return quotient_word(t1.alphabet, t1.word() + t2.word())


def trace_length(t: Trace) -> int:
    return len(t)


def project(t: Trace, location: int) -> Tuple[str, ...]:
    """The word of the actions of t that involve one location.

    Two traces over the same alphabet are equal iff all their
    projections are equal.
    """
    return tuple(x for x in t.word() if location in t.alphabet.loc(x))


def iter_serializations(t: Trace) -> Iterator[Tuple[str, ...]]:
    """Yield every word of a trace, in lexicographic order.

    The events of the canonical word form a partial order; the
    serializations are its linear extensions.  Ready events are tried
    in name order, and two ready events never share a name, so no word
    is produced twice.
    """
    word = t.word()
    n = len(word)
    a = t.alphabet
    pending = [0] * n
    successors = [[] for _ in range(n)]
    for j in range(n):
        for i in range(j):
            if not a.independent(word[i], word[j]):
                successors[i].append(j)
                pending[j] += 1
    prefix = []

    def extend(ready):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for i in sorted(ready, key=lambda e: word[e]):
            prefix.append(word[i])
            released = set()
            for j in successors[i]:
                pending[j] -= 1
                if not pending[j]:
                    released.add(j)
            yield from extend((ready - {i}) | released)
            for j in successors[i]:
                pending[j] += 1
            prefix.pop()

    yield from extend(frozenset(i for i in range(n) if not pending[i]))


def serializations(t: Trace, max_results=None) -> List[Tuple[str, ...]]:
    """List every word of a trace, in lexicographic order.

    :param t: The trace.
    :param max_results: The maximum number of words.  None uses
        the default configuration.
    :raise EnumerationOverflow: If the trace has more words than max_results.
    """
    if max_results is None:
        max_results = config.DEFAULT.max_results
    result = []
    for w in iter_serializations(t):
        if len(result) >= max_results:
            raise EnumerationOverflow(f'trace has more than {max_results} serializations')
        result.append(w)
    _log.debug('%d serializations for %r', len(result), t)
    return result


def trace_to_diagram(t: Trace) -> Diagram:
    """The full-boundary diagram of a trace."""
    return fold_N(t.alphabet, t.word())


def diagram_to_trace(a: DistributedAlphabet, d: Diagram) -> Trace:
    """The trace of a full-boundary diagram.

    :raise BoundaryNotFull: If d is not an endomorphism of 1...k.
    """
    return quotient_word(a, to_generator_sequence(a, d))


def diagrams_equal(a: DistributedAlphabet, d: Diagram, e: Diagram) -> bool:
    """Decide diagram equality, comparing traces for full-boundary diagrams."""
    if d.signature == a.graph and d.is_endomorphism(a.boundary) and e.is_endomorphism(a.boundary):
        return diagram_to_trace(a, d) == diagram_to_trace(a, e)
    return equals(d, e)
