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

"""Named fixtures: small alphabets, automata and graphs."""

from .automata import AsyncAutomaton, MonoidalAutomaton, StateWord
from .signature import Box, Distribution, DistributedAlphabet, MonoidalGraph, validate_distributed_alphabet


def greek_alphabet() -> DistributedAlphabet:
    """Five actions over three locations.

    alpha at 1, gamma at 1 and 2, beta at 3, delta at 2 and 3, and
    epsilon at all three.  The words α γ β δ ε and β α γ δ ε are two
    serializations of the same trace.
    """
    locations = {'α': '1', 'β': '3', 'γ': '12', 'δ': '23', 'ε': '123'}
    boxes = [Box(name, list(loc), list(loc)) for name, loc in locations.items()]
    return validate_distributed_alphabet(MonoidalGraph(['1', '2', '3'], boxes, name='greek'))


def abc_alphabet() -> DistributedAlphabet:
    """a at location 1, b at location 2, c synchronizing both."""
    return validate_distributed_alphabet(MonoidalGraph(['1', '2'], [
        Box('a', ['1'], ['1']),
        Box('b', ['2'], ['2']),
        Box('c', ['1', '2'], ['1', '2']),
    ], name='abc'))


def abc_automaton() -> MonoidalAutomaton:
    """a moves p0 to p1, b moves q0 to q1 and c resets (p1, q1) to (p0, q0)."""
    a = abc_alphabet()
    start = StateWord(['1', '2'], ['p0', 'q0'])
    return MonoidalAutomaton(a.graph, {'1': ['p0', 'p1'], '2': ['q0', 'q1']}, {
        'a': [(['p0'], ['p1'])],
        'b': [(['q0'], ['q1'])],
        'c': [(['p1', 'q1'], ['p0', 'q0'])],
    }, start, start)


def abc_async_automaton() -> AsyncAutomaton:
    """The asynchronous form of :func:`abc_automaton`."""
    return AsyncAutomaton(Distribution([['a', 'c'], ['b', 'c']]), [['p0', 'p1'], ['q0', 'q1']], {
        'a': [(['p0'], ['p1'])],
        'b': [(['q0'], ['q1'])],
        'c': [(['p1', 'q1'], ['p0', 'q0'])],
    }, ['p0', 'q0'], [['p0', 'q0']])


def two_box_graph() -> MonoidalGraph:
    """gamma: A.B -> A.B.A and gamma': A -> B.B."""
    return MonoidalGraph(['A', 'B'], [
        Box('γ', ['A', 'B'], ['A', 'B', 'A']),
        Box("γ'", ['A'], ['B', 'B']),
    ], name='two_box')


EXAMPLES = {
    'greek': greek_alphabet,
    'abc': abc_alphabet,
}
"""The alphabets available by name on the command line."""
