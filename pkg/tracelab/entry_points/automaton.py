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

"""Symmetric monoidal automata."""

from tracelab.automata import MonoidalAutomaton, StateWord, accepts, eval_diagram, is_deterministic
from tracelab.cli_util import add_output, format_bool, graphs_for, load_diagram, load_graph, load_json, \
    write, write_json
from tracelab.errors import InvalidDocument


NAME = 'automaton'


def parse_state_word(text):
    """Parse 'sort:state sort:state ...' into a :class:`StateWord`."""
    sorts, states = [], []
    for item in text.split():
        sort, sep, state = item.partition(':')
        if not sep:
            raise InvalidDocument(f'state word entry {item} must be sort:state')
        sorts.append(sort)
        states.append(state)
    return StateWord(sorts, states)


def parser_config(p):
    """Evaluate diagrams with symmetric monoidal automata."""
    sub = p.add_subparsers(dest='action', required=True)
    accept = sub.add_parser('accept', help='Print true iff the automaton accepts a diagram.')
    evaluate = sub.add_parser('eval', help='Print the output state words of a diagram.')
    deterministic = sub.add_parser('deterministic', help='Print true iff the automaton is deterministic.')
    for q in [accept, evaluate]:
        q.add_argument('--diagram', '-d', required=True, help='The diagram file.')
    evaluate.add_argument('--state', '-q',
                          help='The input state word as "sort:state ...".  Defaults to the initial state word.')
    for q in [accept, evaluate, deterministic]:
        q.add_argument('--automaton', '-m', '-i', required=True, help='The monoidal_automaton file.')
        q.add_argument('--signature', '-s', help='The monoidal_graph file for a named alphabet.')
        add_output(q)
    return on_cmd


def on_cmd(args):
    graph = load_graph(args.signature) if args.signature else None
    m = MonoidalAutomaton.from_map(load_json(args.automaton), graphs=graphs_for(graph))
    if args.action == 'deterministic':
        write(args, format_bool(is_deterministic(m)))
        return 0
    d = load_diagram(args.diagram, m.alphabet)
    if args.action == 'accept':
        write(args, format_bool(accepts(m, d)))
    else:
        s = parse_state_word(args.state) if args.state else m.initial
        write_json(args, [w.to_map() for w in sorted(eval_diagram(m, d, s))])
    return 0
