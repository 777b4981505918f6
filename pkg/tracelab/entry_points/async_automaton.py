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

"""Asynchronous automata."""

from tracelab.automata import AsyncAutomaton, async_accepts_word, async_to_monoidal
from tracelab.cli_util import add_output, format_bool, load_json, parse_word, write, write_json


NAME = 'async'


def parser_config(p):
    """Run asynchronous automata and convert them to monoidal automata."""
    sub = p.add_subparsers(dest='action', required=True)
    accept = sub.add_parser('accept', help='Print true iff the automaton accepts a word.')
    accept.add_argument('--word', '-w', default='', help='The space separated action names.')
    to_sma = sub.add_parser('to-sma', help='Print the equivalent symmetric monoidal automaton.')
    for q in [accept, to_sma]:
        q.add_argument('--automaton', '-m', '-i', required=True, help='The async_automaton file.')
        add_output(q)
    return on_cmd


def on_cmd(args):
    a = AsyncAutomaton.from_map(load_json(args.automaton))
    if args.action == 'accept':
        write(args, format_bool(async_accepts_word(a, parse_word(args.word))))
    else:
        write_json(args, async_to_monoidal(a).to_map())
    return 0
