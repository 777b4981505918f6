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

"""Regular monoidal grammars."""

from tracelab.cli_util import add_output, format_bool, load_diagram, load_json, write, write_json
from tracelab.grammar import Grammar, grammar_to_automaton, membership


NAME = 'grammar'


def parser_config(p):
    """Validate grammars and decide membership in their languages."""
    sub = p.add_subparsers(dest='action', required=True)
    check = sub.add_parser('check', help='Validate a grammar and print its transition automaton.')
    member = sub.add_parser('member', help='Print true iff a diagram is in the grammar language.')
    member.add_argument('--diagram', '-d', required=True, help='The diagram file over Gamma.')
    for q in [check, member]:
        q.add_argument('--grammar', '-g', '-i', required=True, help='The grammar file.')
        add_output(q)
    return on_cmd


def on_cmd(args):
    g = Grammar.from_map(load_json(args.grammar))
    if args.action == 'check':
        write_json(args, grammar_to_automaton(g).to_map())
    else:
        d = load_diagram(args.diagram, g.alphabet)
        write(args, format_bool(membership(g, d)))
    return 0
