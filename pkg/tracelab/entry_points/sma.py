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

"""Convert symmetric monoidal automata to asynchronous automata."""

from tracelab.automata import MonoidalAutomaton, monoidal_to_async
from tracelab.cli_util import add_output, graphs_for, load_graph, load_json, write_json


NAME = 'sma'


def parser_config(p):
    """Convert symmetric monoidal automata over distributed alphabets."""
    sub = p.add_subparsers(dest='action', required=True)
    to_async = sub.add_parser('to-async', help='Print the equivalent asynchronous automaton.')
    to_async.add_argument('--automaton', '-m', '-i', required=True, help='The monoidal_automaton file.')
    to_async.add_argument('--signature', '-s', help='The monoidal_graph file for a named alphabet.')
    add_output(to_async)
    return on_cmd


def on_cmd(args):
    graph = load_graph(args.signature) if args.signature else None
    m = MonoidalAutomaton.from_map(load_json(args.automaton), graphs=graphs_for(graph))
    write_json(args, monoidal_to_async(m).to_map())
    return 0
