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

"""Diagram equality, slicing and rendering."""

from tracelab import dot
from tracelab.cli_util import add_output, format_word, load_alphabet, load_diagram, load_graph, write, write_json
from tracelab.diagram import equals, to_generator_sequence
from tracelab.signature import validate_distributed_alphabet


NAME = 'diagram'


def parser_config(p):
    """Compare, slice and render string diagrams."""
    sub = p.add_subparsers(dest='action', required=True)
    eq = sub.add_parser('eq', help='Print "equal" iff two diagrams denote the same morphism.')
    eq.add_argument('-e', dest='other', required=True, help='The second diagram file.')
    sl = sub.add_parser('slice', help='Print a generator sequence of a full-boundary diagram.')
    sl.add_argument('--alphabet', '-a', help='The distributed alphabet file or example name.')
    render = sub.add_parser('render', help='Render a diagram.')
    render.add_argument('--format', choices=['dot', 'json'], default='dot',
                        help='The output format.')
    for q in [eq, sl, render]:
        q.add_argument('--diagram', '-d', required=True, help='The diagram file.')
        q.add_argument('--signature', '-s',
                       help='The monoidal_graph file that named signatures refer to.')
        add_output(q)
    return on_cmd


def on_cmd(args):
    graph = load_graph(args.signature) if args.signature else None
    alphabet = None
    if getattr(args, 'alphabet', None):
        alphabet = load_alphabet(args.alphabet)
        graph = alphabet.graph
    d = load_diagram(args.diagram, graph)
    if args.action == 'eq':
        e = load_diagram(args.other, graph)
        write(args, 'equal' if equals(d, e) else 'not equal')
    elif args.action == 'slice':
        if alphabet is None:
            alphabet = validate_distributed_alphabet(d.signature)
        write(args, format_word(to_generator_sequence(alphabet, d)))
    elif args.format == 'json':
        write_json(args, d.to_map())
    else:
        write(args, dot.render(d))
    return 0
