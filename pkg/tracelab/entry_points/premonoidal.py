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

"""Premonoidal runtime diagrams of words."""

from tracelab import config
from tracelab.cli_util import add_output, format_word, load_alphabet, load_json, parse_word, write, write_json
from tracelab.diagram import Diagram
from tracelab.premonoidal import PremonoidalDiagram, erase_runtime, runtime_graph, \
    serialization_preimage, word_to_premonoidal


NAME = 'premonoidal'


def parser_config(p):
    """Lift words to runtime diagrams, erase the runtime and list serializations."""
    sub = p.add_subparsers(dest='action', required=True)
    lift = sub.add_parser('lift', help='Print the runtime diagram of a word.')
    lift.add_argument('--word', '-w', default='', help='The space separated action names.')
    erase = sub.add_parser('erase', help='Print a runtime diagram with its runtime wire erased.')
    preimage = sub.add_parser('preimage', help='Print every word whose runtime diagram erases to a diagram.')
    for q in [erase, preimage]:
        q.add_argument('--diagram', '-d', required=True, help='The diagram file.')
    for q in [lift, erase, preimage]:
        q.add_argument('--alphabet', '-a', required=True,
                       help='The distributed alphabet file or built-in example name.')
        add_output(q)
    return on_cmd


def on_cmd(args):
    a = load_alphabet(args.alphabet)
    if args.action == 'lift':
        write_json(args, word_to_premonoidal(a, parse_word(args.word)).to_map())
    elif args.action == 'erase':
        pd = PremonoidalDiagram.from_map(load_json(args.diagram), runtime_graph(a.graph))
        write_json(args, erase_runtime(pd).to_map())
    else:
        cfg = getattr(args, 'cfg', config.DEFAULT)
        d = Diagram.from_map(load_json(args.diagram), signature=a.graph)
        write(args, '\n'.join(format_word(w) for w in serialization_preimage(a, d, cfg.max_results)))
    return 0
