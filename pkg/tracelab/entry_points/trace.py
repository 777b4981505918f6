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

"""Trace normal forms, equality and serializations."""

from tracelab import config
from tracelab.cli_util import add_output, format_word, load_alphabet, parse_word, write, write_json
from tracelab.trace import quotient_word, serializations


NAME = 'trace'


def parser_config(p):
    """Compute with traces of words over a distributed alphabet."""
    sub = p.add_subparsers(dest='action', required=True)
    nf = sub.add_parser('nf', help='Print the Foata normal form of a word.')
    eq = sub.add_parser('eq', help='Print "equal" iff two words have the same trace.')
    serialize = sub.add_parser('serialize', help='Print every word of the trace of a word.')
    for q in [nf, eq, serialize]:
        q.add_argument('--alphabet', '-a', required=True,
                       help='The distributed alphabet file or built-in example name.')
        add_output(q)
    for q in [nf, serialize]:
        q.add_argument('--word', '-w', default='',
                       help='The space separated action names.')
    eq.add_argument('-w1', dest='word1', default='', help='The first word.')
    eq.add_argument('-w2', dest='word2', default='', help='The second word.')
    return on_cmd


def on_cmd(args):
    a = load_alphabet(args.alphabet)
    if args.action == 'nf':
        write_json(args, quotient_word(a, parse_word(args.word)).to_map())
    elif args.action == 'eq':
        t1 = quotient_word(a, parse_word(args.word1))
        t2 = quotient_word(a, parse_word(args.word2))
        write(args, 'equal' if t1 == t2 else 'not equal')
    else:
        cfg = getattr(args, 'cfg', config.DEFAULT)
        words = serializations(quotient_word(a, parse_word(args.word)), cfg.max_results)
        write(args, '\n'.join(format_word(w) for w in words))
    return 0
