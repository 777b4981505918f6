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

"""Check a monoidal graph against the distributed alphabet conditions."""

from tracelab.cli_util import add_output, load_alphabet, write_json
from tracelab.signature import alphabet_to_distribution


NAME = 'alphabet'


def parser_config(p):
    """Validate a distributed alphabet."""
    sub = p.add_subparsers(dest='action', required=True)
    check = sub.add_parser('check', help='Validate and print the alphabet distribution.')
    check.add_argument('--alphabet', '-a', '-i', required=True,
                       help='The monoidal_graph file or built-in example name.')
    add_output(check)
    return on_cmd


def on_cmd(args):
    a = load_alphabet(args.alphabet)
    write_json(args, {
        'locations': a.k,
        'generators': len(a.actions),
        'distribution': alphabet_to_distribution(a).to_map(),
    })
    return 0
