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

"""Compare distributions."""

from tracelab.cli_util import add_output, format_bool, load_json, write
from tracelab.signature import Distribution, distribution_leq


NAME = 'dist'


def parser_config(p):
    """Compare two distributions in the distribution preorder."""
    sub = p.add_subparsers(dest='action', required=True)
    leq = sub.add_parser('leq', help='Print true iff the first distribution is below the second.')
    leq.add_argument('-i1', dest='input1', required=True, help='The first distribution file.')
    leq.add_argument('-i2', dest='input2', required=True, help='The second distribution file.')
    add_output(leq)
    return on_cmd


def on_cmd(args):
    d1 = Distribution.from_map(load_json(args.input1))
    d2 = Distribution.from_map(load_json(args.input2))
    write(args, format_bool(distribution_leq(d1, d2)))
    return 0
