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

"""Convert a distribution to its independence relation."""

from tracelab.cli_util import add_output, load_json, write_json
from tracelab.signature import Distribution, distribution_to_independence


NAME = 'dist2ind'


def parser_config(p):
    """Map a distribution to the independence of actions with disjoint locations."""
    p.add_argument('--input', '-i', required=True,
                   help='The distribution file {"components": [[...], ...]}.')
    add_output(p)
    return on_cmd


def on_cmd(args):
    d = Distribution.from_map(load_json(args.input))
    write_json(args, distribution_to_independence(d).to_map())
    return 0
