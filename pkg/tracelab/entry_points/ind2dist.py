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

"""Convert an independence relation to its distribution."""

from tracelab import config
from tracelab.cli_util import add_output, load_json, write_json
from tracelab.signature import IndependenceRelation, independence_to_distribution


NAME = 'ind2dist'


def parser_config(p):
    """Map an independence relation to the distribution of its dependency cliques."""
    p.add_argument('--input', '-i', required=True,
                   help='The independence file {"alphabet": [...], "pairs": [[a, b], ...]}.')
    add_output(p)
    return on_cmd


def on_cmd(args):
    ind = IndependenceRelation.from_map(load_json(args.input))
    cfg = getattr(args, 'cfg', config.DEFAULT)
    write_json(args, independence_to_distribution(ind, cfg.clique_brute_force_limit).to_map())
    return 0
