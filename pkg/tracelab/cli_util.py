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

"""Shared argument and file handling for the command line entry points."""

from . import json_plus
from .diagram import Diagram
from .examples import EXAMPLES
from .signature import DistributedAlphabet, MonoidalGraph, validate_distributed_alphabet
import os
import sys


load_json = json_plus.load_path


def load_graph(ref) -> MonoidalGraph:
    """Load a monoidal graph from a file path or a built-in example name."""
    if ref in EXAMPLES and not os.path.exists(ref):
        return EXAMPLES[ref]().graph
    d = load_json(ref)
    stem = os.path.splitext(os.path.basename(ref))[0]
    name = d.get('name') if isinstance(d, dict) else None
    return MonoidalGraph.from_map(d, name=name or stem)


def load_alphabet(ref) -> DistributedAlphabet:
    return validate_distributed_alphabet(load_graph(ref))


def graphs_for(*graphs):
    """The name to graph mapping used to resolve signature references."""
    result = {}
    for g in graphs:
        if g is not None and g.name:
            result[g.name] = g
    for name, fn in EXAMPLES.items():
        result.setdefault(name, fn().graph)
    return result


def load_diagram(path, graph: MonoidalGraph = None) -> Diagram:
    """Load a diagram, resolving its signature by name or embedded graph."""
    return Diagram.from_map(load_json(path), graphs=graphs_for(graph))


def parse_word(text):
    """Split an inline word into action names.  None is the empty word."""
    if text is None:
        return ()
    return tuple(text.split())


def format_word(word):
    return ' '.join(word)


def format_bool(value):
    return 'true' if value else 'false'


def write(args, text):
    """Write command output to the -o path or stdout."""
    if not text.endswith('\n'):
        text += '\n'
    path = getattr(args, 'output', None)
    if path:
        with open(path, 'wt', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def write_json(args, obj):
    write(args, json_plus.dumps(obj))


def add_output(p):
    p.add_argument('--output', '-o',
                   help='The output file path.  Defaults to stdout.')
