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

"""
Export a diagram to graphviz DOT.

Generators are record nodes with one field per input and output port,
the domain and codomain positions are point nodes held in one rank each,
and every wire is an edge labeled by its sort.  Nodes are emitted in
canonical order, so equal diagrams render to identical text.

Render with, for example::

    tracelab diagram render -d diagram.json -o diagram.gv
    dot -Tpng -O diagram.gv
"""

from .diagram import BOUNDARY, Diagram, Port, canonical_form
import re


_RECORD_SPECIAL = re.compile(r'([{}|<>"\\ ])')


def _escape_record(text):
    return _RECORD_SPECIAL.sub(r'\\\1', text)


def _escape(text):
    return text.replace('\\', '\\\\').replace('"', '\\"')


def render(d: Diagram, name='diagram') -> str:
    """Render a diagram as a DOT digraph.

    :param d: The diagram.
    :param name: The graph name.
    :return: The DOT text, ending with a newline.
    """
    order = canonical_form(d).order
    position = {n: idx for idx, n in enumerate(order)}
    lines = [f'digraph "{_escape(name)}" {{',
             '\trankdir=LR;',
             '\tnode [fontname="Helvetica"];',
             '\tedge [fontname="Helvetica", fontsize=10];']

    def rank_group(prefix, word, rank):
        if not word:
            return
        lines.append(f'\t{{ rank={rank};')
        for i in range(len(word)):
            lines.append(f'\t\t{prefix}{i} [shape=point, xlabel="{_escape(word[i])}"];')
        lines.append('\t}')

    rank_group('dom', d.dom, 'source')
    rank_group('cod', d.cod, 'sink')
    for idx, n in enumerate(order):
        box = d.signature.box(d.nodes[n])
        fields = []
        if box.arity:
            fields.append('{' + '|'.join(f'<i{j}>' for j in range(len(box.arity))) + '}')
        fields.append(_escape_record(box.name))
        if box.coarity:
            fields.append('{' + '|'.join(f'<o{j}>' for j in range(len(box.coarity))) + '}')
        lines.append(f'\tn{idx} [shape=record, label="{{{"|".join(fields)}}}"];')

    def endpoint(port: Port, side):
        if port.node == BOUNDARY:
            return f'{"dom" if side == "o" else "cod"}{port.index}'
        return f'n{position[port.node]}:{side}{port.index}'

    for p, c in sorted(d.wires, key=lambda w: (_key(w[0], position), _key(w[1], position))):
        lines.append(f'\t{endpoint(p, "o")} -> {endpoint(c, "i")} [label="{_escape(d.producer_sort(p))}"];')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def _key(port, position):
    if port.node == BOUNDARY:
        return -1, port.index
    return position[port.node], port.index
