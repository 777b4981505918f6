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
Test the command line entry points.
"""

from contextlib import redirect_stderr, redirect_stdout
import io
import json
import os
import tempfile
import unittest
from tracelab import json_plus
from tracelab.__main__ import run
from tracelab.diagram import fold_N, identity
from tracelab.examples import abc_alphabet


PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


def _data(name):
    return os.path.join(PATH, name)


class TestCli(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)

    def _write(self, name, obj):
        path = os.path.join(self._tmp.name, name)
        with open(path, 'wt', encoding='utf-8') as f:
            if isinstance(obj, str):
                f.write(obj)
            else:
                json_plus.dump(obj, f)
        return path

    def _run(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            rc = run(list(argv))
        return rc, stdout.getvalue(), stderr.getvalue()

    def _ok(self, *argv):
        rc, out, err = self._run(*argv)
        self.assertEqual(0, rc, err)
        return out

    def test_help(self):
        rc, out, _ = self._run('help')
        self.assertEqual(0, rc)
        self.assertIn('ind2dist', out)

    def test_ind2dist(self):
        out = self._ok('ind2dist', '-i', _data('independence.json'))
        self.assertEqual({'components': [['a', 'b'], ['b', 'c']]}, json.loads(out))

    def test_dist2ind(self):
        path = self._write('d.json', {'components': [['a', 'b'], ['b', 'c']]})
        out = self._ok('dist2ind', '-i', path)
        self.assertEqual({'alphabet': ['a', 'b', 'c'], 'pairs': [['a', 'c']]}, json.loads(out))

    def test_dist_leq(self):
        d1 = self._write('d1.json', {'components': [['a', 'b'], ['b', 'c']]})
        d2 = self._write('d2.json', {'components': [['a', 'b', 'c']]})
        self.assertEqual('false\n', self._ok('dist', 'leq', '-i1', d1, '-i2', d2))
        self.assertEqual('true\n', self._ok('dist', 'leq', '-i1', d2, '-i2', d1))

    def test_alphabet_check(self):
        out = json.loads(self._ok('alphabet', 'check', '-a', _data('greek.json')))
        self.assertEqual(3, out['locations'])
        self.assertEqual(5, out['generators'])

    def test_trace(self):
        self.assertEqual('equal\n', self._ok('trace', 'eq', '-a', 'greek', '-w1', 'α γ β δ ε', '-w2', 'β α γ δ ε'))
        self.assertEqual('not equal\n', self._ok('trace', 'eq', '-a', 'abc', '-w1', 'a c', '-w2', 'c a'))
        out = json.loads(self._ok('trace', 'nf', '-a', 'abc', '-w', 'b a c'))
        self.assertEqual({'alphabet': 'abc', 'steps': [['a', 'b'], ['c']]}, out)
        self.assertEqual('a b\nb a\n', self._ok('trace', 'serialize', '-a', 'abc', '-w', 'b a'))

    def test_output_file(self):
        path = os.path.join(self._tmp.name, 'out.txt')
        self.assertEqual('', self._ok('trace', 'serialize', '-a', 'abc', '-w', 'b a', '-o', path))
        with open(path, 'rt', encoding='utf-8') as f:
            self.assertEqual('a b\nb a\n', f.read())

    def test_diagram(self):
        a = abc_alphabet()
        empty = self._write('empty.json', identity(a.graph, []).to_map())
        self.assertTrue(self._ok('diagram', 'render', '-d', empty).startswith('digraph'))
        ab = self._write('ab.json', fold_N(a, 'ab').to_map())
        ba = self._write('ba.json', fold_N(a, 'ba').to_map())
        ac = self._write('ac.json', fold_N(a, 'ac').to_map())
        self.assertEqual('equal\n', self._ok('diagram', 'eq', '-d', ab, '-e', ba))
        self.assertEqual('not equal\n', self._ok('diagram', 'eq', '-d', ab, '-e', ac))
        self.assertEqual('a b\n', self._ok('diagram', 'slice', '-d', ba, '-a', 'abc'))
        out = json.loads(self._ok('diagram', 'render', '-d', ab, '--format', 'json'))
        self.assertEqual(fold_N(a, 'ab').to_map(), out)

    def test_grammar(self):
        grammar = _data('circuit_grammar.json')
        self.assertEqual('true\n', self._ok('grammar', 'member', '-g', grammar, '-d', _data('series_circuit.json')))
        out = json.loads(self._ok('grammar', 'check', '-g', grammar))
        self.assertEqual(['A', 'B', 'C', 'S'], out['states']['wire'])

    def test_automaton(self):
        a = abc_alphabet()
        m = _data('abc_automaton.json')
        abc = self._write('abc.json', fold_N(a, 'abc').to_map())
        ab = self._write('ab.json', fold_N(a, 'ab').to_map())
        self.assertEqual('true\n', self._ok('automaton', 'accept', '-m', m, '-d', abc))
        self.assertEqual('false\n', self._ok('automaton', 'accept', '-m', m, '-d', ab))
        self.assertEqual('true\n', self._ok('automaton', 'deterministic', '-m', m))
        out = json.loads(self._ok('automaton', 'eval', '-m', m, '-d', ab))
        self.assertEqual([[['1', 'p1'], ['2', 'q1']]], out)
        out = json.loads(self._ok('automaton', 'eval', '-m', m, '-d', ab, '-q', '1:p1 2:q0'))
        self.assertEqual([], out)

    def test_async(self):
        m = _data('abc_async.json')
        self.assertEqual('true\n', self._ok('async', 'accept', '-m', m, '-w', 'b a c'))
        self.assertEqual('false\n', self._ok('async', 'accept', '-m', m, '-w', 'a'))
        sma = json.loads(self._ok('async', 'to-sma', '-m', m))
        path = self._write('sma.json', sma)
        out = json.loads(self._ok('sma', 'to-async', '-m', path))
        self.assertEqual(['p0', 'q0'], out['initial'])
        self.assertEqual([['a', 'c'], ['b', 'c']], out['distribution']['components'])

    def test_premonoidal(self):
        lifted = json.loads(self._ok('premonoidal', 'lift', '-a', 'abc', '-w', 'a b'))
        path = self._write('lifted.json', lifted)
        erased = self._write('erased.json', json.loads(self._ok('premonoidal', 'erase', '-a', 'abc', '-d', path)))
        self.assertEqual('a b\nb a\n', self._ok('premonoidal', 'preimage', '-a', 'abc', '-d', erased))

    def test_domain_error(self):
        rc, out, err = self._run('trace', 'nf', '-a', 'abc', '-w', 'a z')
        self.assertEqual(1, rc)
        self.assertEqual('', out)
        self.assertIn('error: UnknownAction', err)

    def test_overflow(self):
        rc, _, err = self._run('--max-results', '1', 'trace', 'serialize', '-a', 'abc', '-w', 'a b')
        self.assertEqual(1, rc)
        self.assertIn('error: EnumerationOverflow', err)

    def test_invalid_documents(self):
        rc, _, err = self._run('ind2dist', '-i', os.path.join(self._tmp.name, 'missing.json'))
        self.assertEqual(2, rc)
        self.assertIn('error: InvalidDocument', err)
        bad = self._write('bad.json', '{"alphabet": [')
        rc, _, err = self._run('ind2dist', '-i', bad)
        self.assertEqual(2, rc)
        rc, _, err = self._run('dist2ind', '-i', self._write('d.json', {'components': 3}))
        self.assertEqual(2, rc)

    def test_malformed_documents(self):
        async_doc = json_plus.load_path(_data('abc_async.json'))
        grammar_doc = json_plus.load_path(_data('circuit_grammar.json'))
        diagram_doc = fold_N(abc_alphabet(), 'ab').to_map()
        cases = [
            ('alphabet', 'check', '-a', {'sorts': ['1'], 'boxes': 5}),
            ('alphabet', 'check', '-a', {'sorts': ['1'], 'boxes': [{'name': 3, 'arity': ['1'], 'coarity': ['1']}]}),
            ('ind2dist', '-i', {'alphabet': ['a', 'b'], 'pairs': 7}),
            ('async', 'to-sma', '-m', dict(async_doc, transitions={'a': [['p0']]})),
            ('async', 'to-sma', '-m', dict(async_doc, transitions=[])),
            ('async', 'to-sma', '-m', dict(async_doc, states=['p0', ['q0', 'q1']])),
            ('async', 'to-sma', '-m', dict(async_doc, initial='p0')),
            ('grammar', 'check', '-g', dict(grammar_doc, sortMap=[1])),
            ('grammar', 'check', '-g', dict(grammar_doc, boxMap={'s': ['split']})),
            ('diagram', 'render', '-d', dict(diagram_doc, nodes=5)),
            ('diagram', 'render', '-d', dict(diagram_doc, dom='1')),
            ('diagram', 'render', '-d', dict(diagram_doc, wires=[{'from': {'boundary': 'x'},
                                                                  'to': {'boundary': 0}}])),
        ]
        for idx, case in enumerate(cases):
            *argv, doc = case
            path = self._write(f'malformed{idx}.json', doc)
            rc, _, err = self._run(*argv, path)
            self.assertEqual(2, rc, f'{argv}: {err}')
            self.assertIn('error: InvalidDocument', err)

    def test_invalid_arguments(self):
        rc, _, _ = self._run('trace', 'nf')
        self.assertEqual(2, rc)
        rc, _, err = self._run('--max-results', '0', 'trace', 'nf', '-a', 'abc')
        self.assertEqual(2, rc)
        self.assertIn('error: InvalidConfig', err)

    def test_config_file(self):
        cfg = self._write('cfg.json', {'max_results': 1})
        rc, _, err = self._run('--config', cfg, 'trace', 'serialize', '-a', 'abc', '-w', 'a b')
        self.assertEqual(1, rc)
        self.assertIn('EnumerationOverflow', err)

    def test_deterministic_output(self):
        first = self._ok('ind2dist', '-i', _data('independence.json'))
        self.assertEqual(first, self._ok('ind2dist', '-i', _data('independence.json')))
