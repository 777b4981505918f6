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
Test the setting descriptors.
"""

import argparse
import contextlib
import io
import unittest
from tracelab.config import SETTINGS
from tracelab.metadata import DTYPES, Metadata


class TestMetadata(unittest.TestCase):

    def test_settings_table(self):
        for name, fields in SETTINGS.items():
            m = Metadata(fields)
            self.assertIn(m.dtype, DTYPES, name)
            self.assertEqual(m.default, m.validate(m.default), name)

    def test_max_results(self):
        m = Metadata(SETTINGS['max_results'])
        self.assertEqual(1, m.validate('1'))
        self.assertEqual(2 ** 63, m.validate(2 ** 63))
        for bad in [0, -5, 2 ** 63 + 1, 'many', True]:
            with self.assertRaises(ValueError, msg=repr(bad)):
                m.validate(bad)

    def test_word_length_range(self):
        m = Metadata('u32', brief='Longest word', range=[0, 64])
        self.assertEqual(0, m.validate(0))
        self.assertEqual(64, m.validate('64'))
        with self.assertRaises(ValueError):
            m.validate(65)

    def test_range_step(self):
        m = Metadata('int', brief='Even sizes', range=[-4, 4, 2])
        self.assertEqual(-2, m.validate(-2))
        with self.assertRaises(ValueError):
            m.validate(1)
        with self.assertRaises(ValueError):
            Metadata('int', range=[0, 4, 0])

    def test_unsigned_limits(self):
        self.assertEqual(2 ** 32 - 1, Metadata('u32').validate(2 ** 32 - 1))
        with self.assertRaises(ValueError):
            Metadata('u32').validate(2 ** 32)
        with self.assertRaises(ValueError):
            Metadata('u64').validate(-1)

    def test_order_options(self):
        m = Metadata('str', brief='Serialization order',
                     options=[['lex', 'lexicographic'], ['foata', 'steps']])
        self.assertEqual('lex', m.validate('lexicographic'))
        self.assertEqual('foata', m.validate('steps'))
        with self.assertRaises(ValueError):
            m.validate('random')

    def test_str(self):
        m = Metadata('str', 'Alphabet name')
        self.assertEqual('greek', m.validate('greek'))
        self.assertIsNone(m.validate(None))
        with self.assertRaises(ValueError):
            m.validate(['greek'])

    def test_bool(self):
        m = Metadata('bool', brief='Check determinism')
        for v in ['yes', 'ON', 1, True]:
            self.assertIs(True, m.validate(v), repr(v))
        for v in ['no', 'off', 0, None, '']:
            self.assertIs(False, m.validate(v), repr(v))
        with self.assertRaises(ValueError):
            m.validate('maybe')
        with self.assertRaises(ValueError):
            m.validate(2)

    def test_invalid_descriptor(self):
        with self.assertRaises(ValueError):
            Metadata('diagram')
        with self.assertRaises(ValueError):
            Metadata({'brief': 'no dtype'})
        with self.assertRaises(ValueError):
            Metadata({'dtype': 'int', 'color': 'red'})
        with self.assertRaises(ValueError):
            Metadata('u32', default=100, range=[0, 64])

    def test_copy(self):
        m1 = Metadata(SETTINGS['clique_brute_force_limit'])
        self.assertTrue(m1.hidden)
        for m2 in [Metadata(m1), Metadata(m1.to_map())]:
            self.assertEqual(m1.to_map(), m2.to_map())
        self.assertIn('clique', repr(m1).lower())

    def test_add_argument(self):
        parser = argparse.ArgumentParser()
        Metadata('u32', brief='Cap', default=3, range=[1, 9]).add_argument(parser, 'word_cap')
        Metadata('bool', brief='Flag').add_argument(parser, 'verbose_mode')
        self.assertIsNone(Metadata('int', flags=['hide']).add_argument(parser, 'secret'))
        args = parser.parse_args(['--word-cap', '5', '--verbose-mode', 'on'])
        self.assertEqual(5, args.word_cap)
        self.assertIs(True, args.verbose_mode)
        args = parser.parse_args([])
        self.assertIsNone(args.word_cap)
        self.assertFalse(hasattr(args, 'secret'))

    def test_add_argument_choices(self):
        parser = argparse.ArgumentParser()
        m = Metadata('str', brief='Order', options=[['lex', 'lexicographic'], ['foata']])
        m.add_argument(parser, 'order')
        self.assertEqual('foata', parser.parse_args(['--order', 'foata']).order)
        with self.assertRaises(SystemExit), contextlib.redirect_stderr(io.StringIO()):
            parser.parse_args(['--order', 'random'])
