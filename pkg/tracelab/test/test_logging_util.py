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
Test the logging configuration.
"""

import logging
import os
import tempfile
import unittest
from tracelab import logging_util
from tracelab.version import __version__


class TestLoggingUtil(unittest.TestCase):

    def tearDown(self):
        logging.getLogger().handlers = []

    def test_level_parse(self):
        self.assertEqual(logging.WARNING, logging_util.level_parse(None))
        self.assertEqual(logging.DEBUG, logging_util.level_parse('debug'))
        self.assertEqual(logging.INFO, logging_util.level_parse(logging.INFO))
        self.assertEqual(logging.INFO, logging_util.level_parse('20'))
        self.assertEqual(100, logging_util.level_parse('OFF'))
        with self.assertRaises(ValueError):
            logging_util.level_parse('loud')

    def test_header(self):
        header = logging_util.log_header()
        self.assertIn(__version__, header)
        self.assertIn('python_version', header)

    def test_deferred_records_replayed(self):
        logging_util.preconfig()
        root = logging.getLogger()
        deferred = root.handlers[0]
        self.assertIsInstance(deferred, logging_util.DeferredLogHandler)
        logging.getLogger('tracelab.test').warning('before config')
        self.assertEqual(1, len(deferred.records))
        logging_util.config(stream_log_level='ERROR')
        self.assertEqual(0, len(deferred.records))
        self.assertEqual(1, len(root.handlers))
        self.assertEqual(logging.ERROR, root.handlers[0].level)

    def test_deferred_bounded(self):
        h = logging_util.DeferredLogHandler(maxlen=2)
        log = logging.getLogger('tracelab.test.bounded')
        log.setLevel(logging.DEBUG)
        log.addHandler(h)
        try:
            for idx in range(5):
                log.warning('message %d', idx)
        finally:
            log.removeHandler(h)
        self.assertEqual(['message 3', 'message 4'], [r.getMessage() for r in h.records])

    def test_file_log(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'run.log')
            logging_util.config(stream_log_level='OFF', file_path=path)
            logging.getLogger('tracelab.test').info('into the file')
            logging_util.flush_all()
            for h in logging.getLogger().handlers:
                h.close()
            logging.getLogger().handlers = []
            with open(path, 'rt', encoding='utf-8') as f:
                text = f.read()
        self.assertTrue(text.startswith(f'# tracelab {__version__}'))
        self.assertIn('into the file', text)
