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

"""Configure logging for the tracelab command line tools.

Records emitted before the command line is parsed are held by a
:class:`DeferredLogHandler` and replayed once :func:`config` knows the
requested levels.
"""

import collections
import logging
import platform
import sys
from . import json_plus
from .version import __version__


_log = logging.getLogger(__name__)

STREAM_SIMPLE_FMT = "%(levelname)s:%(name)s:%(message)s"
VERBOSE_FMT = "%(levelname)s:%(asctime)s:%(filename)s:%(lineno)d:%(name)s:%(message)s"
DEFERRED_MAX = 1000

LEVELS = {
    'OFF': 100,
    'CRITICAL': logging.CRITICAL,
    'ERROR': logging.ERROR,
    'WARNING': logging.WARNING,
    'INFO': logging.INFO,
    'DEBUG': logging.DEBUG,
    'ALL': 0,
}
LEVELS.update({value: value for value in list(LEVELS.values())})


def log_header():
    """The text written at the top of each log file."""
    info = {
        'tracelab': __version__,
        'python_version': sys.version,
        'platform': platform.platform(),
        'executable': sys.executable,
    }
    return f'# tracelab {__version__}\n{json_plus.dumps(info)}\n\n'


def level_parse(level):
    """Convert a level name or number to the integer logging level.

    :param level: The level name (case insensitive), integer or None.
    :return: The integer level.  None maps to WARNING.
    :raise ValueError: On an unknown level name.
    """
    if level is None:
        return logging.WARNING
    if isinstance(level, str):
        level = level.strip().upper()
        if level.isdigit():
            level = int(level)
    if level not in LEVELS:
        raise ValueError(f'unknown log level {level}')
    return LEVELS[level]


class DeferredLogHandler(logging.Handler):
    """Hold the most recent records until logging is configured."""

    def __init__(self, maxlen=DEFERRED_MAX):
        super().__init__()
        self.records = collections.deque(maxlen=maxlen)

    def emit(self, record):
        self.records.append(record)

    def replay(self, logger):
        while self.records:
            logger.handle(self.records.popleft())


def preconfig():
    """Capture log records in memory until :func:`config`."""
    root_log = logging.getLogger()
    root_log.handlers = [DeferredLogHandler()]
    root_log.setLevel(logging.WARNING)


def _stream_handler(level):
    fmt = VERBOSE_FMT if level <= logging.DEBUG else STREAM_SIMPLE_FMT
    h = logging.StreamHandler(sys.stderr)
    h.setFormatter(logging.Formatter(fmt))
    h.setLevel(level)
    return h


def _file_handler(path, level):
    h = logging.FileHandler(filename=path, encoding='utf-8')
    h.stream.write(log_header())
    h.setFormatter(logging.Formatter(VERBOSE_FMT))
    h.setLevel(level)
    return h


def config(stream_log_level=None, file_path=None, file_log_level=None):
    """Configure logging.

    :param stream_log_level: The stderr level as an integer or name.
        None (default) is 'WARNING'.
    :param file_path: The optional log file path.  None (default)
        disables file logging.
    :param file_log_level: The log file level as an integer or name.
        None (default) is 'INFO'.
    """
    root_log = logging.getLogger()
    deferred = [h for h in root_log.handlers if isinstance(h, DeferredLogHandler)]
    root_log.handlers = []

    handlers = [_stream_handler(level_parse(stream_log_level))]
    if file_path is not None:
        file_lvl = logging.INFO if file_log_level is None else level_parse(file_log_level)
        handlers.append(_file_handler(file_path, file_lvl))
    for h in handlers:
        root_log.addHandler(h)
    root_log.setLevel(min(h.level for h in handlers))
    _log.info('log levels: %s', ', '.join(logging.getLevelName(h.level) for h in handlers))
    for h in deferred:
        h.replay(root_log)


def flush_all():
    for h in logging.getLogger().handlers:
        h.flush()
