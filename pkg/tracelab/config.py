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

"""Configuration settings shared by the library and the command line."""

from . import json_plus
from .metadata import Metadata
import logging


_log = logging.getLogger(__name__)


SETTINGS = {
    'max_results': {
        'dtype': 'u64',
        'brief': 'Maximum number of enumerated results',
        'detail': """\
            The cap for serialization enumeration.  Exceeding the cap
            raises EnumerationOverflow instead of silently truncating.""",
        'range': [1, 2 ** 63],
        'default': 1_000_000,
    },
    'max_word_length': {
        'dtype': 'u32',
        'brief': 'Maximum word length for command line checks',
        'range': [0, 64],
        'default': 12,
    },
    'clique_brute_force_limit': {
        'dtype': 'u32',
        'brief': 'Largest alphabet solved by subset enumeration',
        'detail': """\
            Maximal cliques of the dependency graph are found by
            enumerating all subsets up to this alphabet size, and by
            Bron-Kerbosch with pivoting above it.""",
        'range': [0, 24],
        'default': 20,
        'flags': ['hide'],
    },
}


class Config:
    """Validated configuration values.

    :param kwargs: Overrides for the defaults in :data:`SETTINGS`.
    """

    def __init__(self, **kwargs):
        self._meta = {key: Metadata(value) for key, value in SETTINGS.items()}
        self._values = {key: meta.default for key, meta in self._meta.items()}
        self.update(**kwargs)

    def __getattr__(self, item):
        try:
            return self.__dict__['_values'][item]
        except KeyError:
            raise AttributeError(item)

    def update(self, **kwargs):
        """Validate and apply new setting values.

        :param kwargs: The setting name to value mapping.  None values
            are ignored so that unset command line flags keep the default.
        :return: self.
        :raise KeyError: On an unknown setting.
        :raise ValueError: If a value fails validation.
        """
        for key, value in kwargs.items():
            if value is None:
                continue
            if key not in self._meta:
                raise KeyError(f'unknown setting {key}')
            self._values[key] = self._meta[key].validate(value)
            _log.debug('setting %s = %r', key, self._values[key])
        return self

    def load(self, path):
        """Apply overrides from a JSON file.

        :param path: The path to a JSON object of setting name to value.
        :return: self.
        """
        values = json_plus.load_path(path)
        if not isinstance(values, dict):
            raise ValueError(f'config file {path} must contain an object')
        _log.info('load config %s', path)
        return self.update(**values)

    def to_map(self):
        return dict(self._values)

    def update_from_args(self, args):
        """Apply the setting flags declared by :func:`add_arguments`."""
        return self.update(**{key: getattr(args, key, None) for key in self._meta})


def add_arguments(parser):
    """Declare a command line flag for each visible setting.

    :param parser: The argparse parser.
    """
    for key, value in SETTINGS.items():
        Metadata(value).add_argument(parser, key)


DEFAULT = Config()
"""The module default configuration used when callers pass no explicit caps."""
