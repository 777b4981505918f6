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

"""Deterministic JSON encoding for tracelab documents.

Documents are normalized before encoding: objects with ``to_map`` are
expanded, sets become sorted lists and numpy scalars and arrays become
plain Python values.  Keys are always sorted so equal documents encode
to equal text.
"""

import json
import logging
import numpy as np
from .errors import InvalidDocument


_log = logging.getLogger(__name__)


def _set_key(item):
    # mixed element types sort by their encoded text
    return json.dumps(item, sort_keys=True, ensure_ascii=False)


def normalize(obj):
    """Convert obj into plain JSON values.

    :param obj: The object to convert.
    :return: The object as nested dict, list, str, int, float, bool and None.
    :raise TypeError: If some value has no JSON form.
    """
    if obj is None or isinstance(obj, (str, bool, int, float)):
        return obj
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        items = [normalize(x) for x in obj]
        try:
            return sorted(items)
        except TypeError:
            return sorted(items, key=_set_key)
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if hasattr(obj, 'to_map'):
        return normalize(obj.to_map())
    _log.warning('Cannot serialize object: %s', type(obj).__name__)
    raise TypeError(f'Object of type {type(obj).__name__} is not JSON serializable')


def dumps(obj, indent=2):
    return json.dumps(normalize(obj), indent=indent, sort_keys=True, ensure_ascii=False)


def dump(obj, fh, indent=2):
    fh.write(dumps(obj, indent=indent) + '\n')


def loads(s):
    return json.loads(s)


def load(fh):
    return json.load(fh)


def load_path(path):
    """Read a JSON document from a file.

    :param path: The file path.
    :return: The decoded document.
    :raise InvalidDocument: If the file is not valid JSON.
    :raise OSError: If the file cannot be read.
    """
    _log.info('load %s', path)
    with open(path, 'rt', encoding='utf-8') as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as ex:
            raise InvalidDocument(f'{path}: {ex}') from ex
