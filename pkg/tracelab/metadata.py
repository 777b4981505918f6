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

"""Typed descriptors for configuration settings.

Each setting is described by a :class:`Metadata` instance that validates
values and can declare itself as a command line flag.
"""


_TRUE = frozenset(['1', 'yes', 'on', 'true', 'enable', 'enabled'])
_FALSE = frozenset(['0', 'no', 'off', 'false', 'disable', 'disabled', ''])


def _to_str(x):
    if x is None or isinstance(x, str):
        return x
    raise ValueError(f'expected a string, got {x!r}')


def _to_bool(x):
    if x is None or isinstance(x, bool):
        return bool(x)
    if isinstance(x, int) and x in (0, 1):
        return bool(x)
    if isinstance(x, str):
        s = x.strip().lower()
        if s in _TRUE:
            return True
        if s in _FALSE:
            return False
    raise ValueError(f'expected a boolean, got {x!r}')


def _int_parser(bits=None, signed=True):
    if bits is None:
        lo, hi = -2 ** 63, 2 ** 63
    elif signed:
        lo, hi = -2 ** (bits - 1), 2 ** (bits - 1)
    else:
        lo, hi = 0, 2 ** bits

    def fn(x):
        if isinstance(x, bool):
            raise ValueError(f'expected an integer, got {x!r}')
        v = int(x)
        if not lo <= v < hi:
            raise ValueError(f'integer {v} outside [{lo}, {hi})')
        return v
    return fn


# dtype -> (parse fn, argparse type)
DTYPES = {
    'obj': (lambda x: x, None),
    'str': (_to_str, str),
    'float': (float, float),
    'int': (_int_parser(), int),
    'u32': (_int_parser(32, signed=False), int),
    'u64': (_int_parser(64, signed=False), int),
    'bool': (_to_bool, _to_bool),
}

_FIELDS = ('dtype', 'brief', 'detail', 'default', 'options', 'range', 'flags')


class Metadata:
    """Describe and validate a single setting.

    Construct from keyword fields, from a mapping of the same fields, or
    by copying another instance.

    :param dtype: The value data type, one of :data:`DTYPES`.
    :param brief: The one line description, also used as the flag help.
    :param detail: The longer description.
    :param default: The default value, validated on construction.
    :param options: The allowed values as a list of
        ``[value, alias1, ...]`` entries.  Aliases map to value.
    :param range: The inclusive range ``[min, max]`` or ``[min, max, step]``.
    :param flags: Flag strings.  ``'hide'`` keeps the setting off the
        command line.
    """

    def __init__(self, dtype=None, brief=None, detail=None, default=None,
                 options=None, range=None, flags=None):
        if isinstance(dtype, Metadata):
            dtype = dtype.to_map()
        if isinstance(dtype, dict):
            fields = dict(dtype)
            unknown = set(fields) - set(_FIELDS)
            if unknown:
                raise ValueError(f'unknown metadata fields {sorted(unknown)}')
            self.__init__(**fields)
            return
        if dtype not in DTYPES:
            raise ValueError(f'unsupported dtype {dtype!r}')
        self.dtype = dtype
        self._parse, self._arg_type = DTYPES[dtype]
        self.brief = brief
        self.detail = detail
        self.flags = list(flags or [])
        self.options = [list(o) for o in options] if options is not None else None
        self._aliases = None
        if self.options is not None:
            self._aliases = {alias: o[0] for o in self.options for alias in o}
        self.range = None
        if range is not None:
            r = [int(x) for x in range]
            if len(r) == 2:
                r.append(1)
            if len(r) != 3 or r[2] <= 0:
                raise ValueError(f'invalid range {range!r}')
            self.range = r
        self.default = None if default is None else self.validate(default)

    def __repr__(self):
        fields = ', '.join(f'{k}={v!r}' for k, v in self.to_map().items())
        return f'Metadata({fields})'

    @property
    def hidden(self):
        return 'hide' in self.flags

    def validate(self, value):
        """Coerce a value to this setting.

        :param value: The raw value, possibly an option alias or a string
            from the command line.
        :return: The validated value.
        :raise ValueError: If the value is not allowed.
        """
        if self._aliases is not None:
            if value not in self._aliases:
                raise ValueError(f'value {value!r} not in options')
            value = self._aliases[value]
        value = self._parse(value)
        if self.range is not None:
            v_min, v_max, v_step = self.range
            if not v_min <= value <= v_max:
                raise ValueError(f'value {value} outside range [{v_min}, {v_max}]')
            if (value - v_min) % v_step:
                raise ValueError(f'value {value} not a multiple of {v_step} from {v_min}')
        return value

    def add_argument(self, parser, name):
        """Declare this setting as an optional ``--name`` flag.

        The flag defaults to None so that unset flags leave the
        configured value alone.

        :param parser: The argparse parser.
        :param name: The setting name.  Underscores become dashes.
        :return: The argparse action, or None for hidden settings.
        """
        if self.hidden:
            return None
        kwargs = {'default': None, 'dest': name}
        if self._arg_type is not None:
            kwargs['type'] = self._arg_type
        if self.options is not None:
            kwargs['choices'] = [o[0] for o in self.options]
        help_text = self.brief or ''
        if self.default is not None:
            help_text = f'{help_text}  Defaults to {self.default}.'.strip()
        kwargs['help'] = help_text
        return parser.add_argument('--' + name.replace('_', '-'), **kwargs)

    def to_map(self):
        return {k: getattr(self, k) for k in _FIELDS if getattr(self, k) not in (None, [])}
