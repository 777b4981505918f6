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

import argparse
import json
import logging
import sys
from tracelab import config, entry_points, logging_util
from tracelab.errors import InvalidDocument, TracelabError
from tracelab.logging_util import LEVELS


_log = logging.getLogger(__name__)


def get_parser():
    entry_point_names = []
    parser = argparse.ArgumentParser(
        prog='tracelab',
        description='tracelab command line tools.',
    )
    parser.add_argument('--log-level',
                        choices=[k for k in LEVELS.keys() if isinstance(k, str)],
                        help='The console (stderr) log level.')
    parser.add_argument('--log-file',
                        help='The optional log file path.')
    parser.add_argument('--config',
                        help='The JSON file of setting overrides.')
    config.add_arguments(parser)
    subparsers = parser.add_subparsers(
        dest='subparser_name',
        help='The command to execute')

    for entry_point in entry_points.__all__:
        default_name = entry_point.__name__.split('.')[-1]
        name = getattr(entry_point, 'NAME', default_name)
        entry_point_names.append(name)
        cfg_fn = entry_point.parser_config
        p = subparsers.add_parser(name, help=cfg_fn.__doc__)
        cmd_fn = cfg_fn(p)
        if not callable(cmd_fn):
            raise ValueError(f'Invalid command function for {name}')
        p.set_defaults(func=cmd_fn)

    subparsers.add_parser('help',
                          help='Display the command help. ' +
                               'Use [command] --help to display help for a specific command.')

    return parser, entry_point_names


def _error(ex, name=None):
    name = name or getattr(ex, 'name', type(ex).__name__)
    print(f'error: {name}: {ex}', file=sys.stderr)


def run(argv=None):
    """Run the command line.

    :param argv: The arguments, excluding the program name.  None uses sys.argv.
    :return: The exit code: 0 on success, 1 on a domain error and 2 on
        invalid arguments or documents.
    """
    logging_util.preconfig()
    parser, _ = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code
    if args.subparser_name is None or args.subparser_name.lower() in ['help']:
        parser.print_help()
        return 0
    logging_util.config(stream_log_level=args.log_level, file_path=args.log_file)
    try:
        cfg = config.Config()
        if args.config:
            cfg.load(args.config)
        cfg.update_from_args(args)
    except (OSError, ValueError, KeyError) as ex:
        _error(ex, 'InvalidConfig')
        return 2
    args.cfg = cfg
    try:
        return args.func(args) or 0
    except InvalidDocument as ex:
        _error(ex)
        return 2
    except TracelabError as ex:
        _log.debug('command failed', exc_info=True)
        _error(ex)
        return 1
    except json.JSONDecodeError as ex:
        _error(ex, 'InvalidDocument')
        return 2
    except OSError as ex:
        _error(ex, 'InvalidDocument')
        return 2
    finally:
        logging_util.flush_all()


if __name__ == '__main__':
    sys.exit(run())
