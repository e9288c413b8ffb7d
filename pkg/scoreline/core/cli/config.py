"""
Copyright 2026 The Scoreline Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""
import os
import typing
import dataclasses
import configparser

from ..log import get_logger
from ..errors import ConfigError
from ..command import CliCommand

logger = get_logger('cli.config')

# -- config files have no section header; one is injected before parsing
CONFIG_SECTION = 'scoreline'

GLOBAL_KEYS = ('log_level',)


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class RunConfig(object):
    """
    Everything one command run depends on, with every path already absolute.
    """

    command: str
    arguments: dict
    inputs: typing.Dict[str, str]
    output_dir: typing.Optional[str]
    config_path: typing.Optional[str] = None
    log_level: str = 'WARNING'

    # ------------------------------------------------------------------------------------------------------------------
    def options(self):
        # type: () -> dict
        """
        The arguments in a JSON-friendly form, for the provenance record.
        """
        result = dict()
        for key, value in sorted(self.arguments.items()):
            result[key] = value if isinstance(value, (bool, int, float, type(None))) else str(value)
        return result


# ----------------------------------------------------------------------------------------------------------------------
def normalize_key(key):
    # type: (str) -> str
    return key.strip().lstrip('-').replace('-', '_').lower()


# ----------------------------------------------------------------------------------------------------------------------
def load_run_config(path):
    # type: (str) -> typing.Dict[str, str]
    """
    Read a key = value config file. Keys are the long flag names, with dashes or underscores; # starts a comment.

    :param path: the config file.
    :type path: str

    :return: raw text values keyed by parameter name.
    :rtype: dict
    """
    path = os.path.abspath(path)

    try:
        with open(path, 'r', encoding='utf-8') as handle:
            text = handle.read()
    except OSError as e:
        raise ConfigError('Could not read config file %s: %s' % (path, e), path=path)

    parser = configparser.ConfigParser(
        delimiters=('=',),
        comment_prefixes=('#',),
        inline_comment_prefixes=('#',),
        interpolation=None,
    )
    parser.optionxform = normalize_key

    try:
        parser.read_string('[%s]\n%s' % (CONFIG_SECTION, text), source=path)
    except configparser.Error as e:
        raise ConfigError('Malformed config file %s: %s' % (path, e), path=path)

    values = dict(parser.items(CONFIG_SECTION))
    logger.debug('Read %s settings from %s' % (len(values), path))
    return values


# ----------------------------------------------------------------------------------------------------------------------
def build_run_config(key, command, flags, file_values=None, config_path=None, known_keys=()):
    # type: (str, CliCommand, dict, dict, str, typing.Iterable[str]) -> RunConfig
    """
    Merge defaults, config file values and command line flags, in increasing precedence, and resolve every path.

    :param key: the name the command was invoked under.
    :type key: str

    :param command: the command to configure.
    :type command: CliCommand

    :param flags: values typed on the command line.
    :type flags: dict

    :param file_values: values from the config file.
    :type file_values: dict

    :param config_path: where file_values came from.
    :type config_path: str

    :param known_keys: parameter names of every registered command. Config keys outside this set are rejected; keys
                       belonging to other commands are ignored, so one file can serve them all.
    :type known_keys: iterable

    :rtype: RunConfig
    """
    file_values = dict(file_values or dict())
    known = set(known_keys) | set(GLOBAL_KEYS)

    unknown = sorted(set(file_values) - known)
    if unknown:
        raise ConfigError('Unknown settings in %s: %s' % (config_path, ', '.join(unknown)), path=config_path)

    log_level = str(flags.pop('log_level', file_values.pop('log_level', 'WARNING'))).upper()

    provided = {k: v for k, v in file_values.items() if k in command.arg_types}
    skipped = sorted(set(file_values) - set(provided))
    if skipped:
        logger.debug('Ignoring settings %s not used by %s' % (', '.join(skipped), key))

    provided.update(flags)
    arguments = command.resolve_arguments(provided)

    inputs = {k: arguments[k] for k in command.input_args if arguments.get(k) is not None}
    output_arg = command.output_arg

    return RunConfig(
        command=key,
        arguments=arguments,
        inputs=inputs,
        output_dir=arguments.get(output_arg) if output_arg else None,
        config_path=os.path.abspath(config_path) if config_path else None,
        log_level=log_level,
    )
