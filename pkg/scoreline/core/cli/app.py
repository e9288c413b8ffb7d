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
import sys
import json
import typing
import argparse

from ..utils import is_key_legal
from ..errors import CommandNotFoundError, ExitCodes, UsageError, exit_code_from_error
from ..log import configure_logging, get_logger
from ..command import CliCommand, CommandResult
from ..interface import CommandInterface, interface_from_key
from .config import RunConfig, build_run_config, load_run_config
from .provenance import clear_run_markers, write_failure_marker, write_provenance

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


# ----------------------------------------------------------------------------------------------------------------------
class ArgumentParser(argparse.ArgumentParser):
    """
    argparse exits with status 2 on bad input, which collides with the validation failure code; raise instead.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def error(self, message):
        raise UsageError(message)


# ----------------------------------------------------------------------------------------------------------------------
class Application(object):
    """
    The scoreline command line. Interfaces register their commands to it; `run` parses arguments, configures the
    run, executes the command and turns the outcome into an exit code.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, interfaces=('pipeline',), stdout=None, stderr=None):
        # type: (typing.Iterable[str], typing.TextIO, typing.TextIO) -> None
        self.logger = get_logger('cli')

        self.commands = dict()  # type: typing.Dict[str, CliCommand]
        self.interfaces = list()

        self.stdout = stdout
        self.stderr = stderr

        for key in interfaces:
            self.register_interface_by_key(key)

    # ------------------------------------------------------------------------------------------------------------------
    def register_interface_by_key(self, key):
        # type: (str) -> CommandInterface
        interface_type = interface_from_key(key)
        return self.register_interface(interface_type())

    # ------------------------------------------------------------------------------------------------------------------
    def register_interface(self, interface):
        # type: (CommandInterface) -> CommandInterface
        if not isinstance(interface, CommandInterface):
            raise TypeError('Interfaces must inherit from CommandInterface, got %s' % type(interface).__name__)

        interface.register(self)
        self.interfaces.append(interface)
        return interface

    # ------------------------------------------------------------------------------------------------------------------
    def register_command(self, key, command):
        # type: (str, CliCommand) -> None
        if not is_key_legal(key):
            raise KeyError('Key "%s" is not legal for a command!' % key)

        if not isinstance(command, CliCommand):
            raise TypeError('Cannot register non-CliCommand commands!')

        if self.commands.get(key) is not None:
            raise KeyError('Command key %s is being assigned twice - is not allowed!' % key)

        self.commands[key] = command

        self.logger.debug('Registered command %s: %s' % (key, command))

    # ------------------------------------------------------------------------------------------------------------------
    def get_command(self, key):
        # type: (str) -> CliCommand
        if key not in self.commands:
            raise CommandNotFoundError('Command %s could not be found!' % key, command=key)
        return self.commands[key]

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def known_keys(self):
        # type: () -> typing.Set[str]
        keys = set()
        for command in self.commands.values():
            keys.update(command.arg_types)
        return keys

    # ------------------------------------------------------------------------------------------------------------------
    def build_parser(self):
        # type: () -> ArgumentParser
        common = ArgumentParser(add_help=False)
        common.add_argument('--config', default=argparse.SUPPRESS, help='key = value file mirroring the flags')
        common.add_argument(
            '--log-level',
            dest='log_level',
            choices=LOG_LEVELS,
            type=str.upper,
            default=argparse.SUPPRESS,
            help='logging verbosity (default: WARNING)',
        )

        from ... import __version__

        parser = ArgumentParser(prog='scoreline', description='Functional ratings for sports teams.', parents=[common])
        parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)

        subparsers = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=ArgumentParser)

        for key in sorted(self.commands):
            command = self.commands[key]
            subparser = subparsers.add_parser(
                key,
                parents=[common],
                help=command.summary,
                description=command.docstring.split(':param')[0].strip(),
            )
            command.add_arguments(subparser)

        return parser

    # ------------------------------------------------------------------------------------------------------------------
    def configure(self, argv):
        # type: (typing.Sequence[str]) -> typing.Tuple[CliCommand, RunConfig]
        """
        Parse arguments and the optional config file into the command to run and its RunConfig.
        """
        namespace = vars(self.build_parser().parse_args(list(argv)))

        key = namespace.pop('command', None)
        if not key:
            raise UsageError('No command given; expected one of %s' % ', '.join(sorted(self.commands)))

        command = self.get_command(key)

        config_path = namespace.pop('config', None)
        file_values = load_run_config(config_path) if config_path else dict()

        run_config = build_run_config(
            key,
            command,
            namespace,
            file_values=file_values,
            config_path=config_path,
            known_keys=self.known_keys,
        )
        return command, run_config

    # ------------------------------------------------------------------------------------------------------------------
    def execute(self, command, run_config):
        # type: (CliCommand, RunConfig) -> CommandResult
        clear_run_markers(run_config.output_dir)

        result = command.digest(run_config.arguments)

        value = result.value if isinstance(result.value, dict) else dict(result=result.value)
        provenance = write_provenance(run_config, value.get('outputs', list()))

        if provenance:
            value['outputs'] = sorted(value.get('outputs', list())) + [provenance]

        result.value = value
        return result

    # ------------------------------------------------------------------------------------------------------------------
    def _write_out(self, text):
        (self.stdout or sys.stdout).write(text + '\n')

    # ------------------------------------------------------------------------------------------------------------------
    def _write_err(self, text):
        (self.stderr or sys.stderr).write(text + '\n')

    # ------------------------------------------------------------------------------------------------------------------
    def run(self, argv=None):
        # type: (typing.Optional[typing.Sequence[str]]) -> int
        """
        Run one command and return its exit code: 0 on success, 2 when validation fails, 3 when the ratings are not
        identified, 4 on usage errors and 1 for anything unexpected.
        """
        argv = sys.argv[1:] if argv is None else argv
        run_config = None

        try:
            command, run_config = self.configure(argv)
            configure_logging(run_config.log_level, self.stderr)

            result = self.execute(command, run_config)

        except SystemExit as e:
            # -- --help and --version exit through argparse
            return e.code if isinstance(e.code, int) else ExitCodes.OK

        except Exception as e:
            code = exit_code_from_error(e)

            if run_config is not None:
                write_failure_marker(run_config.output_dir, run_config.command, e)

            if code == ExitCodes.UNHANDLED:
                self.logger.exception('Unhandled error')

            self._write_err(str(e))
            return code

        summary = dict(result.value, command=result.command, warnings=result.warnings)
        self._write_out(json.dumps(summary, sort_keys=True, indent=2))

        return ExitCodes.OK
