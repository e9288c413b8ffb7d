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
import re
import typing
import time
import inspect
import argparse
import dataclasses

from ..log import get_logger, scoreline_root_logger
from ..errors import UsageError
from .handler import CommandDigestLoggingHandler
from .arguments import InputPath, OutputDir, convert_value

PARAM_DOC_PATTERN = re.compile(r'^\s*:param\s+(\w+)\s*:\s*(.*)$')


# ----------------------------------------------------------------------------------------------------------------------
@dataclasses.dataclass
class CommandResult(object):
    """
    What a command returned, plus the warnings and errors logged while it ran.
    """

    command: str
    value: object
    warnings: list
    errors: list
    elapsed_s: float


# ----------------------------------------------------------------------------------------------------------------------
class CliCommand(object):
    """
    Base CliCommand class. All commands registered to an application are an instance of this class or a subclass.

    The wrapped callable's signature is the command line: parameters without a default become positionals, the rest
    become --flags, annotations pick the value type, and ":param name:" docstring lines become the help text.
    """

    def __init__(
            self,
            interface,
            _callable,
    ):
        from ..interface import CommandInterface

        if not isinstance(interface, CommandInterface):
            raise ValueError('CliCommand cannot be instanced as separate from an interface!')

        if not callable(_callable):
            raise ValueError('CliCommand class can only be instanced with a callable!')

        self.logger = get_logger('command')

        self.interface = interface
        self._callable = _callable

        self._signature = inspect.signature(self._callable)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def name(self):
        # type: () -> str
        return self._callable.__name__

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def signature(self):
        return self._signature

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def parameters(self):
        return self.signature.parameters

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def required(self):
        # type: () -> list
        """
        Names of the parameters that have no default value.
        """
        return [key for key, value in self.parameters.items() if value.default is inspect.Parameter.empty]

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def arg_defaults(self):
        result = dict()
        for key, value in self.parameters.items():
            result[key] = value.default if value.default is not inspect.Parameter.empty else None
        return result

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def arg_types(self):
        """
        Type of every parameter, from its annotation, or from its default when it has none. Falls back to str.
        """
        result = dict()
        for key, value in self.parameters.items():
            annotation = value.annotation

            if annotation is inspect.Parameter.empty:
                default = value.default
                if default is inspect.Parameter.empty or default is None:
                    annotation = str
                else:
                    annotation = type(default)

            result[key] = annotation

        return result

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def input_args(self):
        # type: () -> list
        return [key for key, value in self.arg_types.items() if value is InputPath]

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def output_arg(self):
        # type: () -> typing.Optional[str]
        for key, value in self.arg_types.items():
            if value is OutputDir:
                return key
        return None

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def docstring(self):
        return inspect.cleandoc(self._callable.__doc__ or '')

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def summary(self):
        # type: () -> str
        for line in self.docstring.splitlines():
            if line.strip():
                return line.strip()
        return ''

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def param_docs(self):
        # type: () -> dict
        result = dict()
        for line in self.docstring.splitlines():
            match = PARAM_DOC_PATTERN.match(line)
            if match:
                result[match.group(1)] = match.group(2).strip()
        return result

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def decorators(self):
        result = list()

        for key in dir(self._callable):
            if key.startswith('_'):
                continue
            result.append(key)

        return result

    # ------------------------------------------------------------------------------------------------------------------
    def get(self, key, default=None):
        # type: (str, object) -> object
        """
        Read an attribute a decorator set on the wrapped callable.
        """
        if key in dir(self._callable):
            return getattr(self._callable, key, default)
        return default

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self):
        # type: () -> dict
        result = dict()

        result['interface'] = self.interface.__class__.__name__
        result['_callable'] = self.name
        result['parameters'] = {key: value.__name__ for key, value in self.arg_types.items()}
        result['defaults'] = {key: repr(value) for key, value in self.arg_defaults.items()}

        return result

    # ------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, CliCommand) and self.to_dict() == other.to_dict()

    # ------------------------------------------------------------------------------------------------------------------
    def __hash__(self):
        return hash(repr(sorted(self.to_dict().items())))

    # ------------------------------------------------------------------------------------------------------------------
    def __repr__(self):
        params = list()

        for name, annotation in self.arg_types.items():
            default = self.parameters[name].default
            default = '' if default is inspect.Parameter.empty else ' = %r' % (default,)
            params.append('%s: %s%s' % (name, annotation.__name__, default))

        decorators = ', '.join(self.decorators)
        return '[%s] {%s} <%s> (%s)' % (self.__class__.__name__, self.name, decorators, ', '.join(params))

    # ------------------------------------------------------------------------------------------------------------------
    def __str__(self):
        return self.__repr__()

    # ------------------------------------------------------------------------------------------------------------------
    def __call__(self, *args, **kwargs):
        return self._callable(*args, **kwargs)

    # ------------------------------------------------------------------------------------------------------------------
    def add_arguments(self, parser):
        # type: (argparse.ArgumentParser) -> None
        """
        Declare this command's parameters on an argparse parser.

        Every value defaults to argparse.SUPPRESS, so the parsed namespace only holds what the user typed and config
        file values can fill in the rest.
        """
        docs = self.param_docs
        types = self.arg_types

        for key, annotation in types.items():
            default = self.parameters[key].default
            text = docs.get(key, '')

            if annotation is OutputDir:
                parser.add_argument(
                    '--%s' % key.replace('_', '-'),
                    dest=key,
                    default=argparse.SUPPRESS,
                    help=text,
                    metavar='DIR',
                )
                continue

            if default is inspect.Parameter.empty:
                parser.add_argument(
                    key,
                    nargs='?',
                    default=argparse.SUPPRESS,
                    help=text,
                    metavar=key.upper(),
                )
                continue

            flag = '--%s' % key.replace('_', '-')

            if annotation is bool:
                parser.add_argument(
                    flag,
                    dest=key,
                    action=argparse.BooleanOptionalAction,
                    default=argparse.SUPPRESS,
                    help='%s (default: %s)' % (text, default),
                )
                continue

            parser.add_argument(
                flag,
                dest=key,
                type=str,
                default=argparse.SUPPRESS,
                help='%s (default: %s)' % (text, default),
                metavar=annotation.__name__.upper() if annotation in (int, float) else 'VALUE',
            )

    # ------------------------------------------------------------------------------------------------------------------
    def resolve_arguments(self, provided):
        # type: (dict) -> dict
        """
        Merge provided values over the defaults and convert every value to its annotated type.

        :param provided: values from the command line and config file, keyed by parameter name.
        :type provided: dict

        :return: keyword arguments ready to call the command with.
        :rtype: dict
        """
        types = self.arg_types
        unknown = sorted(set(provided) - set(types))
        if unknown:
            raise UsageError('Command %s does not take %s' % (self.name, ', '.join(unknown)), command=self.name)

        result = dict()
        for key, annotation in types.items():
            if key in provided:
                result[key] = convert_value(key, provided[key], annotation)
                continue

            if key in self.required:
                raise UsageError('Command %s is missing its %s argument' % (self.name, key), command=self.name)

            result[key] = self.arg_defaults[key]

        return result

    # ------------------------------------------------------------------------------------------------------------------
    def digest(self, kwargs):
        # type: (dict) -> CommandResult
        """
        Run this command, capturing the warnings and errors logged along the way.

        Exceptions are not caught here; the application maps them to exit codes.
        """
        handler = CommandDigestLoggingHandler()
        scoreline_root_logger.addHandler(handler)
        handler.start()

        try:
            start = time.perf_counter()
            value = self._callable(**kwargs)
            elapsed = time.perf_counter() - start

            return CommandResult(
                command=self.name,
                value=value,
                warnings=list(handler.warnings),
                errors=list(handler.errors),
                elapsed_s=elapsed,
            )

        finally:
            handler.stop()
            scoreline_root_logger.removeHandler(handler)
