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
import typing

from ..log import get_logger
from ..command import CliCommand, command_from_callable


# ----------------------------------------------------------------------------------------------------------------------
class CommandInterface(object):
    """
    A group of commands. Every public method of an interface becomes a command when the interface is registered to
    an application, unless it is marked hidden.
    """

    _PRIORITY = 0

    _COMMAND_CLASS = CliCommand

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self):
        self.application = None
        self.logger = get_logger('interface.%s' % self.__class__.__name__)

        if not issubclass(self._COMMAND_CLASS, CliCommand):
            raise TypeError('All commands must inherit from the base CliCommand class!')

    # ------------------------------------------------------------------------------------------------------------------
    def __lt__(self, other):
        return self._PRIORITY < other._PRIORITY

    # ------------------------------------------------------------------------------------------------------------------
    def _can_register_command(self, key):
        # type: (str) -> bool
        # -- underscored methods are internal to the interface.
        if key.startswith('_'):
            return False

        if key in ['register']:
            return False

        value = getattr(self, key)

        if not value or not callable(value):
            return False

        if getattr(value, 'hidden', False):
            return False

        return True

    # ------------------------------------------------------------------------------------------------------------------
    def _construct_command(self, fn):
        # type: (typing.Callable) -> CliCommand
        return command_from_callable(interface=self, function=fn, cls=self._COMMAND_CLASS)

    # ------------------------------------------------------------------------------------------------------------------
    def register(self, application):
        """
        Register every eligible method of this interface, under its name, to the application.
        """
        self.application = application

        for key in dir(self):
            if not self._can_register_command(key):
                continue

            _callable = getattr(self, key)
            command = self._construct_command(_callable)

            application.register_command(key=key, command=command)
