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

Argument annotation types. Commands annotate their parameters with these so the command line layer knows which
values are files to digest, which is the output directory, and how to convert text from flags and config files.
"""
import os

from ..errors import ConfigError

TRUE_VALUES = ('true', '1', 'yes', 'on')
FALSE_VALUES = ('false', '0', 'no', 'off')


# ----------------------------------------------------------------------------------------------------------------------
class InputPath(str):
    """
    A file or directory the command reads. Resolved to an absolute path and digested into the provenance record.
    """


# ----------------------------------------------------------------------------------------------------------------------
class OutputDir(str):
    """
    The directory the command writes into. Receives the provenance record, or a failure marker.
    """


# ----------------------------------------------------------------------------------------------------------------------
def to_bool(value):
    # type: (object) -> bool
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in TRUE_VALUES:
        return True
    if text in FALSE_VALUES:
        return False
    raise ConfigError('Expected a boolean, got %r' % (value,))


# ----------------------------------------------------------------------------------------------------------------------
def convert_value(name, value, annotation):
    # type: (str, object, type) -> object
    """
    Convert a raw value, typically text from a config file, to the annotated type of a command parameter.
    """
    if value is None:
        return None

    try:
        if annotation is bool:
            return to_bool(value)

        if annotation in (InputPath, OutputDir):
            return annotation(os.path.abspath(os.path.expanduser(str(value))))

        if annotation is int:
            if isinstance(value, bool):
                raise ValueError(value)
            return int(str(value).strip()) if not isinstance(value, int) else value

        if annotation is float:
            return float(value)

        if annotation is str:
            return str(value)

    except (TypeError, ValueError):
        raise ConfigError('Invalid value %r for %s, expected %s' % (value, name, annotation.__name__))

    return value
