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
from ..log import get_logger
from ..utils import is_key_legal

interface_registry_logger = get_logger('interface_registry')

interface_registry = {}


# ----------------------------------------------------------------------------------------------------------------------
def list_available_interface_types():
    return sorted(interface_registry.keys())


# ----------------------------------------------------------------------------------------------------------------------
def register_interface_type(key, interface_type, override=False):
    # type: (str, type, bool) -> None
    if not is_key_legal(key):
        raise KeyError('Illegal tokens detected in key %s!' % key)

    from .base import CommandInterface

    if interface_type is CommandInterface:
        raise ValueError('Cannot register CommandInterface - this is an abstract class!')

    if not issubclass(interface_type, CommandInterface):
        raise ValueError('All interfaces must inherit from CommandInterface!')

    if key in interface_registry:
        if not override:
            raise KeyError('Interface type %s is already registered!' % key)

        interface_registry_logger.warning(
            'Interface type %s already registered! Overriding entry with %s' % (key, interface_type.__name__)
        )

    interface_registry_logger.debug('Interface type %s registered under key %s' % (interface_type.__name__, key))

    interface_registry[key] = interface_type


# ----------------------------------------------------------------------------------------------------------------------
def interface_from_key(key):
    # type: (str) -> type
    if interface_registry.get(key):
        return interface_registry.get(key)
    raise KeyError('Interface type %s is not registered! Registered interface types: %s' % (
        key, ', '.join(list_available_interface_types())))
