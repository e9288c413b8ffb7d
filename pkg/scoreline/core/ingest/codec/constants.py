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
from .base import BaseGameCodec
from ...log import get_logger
from ...utils import is_key_legal

# -- ensure all internal loggers inherit from the root scoreline logger
codec_registry_logger = get_logger('codec_registry')

codec_registry = {}


# ----------------------------------------------------------------------------------------------------------------------
def list_available_codec_types():
    return sorted(codec_registry.keys())


# ----------------------------------------------------------------------------------------------------------------------
def register_codec_type(key, codec_type, override=False):
    # type: (str, type, bool) -> None
    global codec_registry

    if not is_key_legal(key):
        raise KeyError('Illegal tokens detected in key %s!' % key)

    if codec_type is BaseGameCodec:
        raise ValueError('Cannot register BaseGameCodec - this is an abstract class!')

    if not isinstance(codec_type, type) or not issubclass(codec_type, BaseGameCodec):
        raise ValueError('All game codecs must inherit from BaseGameCodec!')

    if key in codec_registry:
        if not override:
            raise KeyError('Codec type %s is already registered!' % key)

        codec_registry_logger.warning(
            'Codec type %s already registered! Overriding entry with %s' % (key, codec_type.__name__)
        )

    codec_registry_logger.debug(
        'Codec type %s registered under key %s' % (codec_type.__name__, key)
    )

    codec_registry[key] = codec_type


# ----------------------------------------------------------------------------------------------------------------------
def codec_from_key(key):
    # type: (str) -> type
    if key in codec_registry:
        return codec_registry.get(key)
    raise KeyError('Codec type %s is not registered! Registered codecs: %s' % (key, list_available_codec_types()))
