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
import logging


scoreline_root_logger = logging.getLogger('Scoreline')

LOG_FORMAT = '[%(asctime)s] %(levelname)s [%(filename)s.%(funcName)s:%(lineno)d] %(message)s'
LOG_DATE_FORMAT = '%a, %d %b %Y %H:%M:%S'


# ----------------------------------------------------------------------------------------------------------------------
def get_logger(key):
    # type: (str) -> logging.Logger
    return scoreline_root_logger.getChild(key)


# ----------------------------------------------------------------------------------------------------------------------
def configure_logging(level='WARNING', stream=None):
    # type: (str, object) -> logging.Handler
    """
    Attach a stream handler to the root scoreline logger, using the standard scoreline format.

    Calling this more than once replaces the handler installed by the previous call.
    """
    for handler in list(scoreline_root_logger.handlers):
        if getattr(handler, 'is_scoreline_handler', False):
            scoreline_root_logger.removeHandler(handler)

    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATE_FORMAT))
    handler.is_scoreline_handler = True

    scoreline_root_logger.addHandler(handler)
    scoreline_root_logger.setLevel(getattr(logging, str(level).upper(), logging.WARNING))

    return handler
