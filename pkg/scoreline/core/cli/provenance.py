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

from .config import RunConfig
from ..log import get_logger
from ..errors import ScorelineExceptionBase, exit_code_from_error
from ..constants import FAILURE_MARKER_NAME, PROVENANCE_FILE_NAME
from ..utils import dump_json, ensure_directory, sha256_file

logger = get_logger('cli.provenance')


# ----------------------------------------------------------------------------------------------------------------------
def _package_version():
    # type: () -> str
    from ... import __version__
    return __version__


# ----------------------------------------------------------------------------------------------------------------------
def provenance_record(run_config, outputs):
    # type: (RunConfig, typing.Iterable[str]) -> dict
    """
    Describe a finished run: the command and its options, the digest of every input and of every output.

    Nothing time- or host-dependent goes in, so identical runs produce identical records.
    """
    outputs = sorted(set(os.path.abspath(p) for p in outputs))
    base = run_config.output_dir

    inputs = dict()
    for key, path in sorted(run_config.inputs.items()):
        inputs[key] = dict(path=path, sha256=sha256_file(path))

    written = dict()
    for path in outputs:
        name = os.path.relpath(path, base) if base else path
        written[name.replace(os.sep, '/')] = sha256_file(path)

    return dict(
        version=_package_version(),
        command=run_config.command,
        options=run_config.options(),
        inputs=inputs,
        outputs=written,
    )


# ----------------------------------------------------------------------------------------------------------------------
def write_provenance(run_config, outputs):
    # type: (RunConfig, typing.Iterable[str]) -> typing.Optional[str]
    if not run_config.output_dir:
        return None

    path = os.path.join(ensure_directory(run_config.output_dir), PROVENANCE_FILE_NAME)
    with open(path, 'wb') as handle:
        handle.write(dump_json(provenance_record(run_config, outputs)))

    logger.debug('Wrote provenance to %s' % path)
    return path


# ----------------------------------------------------------------------------------------------------------------------
def failure_record(command, error):
    # type: (str, BaseException) -> dict
    if isinstance(error, ScorelineExceptionBase):
        detail = error.to_dict()
    else:
        detail = dict(error=type(error).__name__, message=str(error))

    return dict(command=command, exit_code=exit_code_from_error(error), error=detail)


# ----------------------------------------------------------------------------------------------------------------------
def write_failure_marker(directory, command, error):
    # type: (str, str, BaseException) -> typing.Optional[str]
    """
    Mark an output directory as failed. Partial outputs of a failed run never stand without this marker.
    """
    if not directory:
        return None

    try:
        path = os.path.join(ensure_directory(directory), FAILURE_MARKER_NAME)
        with open(path, 'wb') as handle:
            handle.write(dump_json(failure_record(command, error)))
    except OSError as e:
        logger.error('Could not write failure marker to %s: %s' % (directory, e))
        return None

    return path


# ----------------------------------------------------------------------------------------------------------------------
def clear_run_markers(directory):
    # type: (str) -> None
    """
    Remove the failure marker and provenance record of an earlier run in the same directory.
    """
    if not directory:
        return

    for name in (FAILURE_MARKER_NAME, PROVENANCE_FILE_NAME):
        path = os.path.join(directory, name)
        if os.path.isfile(path):
            os.remove(path)
