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
import json
import hashlib

LEGAL_TOKENS = 'abcdefghijklmnopqrstuvwxyz_'


# ----------------------------------------------------------------------------------------------------------------------
def is_key_legal(key):
    """
    Return True if the given registry key is legal.

    Keys are used for registries and command names, and may only contain lowercase letters and underscores.

    :param key: the key to check
    :type key: str

    :return: True if the given key is legal
    :rtype: bool
    """
    # type (str) -> bool
    if key is None:
        return False

    if not isinstance(key, str):
        return False

    if not key:
        return False

    for character in key:
        if character not in LEGAL_TOKENS:
            return False

    return True


# ----------------------------------------------------------------------------------------------------------------------
def sha256_bytes(data):
    # type: (bytes) -> str
    return hashlib.sha256(data).hexdigest()


# ----------------------------------------------------------------------------------------------------------------------
def sha256_file(path, buff_size=16384):
    # type: (str, int) -> str
    """
    Digest a file on disk in slices, so large game files never need to fit in memory at once.

    Directories are digested by walking their files in sorted order.
    """
    digest = hashlib.sha256()

    if os.path.isdir(path):
        for root, dirs, files in os.walk(path):
            dirs.sort()
            for name in sorted(files):
                file_path = os.path.join(root, name)
                digest.update(os.path.relpath(file_path, path).encode('utf-8'))
                digest.update(sha256_file(file_path).encode('utf-8'))
        return digest.hexdigest()

    with open(path, 'rb') as handle:
        while True:
            _slice = handle.read(buff_size)
            if not _slice:
                break
            digest.update(_slice)

    return digest.hexdigest()


# ----------------------------------------------------------------------------------------------------------------------
def digest_strings(values):
    # type: (typing.Iterable[str]) -> str
    """
    Order-sensitive digest of a sequence of strings, used to tie fits to the exact game list they were built from.
    """
    digest = hashlib.sha256()
    for value in values:
        digest.update(str(value).encode('utf-8'))
        digest.update(b'\x00')
    return digest.hexdigest()


# ----------------------------------------------------------------------------------------------------------------------
def dump_json(data):
    # type: (object) -> bytes
    """
    Stable JSON encoding: sorted keys, fixed indentation and a trailing newline, so reruns are byte-identical.
    """
    return (json.dumps(data, sort_keys=True, indent=2, allow_nan=False) + '\n').encode('utf-8')


# ----------------------------------------------------------------------------------------------------------------------
def ensure_directory(path):
    # type: (str) -> str
    if not os.path.isdir(path):
        os.makedirs(path)
    return path
