# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause
"""On-disk storage of reduced Gröbner bases."""

from __future__ import annotations  # not required for Python >= 3.10

import collections.abc
import os
import pathlib
import re
import tempfile
import typing

from sphinx.util import logging

from .gf2_ring import ORDER_TAG, Gf2Polynomial, PolynomialSyntaxError

logger = logging.getLogger(__name__)


CACHE_ENVIRONMENT_VARIABLE = "GRASSBOUNDS_CACHE"
"""Environment variable pointing to the default cache directory."""


KeyType = tuple[int, int]
"""Type for the keys of :py:class:`GroebnerCache`: ``(k, n)``"""


BasisType = tuple[Gf2Polynomial, ...]
"""Type for the values of :py:class:`GroebnerCache`"""


_HEADER_RE = re.compile(r"^#\s*k=(\d+)\s+n=(\d+)\s+order=(\S+)\s*$")


def default_cache_directory() -> pathlib.Path | None:
    """Cache directory set in the environment, if any."""
    value = os.environ.get(CACHE_ENVIRONMENT_VARIABLE)
    return pathlib.Path(value) if value else None


def dumps(key: KeyType, basis: typing.Iterable[Gf2Polynomial]) -> str:
    """Serialises a basis: a header line then one element per line."""
    k, n = key
    lines = [f"# k={k} n={n} order={ORDER_TAG}"] + [str(g) for g in basis]
    return "\n".join(lines) + "\n"


def loads(key: KeyType, contents: str) -> BasisType | None:
    """Parses a serialised basis.

    Returns ``None`` if the header does not match ``key`` and the monomial
    order, or if any line fails to parse.  The mathematical validity of the
    basis is not checked here.
    """
    lines = [line.strip() for line in contents.splitlines() if line.strip()]
    if not lines:
        return None
    match = _HEADER_RE.match(lines[0])
    if match is None:
        logger.debug(f"Cache entry for {key} has no valid header")
        return None
    if (int(match.group(1)), int(match.group(2))) != key or match.group(3) != ORDER_TAG:
        logger.debug(f"Cache entry header `{lines[0]}' does not match {key}")
        return None
    try:
        return tuple(Gf2Polynomial.parse(line) for line in lines[1:])
    except PolynomialSyntaxError as e:
        logger.debug(f"Cache entry for {key} does not parse: {e}")
        return None


class GroebnerCache(collections.abc.MutableMapping):
    """A directory of Gröbner bases, organised as a mutable mapping.

    Keys are pairs ``(k, n)`` and values are tuples of
    :py:class:`grassbounds.gf2_ring.Gf2Polynomial`.  Each entry lives in its
    own file ``k<k>_n<n>.txt``, written atomically, so that several processes
    may share the directory.  Unreadable entries behave as missing ones.


    Arguments:

        directory: Where the entries live.  It is created on first write.
    """

    directory: pathlib.Path

    def __init__(self, directory: str | os.PathLike) -> None:
        self.directory = pathlib.Path(directory)

    def path(self, key: KeyType) -> pathlib.Path:
        k, n = key
        return self.directory / f"k{k}_n{n}.txt"

    def __getitem__(self, key: KeyType) -> BasisType:
        path = self.path(key)
        try:
            contents = path.read_text()
        except (FileNotFoundError, IsADirectoryError):
            raise KeyError(key) from None
        except (OSError, UnicodeDecodeError) as e:
            logger.debug(f"Cannot read cache entry at {str(path)}: {e}")
            raise KeyError(key) from None
        logger.debug(f"Loading Gröbner basis from {str(path)}...")
        basis = loads(key, contents)
        if basis is None:
            logger.info(f"Ignoring unreadable cache entry at {str(path)}")
            raise KeyError(key)
        return basis

    def __setitem__(self, key: KeyType, value: typing.Iterable[Gf2Polynomial]) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path(key)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "wt") as f:
                f.write(dumps(key, value))
            os.replace(tmp, path)
        except BaseException:
            pathlib.Path(tmp).unlink(missing_ok=True)
            raise
        logger.debug(f"Saved Gröbner basis for {key} at {str(path)}")

    def __delitem__(self, key: KeyType) -> None:
        try:
            self.path(key).unlink()
        except FileNotFoundError:
            raise KeyError(key) from None

    def __iter__(self) -> typing.Iterator[KeyType]:
        if not self.directory.is_dir():
            return
        for p in sorted(self.directory.glob("k*_n*.txt")):
            match = re.fullmatch(r"k(\d+)_n(\d+)\.txt", p.name)
            if match is not None:
                yield (int(match.group(1)), int(match.group(2)))

    def __len__(self) -> int:
        return sum(1 for _ in self)

    def __repr__(self) -> str:
        return f"GroebnerCache({str(self.directory)!r})"
