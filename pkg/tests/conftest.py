# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause

import pathlib
import typing

from pytest import fixture

from grassbounds.gf2_ring import GrassmannRing, make_ring


@fixture
def datadir(request) -> pathlib.Path:
    """Returns the directory in which the test is sitting."""
    return pathlib.Path(request.module.__file__).parents[0] / "data"


_RINGS: dict[tuple[int, int], GrassmannRing] = {}


@fixture(scope="session")
def ring() -> typing.Callable[[int, int], GrassmannRing]:
    """Returns a factory building each ring once per test session."""

    def _ring(k: int, n: int) -> GrassmannRing:
        if (k, n) not in _RINGS:
            _RINGS[(k, n)] = make_ring(k, n)
        return _RINGS[(k, n)]

    return _ring
