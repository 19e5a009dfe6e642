"""The accelerated census kernels must agree with their pure twins."""

from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest

from permlab import kernels
from permlab.perms import parse_pair

PAIRS = [
    parse_pair("1234,1243"),
    parse_pair("1243,1423"),
    parse_pair("1324,1423"),
    parse_pair("2314,3124"),
    parse_pair("2413,3142"),
]


def _arrays(pair):
    return (
        np.array(pair[0], dtype=np.int8),
        np.array(pair[1], dtype=np.int8),
    )


@pytest.mark.parametrize("pair", PAIRS, ids=lambda p: "".join(map(str, p[0])))
def test_census_pair_matches_pure(pair):
    pa, pb = _arrays(pair)
    for n in range(1, 8):
        first, cells = kernels.census_pair(n, pa, pb)
        first_p, cells_p = kernels.census_pair_pure(n, pa, pb)
        assert np.array_equal(first, first_p)
        assert np.array_equal(cells, cells_p)


def test_fill_avoiders_matches_pure():
    pa, pb = _arrays(PAIRS[1])
    for n in range(1, 8):
        total = int(kernels.census_pair(n, pa, pb)[0].sum())
        out = np.zeros((total, n), dtype=np.int8)
        out_p = np.zeros((total, n), dtype=np.int8)
        assert kernels.fill_avoiders(n, pa, pb, out) == total
        assert kernels.fill_avoiders_pure(n, pa, pb, out_p) == total
        assert np.array_equal(out, out_p)


def test_active_census_matches_pure():
    pa, pb = _arrays(PAIRS[2])
    for n in range(1, 7):
        assert np.array_equal(
            kernels.active_census(n, pa, pb),
            kernels.active_census_pure(n, pa, pb),
        )


def test_inv021_census_matches_pure():
    for n in range(1, 9):
        assert np.array_equal(
            kernels.inv021_census(n), kernels.inv021_census_pure(n)
        )


def test_pure_mode_env_flag():
    code = (
        "import numpy as np\n"
        "from permlab import kernels\n"
        "assert kernels.PURE_PYTHON_REQUESTED\n"
        "assert not kernels.NUMBA_ENABLED\n"
        "assert kernels.census_pair is kernels.census_pair_pure\n"
        "pa = np.array([1, 2, 4, 3], dtype=np.int8)\n"
        "pb = np.array([1, 4, 2, 3], dtype=np.int8)\n"
        "print([int(c) for c in kernels.census_pair(6, pa, pb)[0]])\n"
    )
    env = dict(os.environ, PERMLAB_PURE="1")
    proc = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "[16, 40, 68, 90, 90, 90]"
