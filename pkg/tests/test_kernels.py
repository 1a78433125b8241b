import random

import pytest

from ikdeg import kernels
from ikdeg.kernels import _pykernels


def test_linear_known():
    assert kernels.linear_convolve([1, 2], [3, 4]) == [3, 10, 8]
    assert kernels.linear_convolve([], [1]) == []
    assert kernels.linear_convolve([0, 0], [0]) == [0, 0]


def test_cyclic_known():
    # (1 + x) * (1 + x) mod x^2 - 1 = 2 + 2x
    assert kernels.cyclic_convolve([1, 1], [1, 1]) == [2, 2]
    assert kernels.cyclic_convolve([5], [7]) == [35]


def test_cyclic_length_mismatch():
    with pytest.raises(ValueError):
        kernels.cyclic_convolve([1, 2], [1])


@pytest.mark.parametrize("size", [1, 2, 7, 64, 311])
def test_pure_matches_compiled(size):
    rng = random.Random(size)
    a = [rng.randrange(-10**6, 10**6) for _ in range(size)]
    b = [rng.randrange(-10**6, 10**6) for _ in range(size)]
    assert kernels.linear_convolve(a, b, force="pure") == kernels.linear_convolve(a, b)
    assert kernels.cyclic_convolve(a, b, force="pure") == kernels.cyclic_convolve(a, b)


def test_big_coefficients_fall_back_exactly():
    rng = random.Random(0)
    a = [rng.randrange(-(10**40), 10**40) for _ in range(16)]
    b = [rng.randrange(-(10**40), 10**40) for _ in range(16)]
    assert not kernels._i64_safe(a, b)
    got = kernels.cyclic_convolve(a, b)
    # schoolbook reference
    want = [0] * 16
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            want[(i + j) % 16] += x * y
    assert got == want


def test_kronecker_signs():
    a = [-1, 2, -3]
    b = [4, -5]
    assert _pykernels.linear_convolve(a, b) == [-4, 13, -22, 15]
