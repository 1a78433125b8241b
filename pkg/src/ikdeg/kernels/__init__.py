"""Convolution kernel dispatch.

The compiled Cython kernel is used whenever it is available and a
rigorous bound proves every output coefficient fits in int64; otherwise
the pure-Python Kronecker-substitution kernel takes over. Both are exact.
"""

from . import _pykernels

try:
    from . import _ckernels

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover - depends on build environment
    _ckernels = None
    HAVE_COMPILED = False

# Output coefficients bounded by min(len) * max|a| * max|b|; stay well
# below 2^63 to keep the compiled accumulation safe.
_I64_LIMIT = 1 << 62


def _i64_safe(a, b):
    if not a or not b:
        return True
    max_a = max(abs(x) for x in a)
    max_b = max(abs(x) for x in b)
    return min(len(a), len(b)) * max_a * max_b < _I64_LIMIT


def _pick(a, b, force):
    if force == "pure" or _ckernels is None:
        return _pykernels
    if force == "compiled":
        return _ckernels
    return _ckernels if _i64_safe(a, b) else _pykernels


def linear_convolve(a, b, force=None):
    """Exact linear convolution; `force` in {None, 'pure', 'compiled'}."""
    return _pick(a, b, force).linear_convolve(a, b)


def cyclic_convolve(a, b, force=None):
    """Exact cyclic convolution; `force` in {None, 'pure', 'compiled'}."""
    return _pick(a, b, force).cyclic_convolve(a, b)
