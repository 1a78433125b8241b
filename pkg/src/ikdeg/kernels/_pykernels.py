"""Pure-Python convolution kernels.

Exact integer convolution via Kronecker substitution: pack each sequence
into a single big integer with enough headroom per slot, multiply once
(CPython's big-int multiplication is subquadratic), and unpack balanced
digits. Handles arbitrary-precision coefficients, so this is also the
fallback when results would overflow the compiled int64 kernel.
"""


def linear_convolve(a, b):
    """Exact linear convolution of two integer sequences."""
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return []
    max_a = max(abs(x) for x in a)
    max_b = max(abs(x) for x in b)
    if max_a == 0 or max_b == 0:
        return [0] * (na + nb - 1)
    # |c_k| <= min(na, nb) * max|a| * max|b|; keep digits in (-B/2, B/2].
    bound = min(na, nb) * max_a * max_b
    t = bound.bit_length() + 2
    mask = (1 << t) - 1
    half = 1 << (t - 1)
    pa = sum(x << (i * t) for i, x in enumerate(a))
    pb = sum(x << (i * t) for i, x in enumerate(b))
    prod = pa * pb
    out = []
    for _ in range(na + nb - 1):
        d = prod & mask
        if d >= half:
            d -= mask + 1
        out.append(d)
        prod = (prod - d) >> t
    return out


def cyclic_convolve(a, b):
    """Exact cyclic convolution of two equal-length integer sequences."""
    m = len(a)
    if len(b) != m:
        raise ValueError("cyclic convolution needs equal lengths")
    lin = linear_convolve(a, b)
    out = lin[:m] + [0] * (m - len(lin[:m]))
    for i in range(m, len(lin)):
        out[i - m] += lin[i]
    return out
