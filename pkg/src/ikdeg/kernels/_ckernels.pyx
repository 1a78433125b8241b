# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 convolution kernels.

Callers must guarantee that all inputs and every output coefficient fit
in a signed 64-bit integer (the dispatcher checks a rigorous bound
before choosing this path).
"""

from libc.stdlib cimport free, malloc


def linear_convolve(a, b):
    """Exact linear convolution of two int sequences (int64 range)."""
    cdef Py_ssize_t na = len(a), nb = len(b), nc, i, j
    if na == 0 or nb == 0:
        return []
    nc = na + nb - 1
    cdef long long *pa = <long long *> malloc(na * sizeof(long long))
    cdef long long *pb = <long long *> malloc(nb * sizeof(long long))
    cdef long long *pc = <long long *> malloc(nc * sizeof(long long))
    if pa == NULL or pb == NULL or pc == NULL:
        free(pa); free(pb); free(pc)
        raise MemoryError()
    try:
        for i in range(na):
            pa[i] = a[i]
        for i in range(nb):
            pb[i] = b[i]
        for i in range(nc):
            pc[i] = 0
        for i in range(na):
            if pa[i] == 0:
                continue
            for j in range(nb):
                pc[i + j] += pa[i] * pb[j]
        return [pc[i] for i in range(nc)]
    finally:
        free(pa); free(pb); free(pc)


def cyclic_convolve(a, b):
    """Exact cyclic convolution of two equal-length int sequences."""
    cdef Py_ssize_t m = len(a), i, j, k
    if len(b) != m:
        raise ValueError("cyclic convolution needs equal lengths")
    if m == 0:
        return []
    cdef long long *pa = <long long *> malloc(m * sizeof(long long))
    cdef long long *pb = <long long *> malloc(m * sizeof(long long))
    cdef long long *pc = <long long *> malloc(m * sizeof(long long))
    if pa == NULL or pb == NULL or pc == NULL:
        free(pa); free(pb); free(pc)
        raise MemoryError()
    try:
        for i in range(m):
            pa[i] = a[i]
            pb[i] = b[i]
            pc[i] = 0
        for i in range(m):
            if pa[i] == 0:
                continue
            for j in range(m):
                k = i + j
                if k >= m:
                    k -= m
                pc[k] += pa[i] * pb[j]
        return [pc[i] for i in range(m)]
    finally:
        free(pa); free(pb); free(pc)
