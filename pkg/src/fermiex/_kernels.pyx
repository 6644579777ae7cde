# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled backend for the signed permutation sum.

Accumulates terms in lexicographic permutation order with one multiply/add
per element and permutation, matching the pure-numpy backend bit for bit.
"""

import math

import numpy as np

cimport numpy as cnp

from ._perm import inverse_permutation, permutations_with_parity

cnp.import_array()


def signed_permutation_sum(a):
    """(1/n!) * sum over all axis permutations p of sign(p) * permuted(a)."""
    a = np.ascontiguousarray(a, dtype=np.complex128)
    cdef Py_ssize_t n = a.ndim
    cdef Py_ssize_t dim = a.shape[0]
    out = np.zeros_like(a)

    cdef double complex[::1] av = a.reshape(-1)
    cdef double complex[::1] ov = out.reshape(-1)
    cdef Py_ssize_t total = av.shape[0]

    # C-order strides (in elements) of the output multi-index.
    strides_arr = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t[::1] strides = strides_arr
    cdef Py_ssize_t m
    for m in range(n):
        strides[m] = dim ** (n - 1 - m)

    sstr_arr = np.empty(n, dtype=np.intp)
    digits_arr = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t[::1] sstr = sstr_arr
    cdef Py_ssize_t[::1] digits = digits_arr

    cdef double sgn
    cdef Py_ssize_t f, src
    for perm, sign in permutations_with_parity(n):
        inv = inverse_permutation(perm)
        # source flat index for output digits k is sum_j k[j] * sstr[j],
        # realizing term[k] = a[k[perm[0]], ..., k[perm[n-1]]]
        for m in range(n):
            sstr[m] = strides[inv[m]]
        sgn = sign
        with nogil:
            for m in range(n):
                digits[m] = 0
            src = 0
            for f in range(total):
                ov[f] = ov[f] + sgn * av[src]
                # odometer increment of the output digits, keeping src in step
                m = n - 1
                while m >= 0:
                    digits[m] += 1
                    src += sstr[m]
                    if digits[m] < dim:
                        break
                    digits[m] = 0
                    src -= dim * sstr[m]
                    m -= 1

    out /= float(math.factorial(n))
    return out
