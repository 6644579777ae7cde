"""Pure-numpy backend for the signed permutation sum.

Term order: for each permutation p in lexicographic order, the accumulated
term is sign(p) * a[k[p[0]], ..., k[p[n-1]]].  The compiled backend follows
the identical per-element sequence of multiply/add operations, so the two
produce bit-identical output.
"""

import math

import numpy as np

from ._perm import inverse_permutation, permutations_with_parity


def signed_permutation_sum(a: np.ndarray) -> np.ndarray:
    """(1/n!) * sum over all axis permutations p of sign(p) * permuted(a)."""
    n = a.ndim
    acc = np.zeros_like(a)
    for perm, sign in permutations_with_parity(n):
        # transpose with the inverse permutation realizes
        # term[k] = a[k[perm[0]], ..., k[perm[n-1]]]
        acc += sign * a.transpose(inverse_permutation(perm))
    acc /= float(math.factorial(n))
    return acc
