"""Permutation enumeration shared by every antisymmetrization backend.

Both backends must walk the same permutations in the same (lexicographic)
order with the same signs, otherwise their floating-point accumulations
diverge in the last bits.
"""

from functools import lru_cache
from itertools import permutations


@lru_cache(maxsize=None)
def permutations_with_parity(n: int) -> tuple[tuple[tuple[int, ...], float], ...]:
    """All permutations of range(n) in lexicographic order, with sign (-1)^inversions."""
    out = []
    for perm in permutations(range(n)):
        inversions = sum(
            perm[i] > perm[j] for i in range(n) for j in range(i + 1, n)
        )
        out.append((perm, -1.0 if inversions % 2 else 1.0))
    return tuple(out)


def inverse_permutation(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for pos, val in enumerate(perm):
        inv[val] = pos
    return tuple(inv)
