"""Hook partitions, hook semistandard tableaux, and dimension bookkeeping.

A partition lambda is a (k, l)-hook partition when lambda_{k+1} <= l, i.e.
its diagram fits in the union of k rows and l columns.  Hook semistandard
tableaux over the split alphabet 1 < ... < k < 1' < ... < l' (the first k
letters even, the last l odd) fill the diagram so that

  * rows weakly increase left to right and columns weakly increase downward,
  * even letters strictly increase down columns,
  * odd letters strictly increase along rows.

Counting them gives the graded dimensions that every flatness and kernel
check in the rest of the package is measured against.
"""

from __future__ import annotations

from math import comb


def enumerate_hook_partitions(k: int, l: int, size: int) -> list[tuple[int, ...]]:
    """All (k, l)-hook partitions of `size`, lexicographically descending."""
    out = []

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(max_part, remaining), 0, -1):
            # rows past the k-th must fit in l columns
            if len(prefix) >= k and part > l:
                continue
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(size, size if size else 0, [])
    out.sort(reverse=True)
    return out


def transpose_partition(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def lambda_natural(lam, m: int, n: int):
    """Split a hook shape into its (m, n) row/column halves.

    Returns (mu, nu): mu = (lambda_1, ..., lambda_m) and
    nu_j = max(lambda'_j - m, 0) for j = 1..n.  Valid input is an
    (m, n)-hook partition; its diagram is exactly mu plus the transposed nu.
    """
    lam = tuple(lam)
    if len(lam) > m and lam[m] > n:
        raise ValueError(f"{lam} is not an ({m}, {n})-hook partition")
    mu = tuple(lam[i] if i < len(lam) else 0 for i in range(m))
    lamt = transpose_partition(lam)
    nu = tuple(max((lamt[j] if j < len(lamt) else 0) - m, 0) for j in range(n))
    return mu, nu


def hook_tableaux_dim(lam, k: int, l: int) -> int:
    """Number of hook semistandard tableaux of shape lam over alphabet (k, l)."""
    lam = tuple(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(
        p <= 0 for p in lam
    ):
        raise ValueError(f"not a partition: {lam}")
    if len(lam) > k and lam[k] > l:
        return 0
    nletters = k + l
    count = 0
    # cells in row-major order; value v is even iff v <= k
    cells = [(r, c) for r, row_len in enumerate(lam) for c in range(row_len)]
    filling = {}

    def ok(r, c, v):
        left = filling.get((r, c - 1))
        if left is not None:
            if v < left or (v == left and v > k):
                return False
        above = filling.get((r - 1, c))
        if above is not None:
            if v < above or (v == above and v <= k):
                return False
        return True

    def rec(idx):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        for v in range(1, nletters + 1):
            if ok(r, c, v):
                filling[(r, c)] = v
                rec(idx + 1)
        filling.pop((r, c), None)

    rec(0)
    return count


def howe_dim_sum(k: int, l: int, r: int, s: int, size: int) -> int:
    """Sum of dim(k,l) * dim(r,s) over shapes hook for both alphabets."""
    total = 0
    for lam in enumerate_hook_partitions(k, l, size):
        if len(lam) > r and lam[r] > s:
            continue
        total += hook_tableaux_dim(lam, k, l) * hook_tableaux_dim(lam, r, s)
    return total


def supermatrix_monomial_count(k: int, l: int, r: int, s: int, size: int) -> int:
    """Number of exponent grids of total degree `size` on a (k+l) x (r+s)
    matrix whose (a, b) cell is odd (multiplicity 0 or 1) iff the parities
    of a and b differ, and even (unbounded) otherwise."""
    n_odd = k * s + l * r
    n_even = k * r + l * s
    total = 0
    for j in range(min(n_odd, size) + 1):
        rest = size - j
        if n_even == 0:
            even_ways = 1 if rest == 0 else 0
        else:
            even_ways = comb(rest + n_even - 1, n_even - 1)
        total += comb(n_odd, j) * even_ways
    return total


def contains_rectangle(lam, height: int, width: int) -> bool:
    """Does the diagram of lam contain the height x width rectangle?"""
    lam = tuple(lam)
    return len(lam) >= height and (height == 0 or lam[height - 1] >= width)


def kernel_dim_prediction(
    k: int, l: int, r: int, s: int, m: int, n: int, size: int
) -> int:
    """Predicted kernel dimension in degree `size`: the Howe sum restricted
    to shapes containing the (m+1) x (n+1) rectangle."""
    total = 0
    for lam in enumerate_hook_partitions(k, l, size):
        if len(lam) > r and lam[r] > s:
            continue
        if not contains_rectangle(lam, m + 1, n + 1):
            continue
        total += hook_tableaux_dim(lam, k, l) * hook_tableaux_dim(lam, r, s)
    return total


def emit_dimension_table(k: int, l: int, r: int, s: int, size: int) -> dict:
    """JSON-ready dimension table for one degree."""
    partitions = []
    total = 0
    for lam in enumerate_hook_partitions(k, l, size):
        if len(lam) > r and lam[r] > s:
            continue
        dl = hook_tableaux_dim(lam, k, l)
        dr = hook_tableaux_dim(lam, r, s)
        partitions.append(
            {"shape": list(lam), "dim_left": dl, "dim_right": dr}
        )
        total += dl * dr
    return {
        "params": {"k": k, "l": l, "r": r, "s": s},
        "size": size,
        "partitions": partitions,
        "total": total,
    }
