"""Exact linear algebra over Z[q, q^-1].

Rank, nullspace and span dimensions are computed by fraction-free (Bareiss)
Gaussian elimination: every division performed is exact in the Laurent ring,
so results are generic-q ranks with no specialization and no rounding.
Pivoting is deterministic (first nonzero entry, columns left to right, rows
top to bottom), which makes kernel bases reproducible for golden tests.

Kernel vectors are produced by fraction-free back substitution, then
normalized: divided by the gcd of their integer coefficients and by the
lowest common power of q, and sign-fixed so the first nonzero entry has a
positive leading (highest-exponent) coefficient.  No polynomial gcd is
taken beyond that.
"""

from __future__ import annotations

from math import gcd

from .laurent import ONE, ZERO, LaurentInt, lau_div_exact


class CoeffVector:
    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(entries)
        if not all(isinstance(e, LaurentInt) for e in entries):
            raise TypeError("CoeffVector entries must be LaurentInt")
        self.entries = entries

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        return isinstance(other, CoeffVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "CoeffVector([" + ", ".join(str(e) for e in self.entries) + "])"


class CoeffMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("ragged matrix")
            for r in rows:
                if not all(isinstance(e, LaurentInt) for e in r):
                    raise TypeError("CoeffMatrix entries must be LaurentInt")
        self.rows = rows

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[ZERO] * ncols for _ in range(nrows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, CoeffMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return CoeffMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return CoeffMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def scale(self, c):
        return CoeffMatrix([[c * e for e in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, CoeffVector):
            if self.ncols != len(other):
                raise ValueError("shape mismatch")
            out = []
            for r in self.rows:
                acc = ZERO
                for a, b in zip(r, other.entries):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
            return CoeffVector(out)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        bt = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            row = []
            for c in bt:
                acc = ZERO
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return CoeffMatrix(out)

    def transpose(self):
        return CoeffMatrix(list(zip(*self.rows)) if self.rows else [])

    def kron(self, other):
        """Kronecker product, row index (i1, i2), column index (j1, j2)."""
        out = []
        for r1 in self.rows:
            for r2 in other.rows:
                out.append([a * b for a in r1 for b in r2])
        return CoeffMatrix(out)

    def is_zero(self):
        return all(not e for r in self.rows for e in r)

    def __repr__(self):
        return f"CoeffMatrix({self.nrows}x{self.ncols})"


def _echelon(rows):
    """Fraction-free row echelon form; returns (rows, pivot column list).

    One-step Bareiss: entries stay in the ring, each elimination divides by
    the previous pivot exactly (Sylvester identity guarantees divisibility).
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    prev = ONE
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            ric = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            if ric:
                for j in range(c, ncols):
                    row_i[j] = lau_div_exact(piv * row_i[j] - ric * row_r[j], prev)
            else:
                for j in range(c, ncols):
                    if row_i[j]:
                        row_i[j] = lau_div_exact(piv * row_i[j], prev)
        pivots.append(c)
        prev = piv
        r += 1
    return rows, pivots


def rank(matrix: CoeffMatrix) -> int:
    """Rank over the fraction field Q(q), computed exactly."""
    _, pivots = _echelon(matrix.rows)
    return len(pivots)


def _normalize_kernel_vector(vec):
    content = 0
    shift = None
    for v in vec:
        for e, c in v.terms.items():
            content = gcd(content, c)
            shift = e if shift is None else min(shift, e)
    if content == 0:
        return vec
    lead = next(v for v in vec if v)
    sign = 1 if lead.terms[lead.max_exp()] > 0 else -1
    content *= sign
    return [
        LaurentInt._raw({e - shift: c // content for e, c in v.terms.items()})
        for v in vec
    ]


def nullspace(matrix: CoeffMatrix) -> list[CoeffVector]:
    """Exact kernel basis, one vector per free column; M @ v == 0 exactly."""
    ncols = matrix.ncols
    ech, pivots = _echelon(matrix.rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        # bottom-up: rows below a pivot row have zeros left of their own
        # pivot, so scaling the whole vector keeps them satisfied
        for i in range(len(pivots) - 1, -1, -1):
            p = pivots[i]
            if p > free:
                continue
            row = ech[i]
            t = ZERO
            for j in range(p + 1, ncols):
                if row[j] and vec[j]:
                    t = t + row[j] * vec[j]
            piv = row[p]
            vec = [piv * x for x in vec]
            vec[p] = -t
        basis.append(CoeffVector(_normalize_kernel_vector(vec)))
    return basis


def column_span_dim(vectors) -> int:
    """Dimension of the span of the given CoeffVectors."""
    vectors = list(vectors)
    if not vectors:
        return 0
    cols = [list(v) for v in vectors]
    matrix = CoeffMatrix(list(zip(*cols)))
    return rank(matrix)
