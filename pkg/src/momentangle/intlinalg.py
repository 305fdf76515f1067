"""Exact integer and rational matrix algebra.

Everything here runs on Python's arbitrary-precision integers (or
``fractions.Fraction``); no floating point is used anywhere.  The Smith
normal form is the engine behind every lattice question in the package:
kernels, cokernels, primitivity, unimodular completions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


class IntMatrix:
    """Immutable dense integer matrix, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows=None, cols=None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("ragged or mis-shaped matrix data")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows=rows, cols=cols)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]!r})"

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        bt = other.transpose().data
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt]
             for row in self.data],
            rows=self.rows, cols=other.cols)

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix sum")
        return IntMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)],
                         rows=self.rows, cols=self.cols)

    def __neg__(self):
        return IntMatrix([[-a for a in r] for r in self.data],
                         rows=self.rows, cols=self.cols)

    def transpose(self):
        return IntMatrix([[row[i] for row in self.data]
                          for i in range(self.cols)],
                         rows=self.cols, cols=self.rows)

    def is_zero(self):
        return all(a == 0 for row in self.data for a in row)

    def submatrix_cols(self, labels):
        """Columns selected by 1-based labels, in the order given."""
        for j in labels:
            if not 1 <= j <= self.cols:
                raise ValueError(f"column label {j} out of range 1..{self.cols}")
        return IntMatrix([[row[j - 1] for j in labels] for row in self.data],
                         rows=self.rows, cols=len(labels))

    def stack(self, other):
        """Rows of self followed by rows of other."""
        if self.cols != other.cols:
            raise ValueError("dimension mismatch in row stack")
        return IntMatrix(self.data + other.data,
                         rows=self.rows + other.rows, cols=self.cols)

    def mod(self, p):
        return IntMatrix([[a % p for a in row] for row in self.data],
                         rows=self.rows, cols=self.cols)

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "data": [list(r) for r in self.data]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["data"], rows=obj["rows"], cols=obj["cols"])


class RatMatrix:
    """Immutable dense matrix over the rationals (entries in lowest terms)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows=None, cols=None):
        data = tuple(tuple(Fraction(x) for x in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("ragged or mis-shaped matrix data")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    def __eq__(self, other):
        return (isinstance(other, RatMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def clear_denominators(self):
        """Integerize by scaling each row by the LCM of its denominators.

        Row scaling does not change the rational row space or the kernel,
        which is all downstream lattice code cares about.
        """
        out = []
        for row in self.data:
            mult = lcm(*(f.denominator for f in row)) if row else 1
            out.append([int(f * mult) for f in row])
        return IntMatrix(out, rows=self.rows, cols=self.cols)

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "data": [[str(f) for f in r] for r in self.data]}

    @classmethod
    def from_json(cls, obj):
        return cls([[Fraction(s) for s in row] for row in obj["data"]],
                   rows=obj["rows"], cols=obj["cols"])


def det(A):
    """Exact determinant via fraction-free Bareiss elimination."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    M = [list(row) for row in A.data]
    sign = 1
    prev = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        for r in range(c + 1, n):
            for cc in range(c + 1, n):
                M[r][cc] = (M[r][cc] * M[c][c] - M[r][c] * M[c][cc]) // prev
            M[r][c] = 0
        prev = M[c][c]
    return sign * M[n - 1][n - 1]


def rank_rational(A):
    """Rank over Q via fraction-free (Bareiss) echelon reduction."""
    M = [list(row) for row in A.data]
    rank = 0
    prev = 1
    for c in range(A.cols):
        piv = next((r for r in range(rank, A.rows) if M[r][c]), None)
        if piv is None:
            continue
        if piv != rank:
            M[rank], M[piv] = M[piv], M[rank]
        for r in range(rank + 1, A.rows):
            for cc in range(c + 1, A.cols):
                M[r][cc] = (M[r][cc] * M[rank][c] - M[r][c] * M[rank][cc]) // prev
            M[r][c] = 0
        prev = M[rank][c]
        rank += 1
    return rank


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == S with U, V unimodular, S diagonal, d_i | d_{i+1}."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    invariant_factors: tuple

    @property
    def rank(self):
        return len(self.invariant_factors)


def smith(A):
    """Smith normal form with tracked unimodular transforms.

    Pivot rule: smallest nonzero absolute value, ties broken by lowest
    (row, col) — fixed so that golden tests are deterministic.
    """
    n, m = A.rows, A.cols
    S = [list(row) for row in A.data]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        sd, ss = S[dst], S[src]
        for c in range(m):
            sd[c] += q * ss[c]
        ud, us = U[dst], U[src]
        for c in range(n):
            ud[c] += q * us[c]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in S:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while True:
        best = None
        for i in range(t, n):
            for j in range(t, m):
                v = abs(S[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            dirty = False
            for i in range(n):
                if i != t and S[i][t]:
                    q = S[i][t] // S[t][t]
                    add_row(i, t, -q)
                    if S[i][t]:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(m):
                if j != t and S[t][j]:
                    q = S[t][j] // S[t][t]
                    add_col(j, t, -q)
                    if S[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # Row and column t are clear; force the pivot to divide the rest.
            p = S[t][t]
            bad = None
            for i in range(t + 1, n):
                if any(S[i][j] % p for j in range(t + 1, m)):
                    bad = i
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    factors = tuple(S[i][i] for i in range(t))
    return SmithDecomposition(
        U=IntMatrix(U, rows=n, cols=n),
        S=IntMatrix(S, rows=n, cols=m),
        V=IntMatrix(V, rows=m, cols=m),
        invariant_factors=factors)


def kernel_lattice(A):
    """Basis (as rows) of the saturated lattice {x in Z^cols : A x^T = 0}.

    The basis vectors are the last cols - rank(A) columns of V from the
    Smith decomposition, hence automatically primitive.
    """
    sd = smith(A)
    r = sd.rank
    vt = sd.V.transpose()
    return IntMatrix(vt.data[r:], rows=A.cols - r, cols=A.cols)


def is_primitive_rows(A):
    """True iff the rows span a rank-rows direct summand of Z^cols."""
    sd = smith(A)
    return sd.rank == A.rows and all(d == 1 for d in sd.invariant_factors)


def complete_to_unimodular(A):
    """Unimodular M with A @ M == [I_k | 0], for primitive A (k x m).

    Built from U A V = [I_k | 0]: then M = V @ blockdiag(U, I) works,
    since [I_k | 0] @ blockdiag(U, I) = [U | 0] and A V = U^{-1} [I_k | 0].
    """
    k, m = A.rows, A.cols
    sd = smith(A)
    if sd.rank != k or any(d != 1 for d in sd.invariant_factors):
        raise ValueError("rows are not a primitive lattice basis")
    block = [[0] * m for _ in range(m)]
    for i in range(k):
        for j in range(k):
            block[i][j] = sd.U.data[i][j]
    for i in range(k, m):
        block[i][i] = 1
    M = sd.V @ IntMatrix(block, rows=m, cols=m)
    prod = A @ M
    expected = IntMatrix([[int(i == j) for j in range(m)] for i in range(k)],
                         rows=k, cols=m)
    assert prod == expected, "unimodular completion postcondition failed"
    assert det(M) in (1, -1), "completion matrix is not unimodular"
    return M


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Z^ambient / (column lattice), in Smith-normalized coordinates.

    generator_images column j gives the image of the j-th ambient basis
    vector; its rows are the torsion coordinates (mod their invariant
    factor, in divisibility order) followed by the free coordinates.
    """

    free_rank: int
    torsion: tuple
    generator_images: IntMatrix

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion),
                "generator_images": self.generator_images.to_json()}


def cokernel(A):
    """Presentation of Z^rows / image(x -> A x)."""
    sd = smith(A)
    r = sd.rank
    torsion = tuple(d for d in sd.invariant_factors if d > 1)
    free_rank = A.rows - r
    kept = [i for i in range(r) if sd.invariant_factors[i] > 1]
    kept += list(range(r, A.rows))
    images = []
    for idx, i in enumerate(kept):
        row = list(sd.U.data[i])
        if idx < len(torsion):
            row = [x % torsion[idx] for x in row]
        images.append(row)
    return AbelianGroupPresentation(
        free_rank=free_rank, torsion=torsion,
        generator_images=IntMatrix(images, rows=len(kept), cols=A.rows))


def image_contains(A, b):
    """Does A x = b have an integer solution?  b is a length-rows vector."""
    if len(b) != A.rows:
        raise ValueError("vector length does not match row count")
    sd = smith(A)
    c = [sum(u * x for u, x in zip(row, b)) for row in sd.U.data]
    r = sd.rank
    for i in range(r):
        if c[i] % sd.invariant_factors[i]:
            return False
    return all(c[i] == 0 for i in range(r, A.rows))


def hermite_normal_form(A):
    """Row-style Hermite normal form of the row lattice; zero rows dropped.

    Canonical: pivots positive, entries above each pivot reduced into
    [0, pivot).  Two integer matrices span the same row lattice iff their
    HNFs are equal, which is how lattice equality and search dedup work.
    """
    H = [list(row) for row in A.data]
    nrows, ncols = A.rows, A.cols
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if H[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(H[i][c]), i))
            if piv != r:
                H[r], H[piv] = H[piv], H[r]
            done = True
            for i in range(r + 1, nrows):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < nrows and H[r][c]:
            if H[r][c] < 0:
                H[r] = [-x for x in H[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
            r += 1
    return IntMatrix(H[:r], rows=r, cols=ncols)


def row_lattice_equal(A, B):
    if A.cols != B.cols:
        return False
    return hermite_normal_form(A) == hermite_normal_form(B)


# ---------------------------------------------------------------------------
# GF(2) helpers (bitmask rows) shared by homology and the face-ring code.

def rows_to_bitmasks(A):
    out = []
    for row in A.data:
        mask = 0
        for j, a in enumerate(row):
            if a & 1:
                mask |= 1 << j
        out.append(mask)
    return out


def rref_mod2(bitrows):
    """Reduced row echelon form over GF(2).

    Returns (rows, pivots): reduced nonzero rows and their pivot bit
    positions, both sorted by pivot position.
    """
    basis = {}  # pivot position -> row
    for row in bitrows:
        while row:
            p = row.bit_length() - 1
            if p in basis:
                row ^= basis[p]
            else:
                basis[p] = row
                break
    # Back-substitute to full reduction.
    for p in sorted(basis):
        for q in list(basis):
            if q != p and (basis[q] >> p) & 1:
                basis[q] ^= basis[p]
    pivots = sorted(basis)
    return [basis[p] for p in pivots], pivots


def rank_mod2(A):
    rows, _ = rref_mod2(rows_to_bitmasks(A))
    return len(rows)
