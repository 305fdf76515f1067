"""Subtorus actions on moment-angle complexes, decided combinatorially.

A k-dimensional subtorus of T^m is stored as a primitive k x m integer
matrix A (rows = a lattice basis of the cocharacter sublattice).  Whether
the subtorus acts freely on Z_K reduces to a condition on the columns of
A outside each facet: the induced map into the complementary coordinate
torus must be injective, i.e. the submatrix has full rank and unit
invariant factors.  The space itself is never built.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .intlinalg import (IntMatrix, complete_to_unimodular, det,
                        hermite_normal_form, is_primitive_rows,
                        kernel_lattice, rank_rational, row_lattice_equal,
                        smith)
from .simplicial import SimplicialComplex


class PreconditionError(ValueError):
    """A stated hypothesis of an operation is violated (as opposed to the
    operation legitimately answering False)."""


@dataclass(frozen=True)
class Subtorus:
    """Embedded k-torus in T^m, given by a primitive k x m row basis."""

    matrix: IntMatrix

    def __post_init__(self):
        if not is_primitive_rows(self.matrix):
            raise ValueError(
                "rows must be a primitive full-rank lattice basis")

    @property
    def k(self):
        return self.matrix.rows

    @property
    def m(self):
        return self.matrix.cols

    def row_lattice_key(self):
        return hermite_normal_form(self.matrix)

    def to_json(self):
        return {"m": self.m, "rows": [list(r) for r in self.matrix.data]}

    @classmethod
    def from_json(cls, obj):
        rows = obj["rows"]
        return cls(IntMatrix(rows, rows=len(rows), cols=obj["m"]))


def cyclic69_free_subtorus() -> Subtorus:
    """The 2-torus in T^9 acting freely on the moment-angle manifold of
    the boundary of the cyclic polytope C_6(9)."""
    return Subtorus(IntMatrix([
        [1, 0, 1, 0, 1, 0, 1, 0, 1],
        [0, 1, 0, 1, 0, 1, 0, 1, 1],
    ]))


def cyclic69_quotient_matrix() -> IntMatrix:
    """The 7 x 9 matrix whose kernel torus is cyclic69_free_subtorus()."""
    return IntMatrix([
        [-1, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, -1, 0, 1, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 1, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 1, 0, 0],
        [0, -1, 0, 0, 0, 0, 0, 1, 0],
        [-1, -1, 0, 0, 0, 0, 0, 0, 1],
    ])


def _complement(sigma, m):
    sset = set(sigma)
    return tuple(v for v in range(1, m + 1) if v not in sset)


def _injective_on_cols(A: IntMatrix, cols) -> bool:
    """Does the column submatrix define an injective torus homomorphism?

    True iff rank equals the row count and all invariant factors are 1.
    """
    sd = smith(A.submatrix_cols(cols))
    return sd.rank == A.rows and all(d == 1 for d in sd.invariant_factors)


@dataclass(frozen=True)
class FreenessResult:
    free: bool
    witness: Optional[tuple]  # first offending facet, canonical order

    def __bool__(self):
        return self.free


def _check_action_input(T: Subtorus, K: SimplicialComplex):
    if T.m != K.m:
        raise ValueError(f"ambient rank {T.m} != vertex count {K.m}")
    if not K.is_pure():
        raise PreconditionError(
            "complex is not pure; freeness of the quotient setting "
            "requires purity")


def acts_freely(T: Subtorus, K: SimplicialComplex) -> FreenessResult:
    """Free action test, one submatrix check per facet."""
    _check_action_input(T, K)
    for sigma in K.facets:
        if not _injective_on_cols(T.matrix, _complement(sigma, K.m)):
            return FreenessResult(False, sigma)
    return FreenessResult(True, None)


def acts_almost_freely(T: Subtorus, K: SimplicialComplex) -> bool:
    """Finite isotropy everywhere: rational rank k outside every facet."""
    _check_action_input(T, K)
    k = T.k
    return all(
        rank_rational(T.matrix.submatrix_cols(_complement(sigma, K.m))) == k
        for sigma in K.facets)


def is_rational_characteristic(lam: IntMatrix, K: SimplicialComplex) -> bool:
    """Columns indexed by every simplex linearly independent over Q.

    Checking maximal faces suffices: subsets of independent columns stay
    independent.
    """
    if lam.cols != K.m:
        raise ValueError(f"column count {lam.cols} != vertex count {K.m}")
    if K.facets and lam.rows < max(len(f) for f in K.facets):
        raise ValueError("fewer rows than the largest facet size")
    for sigma in K.facets:
        if rank_rational(lam.submatrix_cols(sigma)) != len(sigma):
            return False
    return True


def characteristic_duality_holds(lam: IntMatrix, theta: IntMatrix,
                                 K: SimplicialComplex) -> bool:
    """For jointly independent, mutually orthogonal row systems on a pure
    complex: det of the facet columns of lam is nonzero exactly when det
    of the complementary columns of theta is.

    Under the preconditions this must always hold; it is used as an
    executable-theorem oracle in the property suite.  Violated
    preconditions raise PreconditionError rather than returning False.
    """
    m = K.m
    if lam.cols != m or theta.cols != m:
        raise PreconditionError("column counts must equal the vertex count")
    if lam.rows + theta.rows != m:
        raise PreconditionError("row counts must sum to the vertex count")
    if not K.is_pure():
        raise PreconditionError("complex must be pure")
    if K.facets and len(K.facets[0]) != lam.rows:
        raise PreconditionError("facet size must equal lam's row count")
    if not (lam @ theta.transpose()).is_zero():
        raise PreconditionError("row systems are not orthogonal")
    if rank_rational(lam.stack(theta)) != m:
        raise PreconditionError("rows are not jointly independent over Q")
    for sigma in K.facets:
        left = det(lam.submatrix_cols(sigma)) != 0
        right = det(theta.submatrix_cols(_complement(sigma, m))) != 0
        if left != right:
            return False
    return True


def torus_from_kernel(lam: IntMatrix) -> Subtorus:
    """Identity component of the kernel of the torus map defined by lam."""
    return Subtorus(kernel_lattice(lam))


@dataclass(frozen=True)
class ExtensionResult:
    success: bool
    theta_full: Optional[IntMatrix]
    lam: Optional[IntMatrix]
    tries: int
    message: str = ""


def extend_to_characteristic(T: Subtorus, K: SimplicialComplex,
                             entry_bound: Optional[int] = None,
                             max_tries: int = 100_000,
                             seed: int = 0) -> ExtensionResult:
    """Extend T's rows to an (m-n) x m matrix with nonzero dets on all
    facet complements, by seeded rejection sampling of the missing rows.

    Generic rows succeed with probability approaching 1 as the entry
    bound grows, so failure after max_tries is reported, not raised.  The
    returned lam is a kernel basis of the extended matrix, verified to be
    a rational characteristic matrix of K with T inside its kernel torus.
    """
    _check_action_input(T, K)
    m = K.m
    n = K.dimension + 1
    need = m - n - T.k
    if need < 0:
        raise ValueError(f"subtorus dimension {T.k} exceeds m - n = {m - n}")
    bound = entry_bound if entry_bound is not None else max(3, m)
    rng = random.Random(seed)
    comps = [_complement(sigma, m) for sigma in K.facets]

    def dets_ok(theta_full):
        return all(det(theta_full.submatrix_cols(c)) != 0 for c in comps)

    tries = 0
    while tries < max(max_tries, 1):
        tries += 1
        extra = [[rng.randint(-bound, bound) for _ in range(m)]
                 for _ in range(need)]
        theta_full = T.matrix.stack(IntMatrix(extra, rows=need, cols=m))
        if not dets_ok(theta_full):
            if need == 0:
                break  # nothing is being sampled; retrying cannot help
            continue
        lam = kernel_lattice(theta_full)
        if is_rational_characteristic(lam, K):
            return ExtensionResult(True, theta_full, lam, tries)
        if need == 0:
            break
    return ExtensionResult(False, None, None, tries,
                           f"no valid extension in {tries} tries "
                           f"(entry bound {bound})")


def quotient_projection(T: Subtorus) -> IntMatrix:
    """(m-k) x m matrix presenting T^m -> T^m/T, with T as exact kernel.

    Rows are the last m-k columns of the unimodular completion M with
    A M = [I_k | 0]; postconditions are asserted on every call.
    """
    m, k = T.m, T.k
    if k == 0:
        return IntMatrix.identity(m)
    M = complete_to_unimodular(T.matrix)
    theta = IntMatrix([[M.data[i][j] for i in range(m)]
                       for j in range(k, m)], rows=m - k, cols=m)
    assert (theta @ T.matrix.transpose()).is_zero()
    assert is_primitive_rows(theta)
    assert row_lattice_equal(kernel_lattice(theta), T.matrix)
    return theta
