"""Hermitian matrices, orthogonal projections, and the Loewner cone.

Everything downstream (joint spectral measures, order predicates, resolution
checks) reduces to the primitives here: a deterministic Hermitian
eigendecomposition, range-basis projections with join/meet, and tolerance-aware
comparisons. Default tolerances follow one convention: absolute thresholds are
scaled by (1 + magnitude of the operands) so the same defaults work for tiny
and large spectra.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, EigenConvergenceError, HermiticityError

TOL_HERM = 1e-10
TOL_ORTH = 1e-10
TOL_PROJ_CMP = 1e-8
TOL_RANK = 1e-9
TOL_PSD = 1e-10


def as_complex_matrix(obj) -> np.ndarray:
    """Coerce to a square complex128 array with finite entries."""
    m = np.asarray(obj, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise ValueError("matrix has non-finite entries")
    return m


def _read_only(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """A Hermitian matrix together with the symmetry defect it was built from.

    The stored matrix is the symmetrization (M + M*)/2 of the input, so its
    eigenvalues are real by construction; ``hermiticity_defect`` records how
    far the raw input was from Hermitian.
    """

    matrix: np.ndarray
    hermiticity_defect: float

    @classmethod
    def from_matrix(cls, m, tol: float | None = None) -> "HermitianOperator":
        m = as_complex_matrix(m)
        defect = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
        scale = float(np.max(np.abs(m))) if m.size else 0.0
        threshold = (TOL_HERM if tol is None else tol) * (1.0 + scale)
        if defect > threshold:
            raise HermiticityError(defect, threshold)
        return cls(matrix=_read_only((m + m.conj().T) / 2.0), hermiticity_defect=defect)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def norm(self) -> float:
        """Frobenius norm of the symmetrized matrix."""
        return float(np.linalg.norm(self.matrix))

    def __repr__(self):
        return f"HermitianOperator(dim={self.dim}, defect={self.hermiticity_defect:.2e})"


def _coerce_hermitian(op) -> np.ndarray:
    if isinstance(op, HermitianOperator):
        return op.matrix
    return HermitianOperator.from_matrix(op).matrix


def _normalize_columns(vectors: np.ndarray, tol: float) -> np.ndarray:
    """Phase-normalize: first entry of magnitude > tol in each column made real positive."""
    v = np.array(vectors)
    for k in range(v.shape[1]):
        col = v[:, k]
        idx = np.flatnonzero(np.abs(col) > tol)
        if idx.size:
            pivot = col[idx[0]]
            v[:, k] = col * (np.conj(pivot) / abs(pivot))
    return v


def hermitian_eig(op, tol_cluster: float = 1e-12) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic eigendecomposition of a Hermitian operator.

    Returns ``(w, V)`` with eigenvalues ``w`` ascending and ``V`` unitary,
    ``op = V diag(w) V*``. Each eigenvector's first entry of magnitude above
    ``tol_cluster`` is made real positive, so repeated runs on the same input
    give identical output.

    Raises
    ------
    EigenConvergenceError
        If the underlying solver fails; carries the residual of the best
        available decomposition.
    """
    m = _coerce_hermitian(op)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError:
        raise EigenConvergenceError(float(np.linalg.norm(m))) from None
    v = _normalize_columns(v, tol_cluster)
    return w.astype(np.float64), v


@dataclass(frozen=True, eq=False)
class Projection:
    """Orthogonal projection stored by an orthonormal basis of its range.

    ``range_basis`` is n x r with orthonormal columns; r = 0 encodes the zero
    projection. The dense matrix V V* is materialized on demand.
    """

    range_basis: np.ndarray
    dim: int = field(default=0)

    def __post_init__(self):
        b = self.range_basis
        if b.ndim != 2:
            raise DimensionError(f"range basis must be 2-d, got shape {b.shape}")
        object.__setattr__(self, "range_basis", _read_only(np.asarray(b, dtype=np.complex128)))
        object.__setattr__(self, "dim", b.shape[0])

    @classmethod
    def zero(cls, n: int) -> "Projection":
        return cls(np.zeros((n, 0), dtype=np.complex128))

    @classmethod
    def identity(cls, n: int) -> "Projection":
        return cls(np.eye(n, dtype=np.complex128))

    @property
    def rank(self) -> int:
        return self.range_basis.shape[1]

    @property
    def matrix(self) -> np.ndarray:
        v = self.range_basis
        return v @ v.conj().T

    def orthonormality_defect(self) -> float:
        v = self.range_basis
        if v.shape[1] == 0:
            return 0.0
        return float(np.max(np.abs(v.conj().T @ v - np.eye(v.shape[1]))))

    def complement(self) -> "Projection":
        """Projection onto the orthogonal complement of the range."""
        v = self.range_basis
        if v.shape[1] == 0:
            return Projection.identity(self.dim)
        if v.shape[1] == self.dim:
            return Projection.zero(self.dim)
        # full SVD of the basis: trailing left singular vectors span the complement
        u, _, _ = np.linalg.svd(v, full_matrices=True)
        return Projection(_normalize_columns(u[:, v.shape[1]:], TOL_ORTH))

    def apply(self, h: np.ndarray) -> np.ndarray:
        v = self.range_basis
        return v @ (v.conj().T @ np.asarray(h, dtype=np.complex128))

    def __repr__(self):
        return f"Projection(dim={self.dim}, rank={self.rank})"


def orthonormalize(columns, tol_rank: float | None = None) -> Projection:
    """Projection onto the column span, rank decided by a singular-value cutoff.

    The cutoff is ``tol_rank`` if given, else 1e-9 times the largest column
    norm; a zero input yields the zero projection.
    """
    c = np.asarray(columns, dtype=np.complex128)
    if c.ndim != 2:
        raise DimensionError(f"expected a 2-d array of columns, got shape {c.shape}")
    n = c.shape[0]
    if c.shape[1] == 0:
        return Projection.zero(n)
    col_norms = np.linalg.norm(c, axis=0)
    cutoff = tol_rank if tol_rank is not None else TOL_RANK * float(col_norms.max())
    if float(col_norms.max()) == 0.0:
        return Projection.zero(n)
    u, s, _ = np.linalg.svd(c, full_matrices=False)
    r = int(np.sum(s > cutoff))
    return Projection(_normalize_columns(u[:, :r], TOL_ORTH))


def proj_leq(p: Projection, q: Projection, tol: float = TOL_PROJ_CMP) -> bool:
    """Range inclusion ran(p) <= ran(q), i.e. p <= q in the projection lattice.

    Decided by the Frobenius residual of p's basis outside q's range:
    ||(I - Q) V_p||_F <= tol * max(1, rank p).
    """
    if p.dim != q.dim:
        raise DimensionError(f"projections on different spaces: {p.dim} vs {q.dim}")
    if p.rank == 0:
        return True
    vp, vq = p.range_basis, q.range_basis
    # (I - Q) V_p computed without forming Q
    residual = vp - vq @ (vq.conj().T @ vp)
    return float(np.linalg.norm(residual)) <= tol * max(1, p.rank)


def subspace_join(p: Projection, q: Projection) -> Projection:
    """Projection onto ran(p) + ran(q)."""
    if p.dim != q.dim:
        raise DimensionError(f"projections on different spaces: {p.dim} vs {q.dim}")
    stacked = np.hstack([p.range_basis, q.range_basis])
    if stacked.shape[1] == 0:
        return Projection.zero(p.dim)
    # columns are unit vectors, so the rank cutoff can be absolute
    return orthonormalize(stacked, tol_rank=TOL_RANK)


def subspace_meet(p: Projection, q: Projection) -> Projection:
    """Projection onto ran(p) ∩ ran(q), via complements: meet = (p' ∨ q')'."""
    return subspace_join(p.complement(), q.complement()).complement()


def is_psd(op, tol: float = TOL_PSD) -> bool:
    """True iff the operator's minimum eigenvalue is >= -tol * (1 + spectral norm)."""
    m = _coerce_hermitian(op)
    if m.shape[0] == 0:
        return True
    w = np.linalg.eigvalsh(m)
    scale = float(np.max(np.abs(w)))
    return float(w[0]) >= -tol * (1.0 + scale)


def commutator_norm(a, b) -> float:
    """Frobenius norm of the commutator ab - ba."""
    am = _coerce_hermitian(a)
    bm = _coerce_hermitian(b)
    if am.shape != bm.shape:
        raise DimensionError(f"shape mismatch: {am.shape} vs {bm.shape}")
    return float(np.linalg.norm(am @ bm - bm @ am))
