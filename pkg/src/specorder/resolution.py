"""Resolutions of the identity: reconstructing a measure from its distribution
function.

A projection-valued step function F on a finite grid stands in for the joint
distribution function of an atomic measure: right-continuous by
representation, zero below the grid, constant past its top corner. The
alternating corner sum over a box recovers the measure of that half-open box;
when every cell's difference is a projection, the nonzero cells are mutually
orthogonal, and the full-grid difference is the identity, the cells assemble
into a joint spectral measure and the map F -> measure inverts taking
distribution functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, OrderError, ValidationError
from .linalg import HermitianOperator, Projection, hermitian_eig
from .spectral import JointSpectralMeasure

TOL_RESOLUTION = 1e-7


@dataclass(frozen=True, eq=False)
class ProjValuedStepFunction:
    """Grid-sampled projection-valued function, right-continuous steps.

    ``axes`` holds each axis's strictly increasing step coordinates and
    ``values`` the projection at every grid point (object array indexed by
    per-axis positions). Below the grid in any axis the value is the zero
    projection by convention; beyond the top it is the top-corner value.
    """

    axes: tuple[np.ndarray, ...]
    values: np.ndarray
    dim: int

    def __post_init__(self):
        if self.values.shape != tuple(a.size for a in self.axes):
            raise DimensionError(
                f"values shape {self.values.shape} does not match grid "
                f"{tuple(a.size for a in self.axes)}")
        for a in self.axes:
            if a.size == 0:
                raise DimensionError("each axis needs at least one step coordinate")
            if np.any(np.diff(a) <= 0):
                raise ValueError("axis coordinates must be strictly increasing")

    @property
    def kappa(self) -> int:
        return len(self.axes)

    @classmethod
    def from_measure(cls, e: JointSpectralMeasure) -> "ProjValuedStepFunction":
        pts = e.points()
        axes = tuple(np.unique(pts[:, j]) for j in range(e.kappa))
        shape = tuple(a.size for a in axes)
        values = np.empty(shape, dtype=object)
        for idx in itertools.product(*[range(s) for s in shape]):
            x = np.array([axes[j][idx[j]] for j in range(e.kappa)])
            values[idx] = e.distribution(x)
        return cls(axes=axes, values=values, dim=e.dim)

    def at_index(self, idx) -> Projection:
        """Value at integer grid positions; -1 in any axis means below the grid."""
        idx = tuple(int(i) for i in idx)
        if len(idx) != self.kappa:
            raise DimensionError(f"index length {len(idx)} for kappa={self.kappa}")
        if any(i < -1 or i >= a.size for i, a in zip(idx, self.axes)):
            raise IndexError(f"grid index {idx} out of range")
        if any(i == -1 for i in idx):
            return Projection.zero(self.dim)
        return self.values[idx]

    def at(self, x) -> Projection:
        """Right-continuous evaluation at an arbitrary point (+-inf allowed)."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.kappa,):
            raise DimensionError(f"point has shape {x.shape}, expected ({self.kappa},)")
        idx = [int(np.searchsorted(a, v, side="right")) - 1 for a, v in zip(self.axes, x)]
        return self.at_index(idx)

    def replace_value(self, idx, proj: Projection) -> "ProjValuedStepFunction":
        """Copy with one grid value swapped; used to build corrupted instances."""
        values = self.values.copy()
        values[tuple(int(i) for i in idx)] = proj
        return ProjValuedStepFunction(axes=self.axes, values=values, dim=self.dim)

    def top_corner(self) -> Projection:
        return self.values[tuple(a.size - 1 for a in self.axes)]

    def __repr__(self):
        shape = tuple(a.size for a in self.axes)
        return f"ProjValuedStepFunction(kappa={self.kappa}, dim={self.dim}, grid={shape})"


def _corner_sum_index(f: ProjValuedStepFunction, lo_idx, hi_idx) -> np.ndarray:
    """Alternating corner sum in index space: measure of the half-open box
    (grid[lo], grid[hi]], with lo_idx entries allowed to be -1."""
    kappa = f.kappa
    acc = np.zeros((f.dim, f.dim), dtype=np.complex128)
    for picks in itertools.product((0, 1), repeat=kappa):
        corner = [hi_idx[j] if picks[j] == 0 else lo_idx[j] for j in range(kappa)]
        sign = (-1.0) ** sum(picks)
        acc += sign * f.at_index(corner).matrix
    return acc


def difference_box(f: ProjValuedStepFunction, a, b) -> HermitianOperator:
    """Measure of the half-open box (a, b] via the 2^kappa corner sum.

    Requires a <= b componentwise (OrderError otherwise); -inf entries in
    ``a`` reach below the grid and +inf entries in ``b`` past its top.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != (f.kappa,) or b.shape != (f.kappa,):
        raise DimensionError(f"corners must have shape ({f.kappa},)")
    if np.any(a > b):
        raise OrderError(f"box corners not ordered: {tuple(a)} !<= {tuple(b)}")
    lo = [int(np.searchsorted(ax, v, side="right")) - 1 for ax, v in zip(f.axes, a)]
    hi = [int(np.searchsorted(ax, v, side="right")) - 1 for ax, v in zip(f.axes, b)]
    m = _corner_sum_index(f, lo, hi)
    return HermitianOperator((m + m.conj().T) / 2.0, 0.0)


@dataclass(frozen=True)
class ResolutionReport:
    """Axiom check outcome for a projection-valued step function.

    Axiom A (box differences are projections) is decided on grid cells plus
    pairwise orthogonality of the nonzero cell differences; finite additivity
    then extends it to every box. Axiom B (right-continuity) holds by
    representation. Axiom C asks the top corner to be the identity.
    """

    axiom_a: bool
    cell_violations: tuple
    orthogonality_violations: tuple
    axiom_b: bool
    axiom_c: bool
    identity_defect: float

    @property
    def passed(self) -> bool:
        return self.axiom_a and self.axiom_b and self.axiom_c

    def __str__(self):
        bits = [f"A={'ok' if self.axiom_a else 'FAIL'}",
                f"B={'ok' if self.axiom_b else 'FAIL'}",
                f"C={'ok' if self.axiom_c else 'FAIL'} "
                f"(identity defect {self.identity_defect:.2e})"]
        if self.cell_violations:
            bits.append(f"first bad box {self.cell_violations[0][0]}")
        return ", ".join(bits)


def _cell_boxes(f: ProjValuedStepFunction):
    """Yield (lo_idx, hi_idx, float box) for every grid cell, lo entries may be -1."""
    shape = tuple(a.size for a in f.axes)
    for idx in itertools.product(*[range(s) for s in shape]):
        lo = tuple(i - 1 for i in idx)
        lo_pt = tuple(float(f.axes[j][lo[j]]) if lo[j] >= 0 else float("-inf")
                      for j in range(f.kappa))
        hi_pt = tuple(float(f.axes[j][idx[j]]) for j in range(f.kappa))
        yield lo, idx, (lo_pt, hi_pt)


def validate_resolution(f: ProjValuedStepFunction,
                        tol: float = TOL_RESOLUTION) -> ResolutionReport:
    """Check the resolution axioms, locating every violating cell box."""
    cell_violations = []
    nonzero: list[tuple[tuple, np.ndarray]] = []
    for lo, hi, box in _cell_boxes(f):
        d = _corner_sum_index(f, lo, hi)
        herm_defect = float(np.max(np.abs(d - d.conj().T)))
        d = (d + d.conj().T) / 2.0
        w = np.linalg.eigvalsh(d)
        dist = float(np.max(np.minimum(np.abs(w), np.abs(w - 1.0)))) if w.size else 0.0
        if herm_defect > tol or dist > tol:
            cell_violations.append((box, f"eigenvalues off {{0,1}} by {max(dist, herm_defect):.3e}"))
        elif float(np.max(np.abs(w))) > tol:
            nonzero.append((box, d))

    orthogonality_violations = []
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            cross = float(np.linalg.norm(nonzero[i][1] @ nonzero[j][1]))
            if cross > tol:
                orthogonality_violations.append(
                    (nonzero[i][0], nonzero[j][0], cross))

    top = f.top_corner().matrix
    identity_defect = float(np.max(np.abs(top - np.eye(f.dim))))
    return ResolutionReport(
        axiom_a=not cell_violations and not orthogonality_violations,
        cell_violations=tuple(cell_violations),
        orthogonality_violations=tuple(orthogonality_violations),
        axiom_b=True,
        axiom_c=identity_defect <= tol,
        identity_defect=identity_defect,
    )


def reconstruct_measure(f: ProjValuedStepFunction, tol: float = TOL_RESOLUTION,
                        cluster_tol: float = 1e-8) -> JointSpectralMeasure:
    """Atoms from nonzero cell differences; inverse of taking distributions.

    Each surviving cell contributes an atom at its top corner whose
    projection comes from the difference's eigenvectors at eigenvalue one.
    Raises ValidationError (carrying the report) when the axioms fail.
    """
    report = validate_resolution(f, tol=tol)
    if not report.passed:
        raise ValidationError(report)
    atoms = []
    for lo, hi, box in _cell_boxes(f):
        d = _corner_sum_index(f, lo, hi)
        d = (d + d.conj().T) / 2.0
        w, v = hermitian_eig(HermitianOperator(d, 0.0))
        cols = v[:, w > 0.5]
        if cols.shape[1] == 0:
            continue
        atoms.append((box[1], Projection(cols)))
    atoms.sort(key=lambda a: a[0])
    return JointSpectralMeasure(kappa=f.kappa, dim=f.dim, atoms=tuple(atoms),
                                cluster_tol=cluster_tol)
