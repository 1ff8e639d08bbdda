"""Finite atomic measures on R^kappa and the iota-order machinery.

The partial orders <=_iota compare the first iota coordinates by <= and
require the rest to agree exactly. Lower sets, l1 distances to them,
monotonicity audits, CDF comparisons on merged grids, and enumeration of
downward-closed atom subsets all live here; they are the scalar shadow of the
projection-valued checks in the order module, and the two are tied together
through vector-state measures of commuting tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CapExceededError,
    DimensionError,
    EmptyGeneratorError,
    MassMismatchError,
    ParameterError,
)
from .functions import BorelFunction, indicator_fn
from .spectral import CommutingTuple, joint_measure

PREMERGE_TOL = 1e-9
IDEAL_CAP = 20
MASS_TOL = 1e-9
MOLLIFIER_LEVELS = (1, 2, 4, 8)


def _check_iota(iota: int, kappa: int) -> int:
    if not isinstance(iota, (int, np.integer)) or not 1 <= iota <= kappa:
        raise ParameterError(f"iota must be an integer in 1..{kappa}, got {iota!r}")
    return int(iota)


def leq_iota(x, y, iota: int) -> bool:
    """x <=_iota y: first iota coordinates <=, trailing coordinates exactly equal."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise DimensionError(f"points of shapes {x.shape} and {y.shape}")
    iota = _check_iota(iota, x.shape[0])
    return bool(np.all(x[:iota] <= y[:iota]) and np.all(x[iota:] == y[iota:]))


@dataclass(frozen=True, eq=False)
class AtomicMeasure:
    """Nonnegative atomic measure: distinct points with positive-weight atoms.

    Construction pre-merges points within PREMERGE_TOL in the sup norm (first
    occurrence is the representative, weights add), then sorts
    lexicographically, so stored points compare exactly.
    """

    points: np.ndarray
    weights: np.ndarray

    @classmethod
    def from_atoms(cls, points, weights) -> "AtomicMeasure":
        pts = np.asarray(points, dtype=np.float64)
        w = np.asarray(weights, dtype=np.float64)
        if pts.ndim != 2:
            raise DimensionError(f"points must be (k, kappa), got shape {pts.shape}")
        if w.shape != (pts.shape[0],):
            raise DimensionError(f"{pts.shape[0]} points but {w.shape} weights")
        if np.any(w < 0):
            raise ParameterError("weights must be nonnegative")
        reps: list[np.ndarray] = []
        acc: list[float] = []
        for i in range(pts.shape[0]):
            for k, rep in enumerate(reps):
                if np.max(np.abs(pts[i] - rep), initial=0.0) <= PREMERGE_TOL:
                    acc[k] += float(w[i])
                    break
            else:
                reps.append(pts[i])
                acc.append(float(w[i]))
        if reps:
            order = sorted(range(len(reps)), key=lambda k: tuple(reps[k]))
            out_p = np.array([reps[k] for k in order], dtype=np.float64)
            out_w = np.array([acc[k] for k in order], dtype=np.float64)
        else:
            out_p = pts.reshape(0, pts.shape[1])
            out_w = np.zeros(0)
        out_p.setflags(write=False)
        out_w.setflags(write=False)
        return cls(points=out_p, weights=out_w)

    @property
    def kappa(self) -> int:
        return self.points.shape[1]

    @property
    def n_atoms(self) -> int:
        return self.points.shape[0]

    def total_mass(self) -> float:
        return float(np.sum(self.weights))

    def integrate(self, f) -> float:
        """Integral of a scalar rule against the measure."""
        return float(sum(w * float(f(p)) for p, w in zip(self.points, self.weights)))

    def cdf(self, x) -> float:
        x = np.asarray(x, dtype=np.float64)
        if self.n_atoms == 0:
            return 0.0
        keep = np.all(self.points <= x, axis=1)
        return float(np.sum(self.weights[keep]))

    def __repr__(self):
        return f"AtomicMeasure(kappa={self.kappa}, atoms={self.n_atoms})"


def tuple_scalar_measure(t: CommutingTuple, h, cluster_tol: float | None = None) -> AtomicMeasure:
    """Vector-state measure of a tuple: atom weights ||P_lambda h||^2.

    Integrating x^{2 alpha} against it gives ||A^alpha h||^2, which the growth
    and bounded-vector checks exploit.
    """
    e = joint_measure(t) if cluster_tol is None else joint_measure(t, cluster_tol)
    h = np.asarray(h, dtype=np.complex128)
    if h.shape != (t.dim,):
        raise DimensionError(f"vector has shape {h.shape}, expected ({t.dim},)")
    pts, ws = [], []
    for pt, proj in e.atoms:
        ws.append(float(np.linalg.norm(proj.apply(h)) ** 2))
        pts.append(pt)
    return AtomicMeasure.from_atoms(np.array(pts), np.array(ws))


@dataclass(frozen=True, eq=False)
class LowerSetGen:
    """iota-lower set given by finitely many generators: union of down-sets of each."""

    iota: int
    generators: np.ndarray

    @classmethod
    def from_points(cls, generators, iota: int) -> "LowerSetGen":
        g = np.asarray(generators, dtype=np.float64)
        if g.ndim != 2:
            raise DimensionError(f"generators must be (m, kappa), got shape {g.shape}")
        if g.shape[0] == 0:
            raise EmptyGeneratorError("a lower set needs at least one generator")
        iota = _check_iota(iota, g.shape[1])
        g = np.array(g)
        g.setflags(write=False)
        return cls(iota=iota, generators=g)

    @property
    def kappa(self) -> int:
        return self.generators.shape[1]


def lower_membership(gen: LowerSetGen, x) -> bool:
    """x in the iota-lower set generated by gen."""
    x = np.asarray(x, dtype=np.float64)
    return any(leq_iota(x, y, gen.iota) for y in gen.generators)


def lower_distance(gen: LowerSetGen, x) -> float:
    """l1 distance from x to the generated lower set, in closed form.

    For a single generator y the down-set constrains the first iota
    coordinates from above and pins the rest, so the distance is
    sum_{j<iota} max(x_j - y_j, 0) + sum_{j>=iota} |x_j - y_j|; the distance
    to the union is the minimum over generators.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (gen.kappa,):
        raise DimensionError(f"point has shape {x.shape}, expected ({gen.kappa},)")
    i = gen.iota
    head = np.maximum(x[:i] - gen.generators[:, :i], 0.0).sum(axis=1)
    tail = np.abs(x[i:] - gen.generators[:, i:]).sum(axis=1)
    return float(np.min(head + tail))


def epsilon_fatten(gen: LowerSetGen, eps: float):
    """Membership predicate of the closed eps-fattening in the l1 distance."""
    if not eps > 0:
        raise ParameterError(f"fattening radius must be positive, got {eps!r}")
    return lambda x: lower_distance(gen, x) <= eps


def lower_indicator_complement(gen: LowerSetGen) -> BorelFunction:
    """Indicator of the complement of the lower set: the canonical bounded
    iota-increasing test function."""
    return indicator_fn(lambda x: not lower_membership(gen, x),
                        tag=f"co-lower[iota={gen.iota}]", monotone_iota=gen.iota)


def lower_mollifier(gen: LowerSetGen, level: int) -> BorelFunction:
    """Continuous surrogate min(1, level * distance): increasing, 0 on the set."""
    if level <= 0:
        raise ParameterError(f"mollifier level must be positive, got {level!r}")
    return BorelFunction(
        tag=f"mollifier[iota={gen.iota}, n={level}]",
        fn=lambda x: min(1.0, level * lower_distance(gen, x)),
        monotone_iota=gen.iota,
    )


@dataclass(frozen=True)
class AuditResult:
    ok: bool
    counterexample: tuple | None  # (x, y) with x <=_iota y but f(x) > f(y)

    def __bool__(self):
        return self.ok


def audit_iota_increasing(f, points, iota: int, tol: float = 0.0) -> AuditResult:
    """Check f(x) <= f(y) for every comparable pair x <=_iota y in the point set.

    Cross-checked against a sublevel-set formulation: every sublevel set of f
    restricted to the points must be downward closed under <=_iota. The two
    routes are algebraically equivalent; disagreement would mean a coding
    error, so it raises.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2:
        raise DimensionError(f"points must be (m, kappa), got shape {pts.shape}")
    iota = _check_iota(iota, pts.shape[1]) if pts.shape[0] else iota
    values = [float(f(p)) for p in pts]
    witness = None
    for a in range(pts.shape[0]):
        for b in range(pts.shape[0]):
            if a != b and leq_iota(pts[a], pts[b], iota) and values[a] > values[b] + tol:
                witness = (tuple(map(float, pts[a])), tuple(map(float, pts[b])))
                break
        if witness:
            break

    sublevel_ok = True
    for level in sorted(set(values)):
        inside = [i for i, v in enumerate(values) if v <= level]
        for i in inside:
            for j in range(pts.shape[0]):
                if values[j] > level + tol and leq_iota(pts[j], pts[i], iota):
                    sublevel_ok = False
    if sublevel_ok != (witness is None):
        raise AssertionError("monotonicity audit routes disagree")
    return AuditResult(ok=witness is None, counterexample=witness)


def _merged_support(mu1: AtomicMeasure, mu2: AtomicMeasure):
    """Common atom list (pre-merged across the pair) with both weight vectors."""
    if mu1.kappa != mu2.kappa:
        raise DimensionError(f"measures on R^{mu1.kappa} vs R^{mu2.kappa}")
    reps: list[np.ndarray] = []
    w1: list[float] = []
    w2: list[float] = []
    for pts, ws, target in ((mu1.points, mu1.weights, 1), (mu2.points, mu2.weights, 2)):
        for p, w in zip(pts, ws):
            for k, rep in enumerate(reps):
                if np.max(np.abs(p - rep), initial=0.0) <= PREMERGE_TOL:
                    (w1 if target == 1 else w2)[k] += float(w)
                    break
            else:
                reps.append(p)
                w1.append(float(w) if target == 1 else 0.0)
                w2.append(float(w) if target == 2 else 0.0)
    order = sorted(range(len(reps)), key=lambda k: tuple(reps[k]))
    points = np.array([reps[k] for k in order]) if reps else np.zeros((0, mu1.kappa))
    return (points,
            np.array([w1[k] for k in order]),
            np.array([w2[k] for k in order]))


def cdf_leq(mu1: AtomicMeasure, mu2: AtomicMeasure, tol: float = 0.0):
    """mu2(lower orthant at x) <= mu1(lower orthant at x) on the merged grid.

    Atomic CDFs are constant between consecutive atom coordinates, so checking
    every grid point of the per-axis coordinate union is exact. Returns
    (holds, witness point or None), witness lexicographically first.
    """
    if mu1.kappa != mu2.kappa:
        raise DimensionError(f"measures on R^{mu1.kappa} vs R^{mu2.kappa}")
    axes = []
    for j in range(mu1.kappa):
        vals = np.concatenate([mu1.points[:, j], mu2.points[:, j]])
        axes.append(np.unique(vals))
    if any(a.size == 0 for a in axes):
        return True, None
    import itertools
    for x in itertools.product(*axes):
        x = np.array(x)
        if mu2.cdf(x) > mu1.cdf(x) + tol:
            return False, tuple(float(v) for v in x)
    return True, None


@dataclass(frozen=True)
class DownwardClosedAtomSubset:
    """A downward-closed subset of a finite point family under <=_iota.

    ``mask`` is a bitmask over the point list order this subset was
    enumerated against.
    """

    mask: int
    iota: int
    points: np.ndarray

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.points.shape[0]) if self.mask >> i & 1)

    def member_points(self) -> np.ndarray:
        return self.points[list(self.indices)]

    @property
    def size(self) -> int:
        return len(self.indices)

    def __repr__(self):
        return f"DownwardClosedAtomSubset(mask={self.mask:#x}, size={self.size})"


def enumerate_downward_closed(points, iota: int, cap: int = IDEAL_CAP) -> list[DownwardClosedAtomSubset]:
    """All downward-closed subsets of the points under <=_iota.

    Enumeration recurses along a linear extension (lexicographic order is one
    for <=_iota), including an element only when everything below it is
    already in; each leaf is an ideal, reached exactly once. Results are
    ordered by cardinality, then by bitmask value. Raises CapExceededError
    beyond ``cap`` atoms since the output can be exponential.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2:
        raise DimensionError(f"points must be (m, kappa), got shape {pts.shape}")
    m = pts.shape[0]
    if m > cap:
        raise CapExceededError(m, cap)
    if m:
        iota = _check_iota(iota, pts.shape[1])
    order = sorted(range(m), key=lambda i: tuple(pts[i]))
    below = [0] * m  # bitmask in original indexing
    for i in range(m):
        for j in range(m):
            if i != j and leq_iota(pts[j], pts[i], iota):
                below[i] |= 1 << j

    masks: list[int] = []

    def walk(pos: int, current: int):
        if pos == m:
            masks.append(current)
            return
        idx = order[pos]
        walk(pos + 1, current)
        if below[idx] & ~current == 0:
            walk(pos + 1, current | (1 << idx))

    walk(0, 0)
    masks.sort(key=lambda s: (bin(s).count("1"), s))
    frozen = np.array(pts)
    frozen.setflags(write=False)
    return [DownwardClosedAtomSubset(mask=s, iota=iota, points=frozen) for s in masks]


@dataclass(frozen=True)
class DominanceResult:
    holds: bool
    witness: DownwardClosedAtomSubset | None
    gap: float  # mu2 - mu1 on the witness, 0 when holds

    def __bool__(self):
        return self.holds


def lowerset_dominance(mu1: AtomicMeasure, mu2: AtomicMeasure, iota: int,
                       cap: int = IDEAL_CAP, tol: float = 0.0) -> DominanceResult:
    """mu2(D) <= mu1(D) for every downward-closed D of the merged atom family.

    Checking downward-closed subsets of the merged atoms decides the
    inequality for all iota-lower sets, since a lower set picks up exactly a
    downward-closed subfamily. Witness is the first violating ideal in
    (cardinality, bitmask) order.
    """
    points, w1, w2 = _merged_support(mu1, mu2)
    for ideal in enumerate_downward_closed(points, iota, cap=cap):
        idx = list(ideal.indices)
        m1 = float(np.sum(w1[idx])) if idx else 0.0
        m2 = float(np.sum(w2[idx])) if idx else 0.0
        if m2 > m1 + tol:
            return DominanceResult(holds=False, witness=ideal, gap=m2 - m1)
    return DominanceResult(holds=True, witness=None, gap=0.0)


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the cross-check between the lower-set inequality and the
    integral inequalities for increasing test functions (equal total mass)."""

    iota: int
    masses: tuple[float, float]
    lowerset_holds: bool
    lowerset_witness: DownwardClosedAtomSubset | None
    indicator_holds: bool
    indicator_witness: DownwardClosedAtomSubset | None
    mollifier_holds: bool
    mollifier_witness: tuple | None  # (ideal, level)

    @property
    def agreement(self) -> bool:
        """The decidable routes agree; mollifiers may only fail when the rest do."""
        if self.lowerset_holds != self.indicator_holds:
            return False
        if self.lowerset_holds and not self.mollifier_holds:
            return False
        return True


def thm31_equivalence_check(mu1: AtomicMeasure, mu2: AtomicMeasure, iota: int,
                            mollifier_levels=MOLLIFIER_LEVELS, cap: int = IDEAL_CAP,
                            tol_mass: float = MASS_TOL, tol: float = 1e-12) -> EquivalenceReport:
    """Equal-mass equivalence: mu2 <= mu1 on lower sets iff integrals of
    increasing functions satisfy int f dmu1 <= int f dmu2.

    The integral side is probed with indicator-complements of every
    enumerated ideal and with the continuous surrogates min(1, n*distance)
    at the configured levels. Unequal total mass raises MassMismatchError
    carrying the one-sided conclusions that survive.
    """
    m1, m2 = mu1.total_mass(), mu2.total_mass()
    if abs(m1 - m2) > tol_mass:
        if m1 < m2:
            implications = ("only mass1 <= mass2: the lower-set inequality may "
                            "still imply integral inequalities for increasing f >= 0")
        else:
            implications = ("only mass2 <= mass1: integral inequalities for "
                            "increasing f >= 0 may still imply the lower-set inequality")
        raise MassMismatchError(m1, m2, implications)

    dom = lowerset_dominance(mu1, mu2, iota, cap=cap, tol=tol)
    points, w1, w2 = _merged_support(mu1, mu2)
    ideals = enumerate_downward_closed(points, iota, cap=cap)

    indicator_holds, indicator_witness = True, None
    for ideal in ideals:
        idx = list(ideal.indices)
        if idx:
            gen = LowerSetGen.from_points(points[idx], iota)
            f = lower_indicator_complement(gen)
        else:
            f = indicator_fn(lambda x: True, tag="co-lower[empty]", monotone_iota=iota)
        lhs = float(np.sum(w1 * f.on_points(points))) if points.size else 0.0
        rhs = float(np.sum(w2 * f.on_points(points))) if points.size else 0.0
        if lhs > rhs + tol:
            indicator_holds, indicator_witness = False, ideal
            break

    mollifier_holds, mollifier_witness = True, None
    for ideal in ideals:
        idx = list(ideal.indices)
        if not idx:
            continue
        gen = LowerSetGen.from_points(points[idx], iota)
        for level in mollifier_levels:
            f = lower_mollifier(gen, level)
            lhs = float(np.sum(w1 * f.on_points(points)))
            rhs = float(np.sum(w2 * f.on_points(points)))
            if lhs > rhs + tol:
                mollifier_holds, mollifier_witness = False, (ideal, level)
                break
        if not mollifier_holds:
            break

    return EquivalenceReport(
        iota=iota,
        masses=(m1, m2),
        lowerset_holds=dom.holds,
        lowerset_witness=dom.witness,
        indicator_holds=indicator_holds,
        indicator_witness=indicator_witness,
        mollifier_holds=mollifier_holds,
        mollifier_witness=mollifier_witness,
    )
