"""Monte-Carlo verification harness and independent oracles.

:func:`run` samples reproducible Dirichlet pairs and exercises the selected
check suites on every pair, recording pass counts, the worst observed
residual or slack, and a shrunk witness pair for any violation.  It never
aborts on a failure; the harness exists to adjudicate formulas, so a
violation is data, not an error.

Determinism: trial ``i`` derives its RNG stream from ``(seed, i)``, so the
report depends only on the configuration, not on batching or scheduling.
Identical configurations produce bit-identical report JSON.

:func:`brute_force_mM` is the deliberately plain oracle for the bound
engine - a dense linear grid with no refinement, on a different
discretization than the engine's log-spaced scan - so the two can
cross-validate each other.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import measures as ms
from . import simplex
from .bounds import (
    PARAM_GRID,
    InequalityFamily,
    corollary_table,
    family_generators,
    in_region,
    numeric_mM,
    region_grid,
)
from .errors import ConfigInvalid, DegenerateDenominator, RegionViolation
from .families import ZETA_CONVEX_RANGE, omega_s, phi_s, zeta_s
from .generators import GeneratorSpec, csiszar_bulk, gen_d2

SUBJECTS = ("identities", "families", "corollaries", "bounds-grid")
DEFAULT_SUBJECTS = ("identities", "families", "corollaries")
MAX_TRIALS = 10_000_000
_ZETA_GRID = tuple(s for s in PARAM_GRID if ZETA_CONVEX_RANGE[0] <= s <= ZETA_CONVEX_RANGE[1])


@dataclass(frozen=True)
class VerifyConfig:
    trials: int
    n_range: tuple[int, int] = (2, 10)
    seed: int = 0
    concentration: float = 1.0
    rel_tol: float = 1e-10
    subjects: tuple[str, ...] = DEFAULT_SUBJECTS

    def __post_init__(self):
        if not (1 <= self.trials <= MAX_TRIALS):
            raise ConfigInvalid(f"trials must be in [1, {MAX_TRIALS}], got {self.trials}")
        lo, hi = self.n_range
        if not (2 <= lo <= hi):
            raise ConfigInvalid(f"n_range must satisfy 2 <= lo <= hi, got {self.n_range}")
        if not self.concentration > 0:
            raise ConfigInvalid(f"concentration must be positive, got {self.concentration}")
        if not (0.0 < self.rel_tol < 1.0):
            raise ConfigInvalid(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        unknown = [s for s in self.subjects if s not in SUBJECTS and s != "all"]
        if unknown:
            raise ConfigInvalid(f"unknown subjects {unknown}; valid: {list(SUBJECTS)}")
        if not self.subjects:
            raise ConfigInvalid("subjects must not be empty")

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "n_range": list(self.n_range),
            "seed": self.seed,
            "concentration": self.concentration,
            "rel_tol": self.rel_tol,
            "subjects": list(self.subjects),
        }


@dataclass(frozen=True)
class Witness:
    p: tuple[float, ...]
    q: tuple[float, ...]
    s: Optional[float] = None
    t: Optional[float] = None

    def to_dict(self) -> dict:
        return {"p": list(self.p), "q": list(self.q), "s": self.s, "t": self.t}


@dataclass(frozen=True)
class CheckResult:
    kind: str  # "residual" (pass iff <= tol) or "slack" (pass iff >= -tol)
    attempts: int
    passes: int
    worst_slack: float
    witness: Optional[Witness] = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "attempts": self.attempts,
            "passes": self.passes,
            "worst_slack": self.worst_slack,
            "witness": self.witness.to_dict() if self.witness else None,
        }


@dataclass(frozen=True)
class VerificationReport:
    config: VerifyConfig
    checks: dict[str, CheckResult]
    wall_time: float

    @property
    def all_passed(self) -> bool:
        return all(c.passes == c.attempts for c in self.checks.values())

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "seed": self.config.seed,
            "config": self.config.to_dict(),
            "checks": {k: v.to_dict() for k, v in self.checks.items()},
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out

    def to_json(self, include_timing: bool = False) -> str:
        # wall_time is excluded by default so identical configurations
        # serialize to byte-identical reports
        return json.dumps(self.to_dict(include_timing), ensure_ascii=False)


# --------------------------------------------------------------------------
# check construction


@dataclass(frozen=True)
class _Check:
    id: str
    kind: str  # "residual" | "slack"
    fn: Callable[[np.ndarray, np.ndarray], np.ndarray]
    s: Optional[float] = None
    t: Optional[float] = None


def _scaled_residual(lhs, rhs):
    return np.abs(lhs - rhs) / np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))


def _identity_checks() -> list[_Check]:
    def res(f):
        return lambda P, Q: _scaled_residual(*f(P, Q))

    checks = [
        _Check("identity/j_from_kl", "residual",
               res(lambda P, Q: (ms.jeffreys(P, Q), ms.kl(P, Q) + ms.kl(Q, P)))),
        _Check("identity/j_from_rel_j", "residual",
               res(lambda P, Q: (ms.jeffreys(P, Q), ms.rel_j(P, Q) + ms.rel_j(Q, P)))),
        _Check("identity/j_from_js_ag", "residual",
               res(lambda P, Q: (ms.jeffreys(P, Q),
                                 4.0 * (ms.jensen_shannon(P, Q) + ms.ag_mean(P, Q))))),
        _Check("identity/rel_j_from_f_g", "residual",
               res(lambda P, Q: (ms.rel_j(Q, P),
                                 ms.REL_J_FROM_F_G_CONSTANT * (ms.rel_js(P, Q) + ms.rel_ag(P, Q))))),
        _Check("identity/psi_from_chi2", "residual",
               res(lambda P, Q: (ms.sym_chi_square(P, Q),
                                 ms.chi_square(P, Q) + ms.chi_square(Q, P)))),
        _Check("identity/hellinger_forms", "residual",
               res(lambda P, Q: (ms.hellinger(P, Q), 1.0 - ms.bhattacharyya(P, Q)))),
    ]
    sym = {
        "psi": ms.sym_chi_square,
        "j": ms.jeffreys,
        "js": ms.jensen_shannon,
        "agt": ms.ag_mean,
        "delta": ms.triangular,
    }
    for name, fn in sym.items():
        checks.append(
            _Check(f"identity/symmetric/{name}", "residual",
                   res(lambda P, Q, f=fn: (f(P, Q), f(Q, P))))
        )
    return checks


# (family value, classical expression) pairs recovered at special s
_PARTICULAR_CASES = (
    ("phi(-1)=chi2(Q||P)/2", lambda P, Q: (phi_s(-1.0, P, Q), ms.chi_square(Q, P) / 2.0)),
    ("phi(0)=K(Q||P)", lambda P, Q: (phi_s(0.0, P, Q), ms.kl(Q, P))),
    ("phi(1/2)=4h", lambda P, Q: (phi_s(0.5, P, Q), 4.0 * ms.hellinger(P, Q))),
    ("phi(1)=K(P||Q)", lambda P, Q: (phi_s(1.0, P, Q), ms.kl(P, Q))),
    ("phi(2)=chi2(P||Q)/2", lambda P, Q: (phi_s(2.0, P, Q), ms.chi_square(P, Q) / 2.0)),
    ("omega(-1)=delta/4", lambda P, Q: (omega_s(-1.0, P, Q), ms.triangular(P, Q) / 4.0)),
    ("omega-adj(-1)=delta/4",
     lambda P, Q: (omega_s(-1.0, P, Q, adjoint=True), ms.triangular(P, Q) / 4.0)),
    ("omega(0)=F(P||Q)", lambda P, Q: (omega_s(0.0, P, Q), ms.rel_js(P, Q))),
    ("omega(1)=G(P||Q)", lambda P, Q: (omega_s(1.0, P, Q), ms.rel_ag(P, Q))),
    ("omega(2)=chi2(Q||P)/8", lambda P, Q: (omega_s(2.0, P, Q), ms.chi_square(Q, P) / 8.0)),
    ("omega-adj(0)=F(Q||P)",
     lambda P, Q: (omega_s(0.0, P, Q, adjoint=True), ms.rel_js(Q, P))),
    ("omega-adj(1)=G(Q||P)",
     lambda P, Q: (omega_s(1.0, P, Q, adjoint=True), ms.rel_ag(Q, P))),
    ("omega-adj(2)=chi2(P||Q)/8",
     lambda P, Q: (omega_s(2.0, P, Q, adjoint=True), ms.chi_square(P, Q) / 8.0)),
    ("zeta(0)=delta", lambda P, Q: (zeta_s(0.0, P, Q), ms.triangular(P, Q))),
    ("zeta-adj(0)=delta",
     lambda P, Q: (zeta_s(0.0, P, Q, adjoint=True), ms.triangular(P, Q))),
    ("zeta(1)=D(P||Q)", lambda P, Q: (zeta_s(1.0, P, Q), ms.rel_j(P, Q))),
    ("zeta(2)=chi2(P||Q)/2", lambda P, Q: (zeta_s(2.0, P, Q), ms.chi_square(P, Q) / 2.0)),
    ("zeta-adj(1)=D(Q||P)",
     lambda P, Q: (zeta_s(1.0, P, Q, adjoint=True), ms.rel_j(Q, P))),
    ("zeta-adj(2)=chi2(Q||P)/2",
     lambda P, Q: (zeta_s(2.0, P, Q, adjoint=True), ms.chi_square(Q, P) / 2.0)),
)


def _family_checks() -> list[_Check]:
    checks = [
        _Check(f"family/particular/{name}", "residual",
               lambda P, Q, f=f: _scaled_residual(*f(P, Q)))
        for name, f in _PARTICULAR_CASES
    ]

    def duality(P, Q):
        worst = np.zeros(P.shape[0])
        for s in PARAM_GRID:
            worst = np.maximum(
                worst, _scaled_residual(phi_s(s, P, Q), phi_s(1.0 - s, Q, P))
            )
        return worst

    def midpoint(P, Q):
        mid = (P + Q) / 2.0
        worst = np.zeros(P.shape[0])
        for s in PARAM_GRID:
            worst = np.maximum(
                worst,
                _scaled_residual(omega_s(s, P, Q, adjoint=True), phi_s(s, mid, Q)),
            )
        return worst

    checks.append(_Check("family/phi-swap-duality", "residual", duality))
    checks.append(_Check("family/omega-adj-midpoint-substitution", "residual", midpoint))

    def nonneg(kernel, grid):
        def fn(P, Q):
            worst = np.full(P.shape[0], np.inf)
            for s in grid:
                worst = np.minimum(worst, np.asarray(kernel(s, P, Q), float))
            return worst
        return fn

    checks.append(_Check("family/nonneg/phi", "slack", nonneg(phi_s, PARAM_GRID)))
    checks.append(_Check("family/nonneg/omega", "slack", nonneg(omega_s, PARAM_GRID)))
    checks.append(_Check(
        "family/nonneg/omega-adj", "slack",
        nonneg(lambda s, P, Q: omega_s(s, P, Q, adjoint=True), PARAM_GRID),
    ))
    checks.append(_Check("family/nonneg/zeta", "slack", nonneg(zeta_s, _ZETA_GRID)))
    checks.append(_Check(
        "family/nonneg/zeta-adj", "slack",
        nonneg(lambda s, P, Q: zeta_s(s, P, Q, adjoint=True), _ZETA_GRID),
    ))
    return checks


def _monotone_direction(num: GeneratorSpec, den: GeneratorSpec, lo: float, hi: float) -> int:
    """+1 / -1 when the curvature ratio is monotone on [lo, hi], else 0."""
    if lo == hi:
        return 1
    xs = np.geomspace(lo, hi, 2049)
    d = gen_d2(den, xs)
    if not np.all(d > 0.0):
        raise DegenerateDenominator(
            f"{den.gen.value}(s={den.s}) non-positive on [{lo}, {hi}]"
        )
    gs = gen_d2(num, xs) / d
    diffs = np.diff(gs)
    wiggle = 1e-12 * np.maximum(np.abs(gs[1:]), np.abs(gs[:-1]))
    if np.all(diffs >= -wiggle):
        return 1
    if np.all(diffs <= wiggle):
        return -1
    return 0


def sandwich_slack_bulk(
    family: InequalityFamily, s: float, t: float, P: np.ndarray, Q: np.ndarray
) -> np.ndarray:
    """Per-row normalized sandwich slack min(C1 - m C2, M C2 - C1) / max(1, |C1|).

    Endpoint constants are used only after the curvature ratio is verified
    monotone on the rows' pooled ratio envelope; otherwise each row falls
    back to the numeric scanner.  Sound for erratum corners by construction.
    """
    num, den = family_generators(family, s, t)
    ratios = P / Q
    r = ratios.min(axis=1)
    R = ratios.max(axis=1)
    direction = _monotone_direction(num, den, float(r.min()), float(R.max()))
    if direction != 0:
        lo = np.where(direction > 0, r, R)
        hi = np.where(direction > 0, R, r)
        m = gen_d2(num, lo) / gen_d2(den, lo)
        M = gen_d2(num, hi) / gen_d2(den, hi)
    else:
        m = np.empty_like(r)
        M = np.empty_like(r)
        for i in range(r.shape[0]):
            m[i], M[i] = numeric_mM(num, den, float(r[i]), float(R[i]))
    c1 = csiszar_bulk(num, P, Q)
    c2 = csiszar_bulk(den, P, Q)
    scale = np.maximum(1.0, np.abs(c1))
    return np.minimum(c1 - m * c2, M * c2 - c1) / scale


def _corollary_checks() -> list[_Check]:
    return [
        _Check(
            f"corollary/{c.name}", "slack",
            lambda P, Q, c=c: sandwich_slack_bulk(c.family, c.s, c.t, P, Q),
            s=c.s, t=c.t,
        )
        for c in corollary_table()
    ]


def _bounds_grid_checks() -> list[_Check]:
    checks = []
    for family in InequalityFamily:
        for s, t in region_grid(family):
            checks.append(
                _Check(
                    f"bounds-grid/{family.value}/s={s:g},t={t:g}", "slack",
                    lambda P, Q, f=family, a=s, b=t: sandwich_slack_bulk(f, a, b, P, Q),
                    s=s, t=t,
                )
            )
    return checks


def _build_checks(subjects: tuple[str, ...]) -> list[_Check]:
    wanted = set(subjects)
    if "all" in wanted:
        wanted |= set(DEFAULT_SUBJECTS)
    checks: list[_Check] = []
    if "identities" in wanted:
        checks += _identity_checks()
    if "families" in wanted:
        checks += _family_checks()
    if "corollaries" in wanted:
        checks += _corollary_checks()
    if "bounds-grid" in wanted:
        checks += _bounds_grid_checks()
    return checks


# --------------------------------------------------------------------------
# the harness


def _sample_trials(config: VerifyConfig):
    """Per-trial pairs, grouped by simplex size; streams keyed by (seed, i)."""
    lo, hi = config.n_range
    by_n: dict[int, list[int]] = {}
    rows: list[tuple[np.ndarray, np.ndarray]] = []
    for i in range(config.trials):
        rng = np.random.default_rng([config.seed, i])
        n = int(rng.integers(lo, hi + 1))
        p = simplex._draw(rng, n, config.concentration, simplex.EPS_MASS,
                          simplex.MAX_REJECTIONS)
        q = simplex._draw(rng, n, config.concentration, simplex.EPS_MASS,
                          simplex.MAX_REJECTIONS)
        rows.append((p, q))
        by_n.setdefault(n, []).append(i)
    groups = {}
    for n, idx in sorted(by_n.items()):
        groups[n] = (
            np.array(idx),
            np.vstack([rows[i][0] for i in idx]),
            np.vstack([rows[i][1] for i in idx]),
        )
    return rows, groups


def _shrink_witness(check: _Check, p: np.ndarray, q: np.ndarray, rel_tol: float) -> Witness:
    """Contract a failing pair toward uniform while it keeps failing."""
    def fails(a, b):
        v = float(check.fn(a[None, :], b[None, :])[0])
        return v > rel_tol if check.kind == "residual" else v < -rel_tol

    u = np.full(p.shape, 1.0 / p.shape[0])
    for _ in range(64):
        p2, q2 = (p + u) / 2.0, (q + u) / 2.0
        if not fails(p2, q2):
            break
        p, q = p2, q2
    return Witness(tuple(p.tolist()), tuple(q.tolist()), check.s, check.t)


def run(config: VerifyConfig) -> VerificationReport:
    """Execute every selected check on every sampled pair.

    Violations are recorded (with a shrunk witness), never raised.
    """
    start = time.perf_counter()
    rows, groups = _sample_trials(config)
    results: dict[str, CheckResult] = {}
    for check in _build_checks(config.subjects):
        values = np.empty(config.trials)
        for _, (idx, P, Q) in groups.items():
            values[idx] = check.fn(P, Q)
        if check.kind == "residual":
            ok = values <= config.rel_tol
            worst_i = int(np.argmax(values))
        else:
            ok = values >= -config.rel_tol
            worst_i = int(np.argmin(values))
        passes = int(np.count_nonzero(ok))
        witness = None
        if passes < config.trials:
            p, q = rows[worst_i]
            witness = _shrink_witness(check, p, q, config.rel_tol)
        results[check.id] = CheckResult(
            check.kind, config.trials, passes, float(values[worst_i]), witness
        )
    return VerificationReport(config, results, time.perf_counter() - start)


# --------------------------------------------------------------------------
# independent oracles


_LN2 = np.log(2.0)
_LN4 = 2.0 * _LN2


def _log_curvature(spec: GeneratorSpec, xs, lx, lx1, out, scratch):
    """ln f''(x) on the grid, written into ``out``, from an independent
    transcription of the closed forms (u = (x+1)/2, v = (x+1)/(2x)):

        PHI      x^(s-2)                      PSI   v^(s-2) / (4 x^3)
        UPSILON  u^(s-2) / 4                  XI    u^(s-3) (s x + 4 - s) / 4
        VARSIGMA v^(s-3) ((4-s) x + s) / (4 x^4)

    Everything runs through the two preallocated buffers: repeated fresh
    temporaries of this size would spend more time in the page allocator
    than in the arithmetic.  Returns False when a linear factor is
    non-positive somewhere (f'' < 0, so the log form does not exist)."""
    s = spec.s
    g = spec.gen
    if g.name == "PHI":
        np.multiply(lx, s - 2.0, out=out)
        return True
    if g.name == "PSI":
        np.subtract(lx1, lx, out=out)
        out -= _LN2
        out *= s - 2.0
        np.multiply(lx, 3.0, out=scratch)
        out -= scratch
        out -= _LN4
        return True
    if g.name == "UPSILON":
        np.subtract(lx1, _LN2, out=out)
        out *= s - 2.0
        out -= _LN4
        return True
    if g.name == "XI":
        np.multiply(xs, s, out=scratch)
        scratch += 4.0 - s
        if not np.all(scratch > 0.0):
            return False
        np.log(scratch, out=scratch)
        np.subtract(lx1, _LN2, out=out)
        out *= s - 3.0
        out += scratch
        out -= _LN4
        return True
    if g.name == "VARSIGMA":
        np.multiply(xs, 4.0 - s, out=scratch)
        scratch += s
        if not np.all(scratch > 0.0):
            return False
        np.log(scratch, out=scratch)
        np.subtract(lx1, lx, out=out)
        out -= _LN2
        out *= s - 3.0
        out += scratch
        np.multiply(lx, 4.0, out=scratch)
        out -= scratch
        out -= _LN4
        return True
    raise KeyError(spec.gen)


_WORKSPACE = threading.local()


def _grid_workspace(points: int):
    """Per-thread scratch rows for the dense scan.

    A fresh 0.8 MB temporary per vector op costs more in page faults than
    the arithmetic does; reusing warm buffers keeps the oracle cheap while
    staying thread-safe (each thread owns its rows)."""
    cache = getattr(_WORKSPACE, "cache", None)
    if cache is None:
        cache = _WORKSPACE.cache = {}
    rows = cache.get(points)
    if rows is None:
        rows = cache[points] = (np.arange(points, dtype=np.float64), np.empty((6, points)))
    return rows


def brute_force_mM(
    num: GeneratorSpec, den: GeneratorSpec, r: float, R: float, points: int
) -> tuple[float, float]:
    """Plain dense-grid min/max of the curvature ratio; no refinement.

    Linear spacing, intentionally simpler and on a different discretization
    and algebraic path than the engine's scanner: the ratio is scanned in
    log space (the extrema commute with the monotone exp), falling back to
    direct evaluation when the numerator curvature changes sign.  Use
    points >= 1e5 for oracle duty.
    """
    if not (r > 0.0 and r <= R):
        raise ValueError(f"need 0 < r <= R, got [{r}, {R}]")
    if points < 2:
        raise ConfigInvalid(f"need at least 2 points, got {points}")
    idx, work = _grid_workspace(points)
    xs, lx, lx1, lden, out, scratch = work
    np.multiply(idx, (R - r) / (points - 1), out=xs)
    xs += r
    xs[0] = r
    xs[-1] = R
    np.log(xs, out=lx)
    np.add(xs, 1.0, out=lx1)
    np.log(lx1, out=lx1)
    if not _log_curvature(den, xs, lx, lx1, lden, scratch):
        raise DegenerateDenominator(
            f"{den.gen.value}(s={den.s}) non-positive on [{r}, {R}]"
        )
    if _log_curvature(num, xs, lx, lx1, out, scratch):
        out -= lden
        return float(np.exp(out.min())), float(np.exp(out.max()))
    np.exp(lden, out=lden)
    gs = gen_d2(num, xs) / lden
    return float(gs.min()), float(gs.max())


@dataclass(frozen=True)
class TightnessReport:
    family: InequalityFamily
    s: float
    t: float
    min_slack_low: float
    min_slack_high: float
    pairs_evaluated: int


def tightness_scan(
    family: InequalityFamily,
    s: float,
    t: float,
    trials: int,
    seed: int,
    *,
    n: int = 3,
    concentration: float = 1.0,
    shrink_levels: int = 8,
) -> TightnessReport:
    """Empirical sharpness of the sandwich at in-region (s, t).

    For each sampled pair, the pair and its geometric contractions toward
    the uniform pair are evaluated; both normalized slacks approach zero as
    the pair degenerates (the ratio C1/C2 tends to the curvature ratio at
    1 while [r, R] collapses onto 1), so the scan probes the tight limit.
    """
    if trials < 1:
        raise ConfigInvalid(f"trials must be >= 1, got {trials}")
    if not in_region(family, s, t):
        raise RegionViolation(
            f"(s={s}, t={t}) lies outside every region of family {family.value}"
        )
    num, den = family_generators(family, s, t)
    u = np.full(n, 1.0 / n)
    min_low = np.inf
    min_high = np.inf
    count = 0
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        p = simplex._draw(rng, n, concentration, simplex.EPS_MASS, simplex.MAX_REJECTIONS)
        q = simplex._draw(rng, n, concentration, simplex.EPS_MASS, simplex.MAX_REJECTIONS)
        for _ in range(shrink_levels):
            r = float(np.min(p / q))
            R = float(np.max(p / q))
            if r < R:
                direction = _monotone_direction(num, den, r, R)
                if direction != 0:
                    lo, hi = (r, R) if direction > 0 else (R, r)
                    m = float(gen_d2(num, lo) / gen_d2(den, lo))
                    M = float(gen_d2(num, hi) / gen_d2(den, hi))
                else:
                    m, M = numeric_mM(num, den, r, R)
                c1 = float(np.atleast_1d(csiszar_bulk(num, p[None, :], q[None, :]))[0])
                c2 = float(np.atleast_1d(csiszar_bulk(den, p[None, :], q[None, :]))[0])
                if c2 > 1e-300:
                    min_low = min(min_low, (c1 - m * c2) / c2)
                    min_high = min(min_high, (M * c2 - c1) / c2)
                    count += 1
            p, q = (p + u) / 2.0, (q + u) / 2.0
    return TightnessReport(family, s, t, float(min_low), float(min_high), count)
