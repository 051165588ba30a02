# ============================================================
# 🔁 Sweeps along a coupling: distances, bounds and scaled errors per n
# ============================================================

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence

from ..bounds.gammas import bound_report
from ..errors import DegenerateError, DomainError, EwensError
from ..exactdist.params import EwensParams
from ..exactdist.pmf import length_distribution
from ..exactdist.stirling import StirlingTable, build_stirling_table
from ..gaussian.kolmogorov import StandardizationKind, kolmogorov_distance, standardize
from ..moments.sums import exact_moments
from ..settings import settings
from .coupling import Case, RegimeSpec, classify, coupling_theta, rate_normalizer
from .cstar import solve_cstar

logger = logging.getLogger(__name__)

STATUS_OK = "ok"


@dataclass(frozen=True)
class SweepRow:
    n: int
    theta: float
    case: str
    kolmo_X: Optional[float] = None
    kolmo_Y: Optional[float] = None
    kolmo_Z: Optional[float] = None
    upper: Optional[float] = None
    lower_i: Optional[float] = None
    lower_ii: Optional[float] = None
    rate_normalizer: Optional[float] = None
    scaled_error: Optional[float] = None
    status: str = STATUS_OK

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK

    @property
    def log_n(self) -> float:
        return math.log(self.n)

    @property
    def log_scaled_error(self) -> Optional[float]:
        if self.scaled_error is None or not self.scaled_error > 0:
            return None
        return math.log(self.scaled_error)

    def as_dict(self) -> dict:
        out = asdict(self)
        out["log_n"] = self.log_n
        out["log_scaled_error"] = self.log_scaled_error
        return out


def _compute_row(
    spec: RegimeSpec, case: Case, n: int, D: float, table: Optional[StirlingTable]
) -> SweepRow:
    theta = coupling_theta(spec, n)
    try:
        params = EwensParams(n, theta)
        m = exact_moments(params)
        dist = length_distribution(params, table)

        kolmo_X = kolmogorov_distance(
            dist, standardize(params, StandardizationKind.EXACT_MOMENTS, m)
        ).distance
        kolmo_Y = kolmogorov_distance(
            dist, standardize(params, StandardizationKind.APPROX_MOMENTS, m)
        ).distance
        try:
            kolmo_Z = kolmogorov_distance(
                dist, standardize(params, StandardizationKind.LOG_LEADING, m)
            ).distance
        except DegenerateError:
            kolmo_Z = None

        report = bound_report(params, D=D, moments=m)
        rate = rate_normalizer(case, n, theta)
    except EwensError as exc:
        logger.warning("[Sweep] n=%d theta=%g failed: %s", n, theta, exc)
        return SweepRow(n=n, theta=theta, case=case.value, status=f"failed: {exc}")

    row = SweepRow(
        n=n,
        theta=theta,
        case=case.value,
        kolmo_X=kolmo_X,
        kolmo_Y=kolmo_Y,
        kolmo_Z=kolmo_Z,
        upper=report.upper,
        lower_i=report.lower_i,
        lower_ii=report.lower_ii,
        rate_normalizer=rate,
        scaled_error=kolmo_X * rate,
    )
    logger.debug("[Sweep] n=%d theta=%g kolmo_X=%.6g scaled=%.6g", n, theta, kolmo_X, row.scaled_error)
    return row


def _check_grid(n_values: Sequence[int]) -> List[int]:
    grid = list(n_values)
    if not grid:
        raise DomainError("n-grid is empty")
    for n in grid:
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise DomainError(f"n-grid entries must be positive integers, got {n!r}")
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise DomainError("n-grid must be sorted ascending")
    return grid


def sweep(
    spec: RegimeSpec,
    n_values: Sequence[int],
    D: Optional[float] = None,
    jobs: Optional[int] = None,
    cstar: Optional[float] = None,
) -> List[SweepRow]:
    """One row per n, in input order; a failing row is marked, not raised."""
    D = settings.HALL_BARBOUR_D if D is None else D
    jobs = settings.JOBS if jobs is None else jobs
    if jobs < 1:
        raise DomainError(f"jobs must be at least 1, got {jobs}")
    if not (D > 0 and math.isfinite(D)):
        raise DomainError(f"D must be a positive finite constant, got {D}")
    grid = _check_grid(n_values)

    cstar = solve_cstar() if cstar is None else cstar
    case = classify(spec, cstar)

    small = [n for n in grid if n <= settings.STIRLING_LIMIT]
    table = build_stirling_table(max(small)) if small else None

    logger.info(
        "[Sweep] %s case=%s points=%d jobs=%d", spec.describe(), case.value, len(grid), jobs
    )
    if jobs == 1:
        rows = [_compute_row(spec, case, n, D, table) for n in grid]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda n: _compute_row(spec, case, n, D, table), grid))

    failed = sum(1 for r in rows if not r.ok)
    logger.info("[Sweep] done: %d rows, %d failed", len(rows), failed)
    return rows


def band_ratio(rows: Sequence[SweepRow], top: int = 6) -> float:
    """max/min of scaled_error over the last ``top`` successful rows."""
    if top < 1:
        raise DomainError(f"top must be at least 1, got {top}")
    values = [r.scaled_error for r in rows if r.ok and r.scaled_error is not None]
    values = values[-top:]
    if not values:
        raise DomainError("no successful rows to take a band ratio over")
    lo = min(values)
    if not lo > 0:
        raise DegenerateError("scaled_error vanished on the band")
    return max(values) / lo
