# ============================================================
# 🔢 Unsigned Stirling numbers of the first kind
# s(m, x) is the coefficient of theta^x in theta (theta+1) ... (theta+m-1)
# ============================================================

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ..errors import DimensionError, DomainError, ResourceLimitError
from ..settings import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StirlingTable:
    """Triangular table of exact integers, rows[m-1][x-1] = s(m, x)."""

    n_max: int
    rows: Tuple[Tuple[int, ...], ...]
    _log_rows: Dict[int, Tuple[float, ...]] = field(
        default_factory=dict, repr=False, compare=False
    )

    def row(self, m: int) -> Tuple[int, ...]:
        if m < 1 or m > self.n_max:
            raise DimensionError(f"row {m} outside table 1..{self.n_max}")
        return self.rows[m - 1]

    def __getitem__(self, key: Tuple[int, int]) -> int:
        m, x = key
        if x < 1 or x > m:
            return 0
        return self.row(m)[x - 1]

    def log_row(self, m: int) -> Tuple[float, ...]:
        """Natural logs of row m, computed once from the exact integers."""
        cached = self._log_rows.get(m)
        if cached is None:
            cached = tuple(math.log(v) for v in self.row(m))
            self._log_rows[m] = cached
        return cached


def build_stirling_table(n_max: int, limit: Optional[int] = None) -> StirlingTable:
    """Rows 1..n_max from s(m+1, x) = s(m, x-1) + m s(m, x)."""
    limit = settings.STIRLING_LIMIT if limit is None else limit
    if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 1:
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}")
    if n_max > limit:
        raise ResourceLimitError("n_max", n_max, limit)

    rows = [(1,)]
    for m in range(1, n_max):
        prev = rows[-1]
        nxt = [m * prev[0]]
        nxt.extend(prev[j - 1] + m * prev[j] for j in range(1, m))
        nxt.append(1)
        rows.append(tuple(nxt))

    logger.debug("[Stirling] built table up to n_max=%d", n_max)
    return StirlingTable(n_max=n_max, rows=tuple(rows))
