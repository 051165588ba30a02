import csv
import logging
import math
import os
from pathlib import Path
from typing import Iterable, Optional

import pandas as pd

logger = logging.getLogger(__name__)

SWEEP_SCHEMA_VERSION = "1"
SWEEP_HEADERS = [
    "n", "theta", "case", "kolmo_X", "kolmo_Y", "kolmo_Z",
    "upper", "lower_i", "lower_ii", "rate_normalizer", "scaled_error",
    "log_n", "log_scaled_error", "status",
]
SWEEP_HEADER_LINE = ",".join(SWEEP_HEADERS)


def format_number(value) -> str:
    """17 significant digits for floats, empty for missing values."""
    if value is None:
        return ""
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        return format(value, ".17g")
    return str(value)


# ============================================================
# 🧾 Sweep CSV sink
# ============================================================
class SweepLogger:
    """
    Writes sweep rows to a CSV file with a pinned header.
    ------------------------------------------------------------
    • a stale or foreign header is replaced by a fresh file
    • rows are appended and flushed one at a time
    • summary() reads the file back for band ratios
    """

    def __init__(self, path: Path, fresh: bool = True):
        self.path = Path(path).resolve()
        self.headers = list(SWEEP_HEADERS)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        if fresh:
            self._create_new_file()
        else:
            self._ensure_file_integrity()

    # ------------------------------------------------------------
    def _ensure_file_integrity(self):
        if not self.path.exists() or os.path.getsize(self.path) == 0:
            self._create_new_file()
            return
        with open(self.path, "r", encoding="utf-8") as f:
            first_line = f.readline().strip().split(",")
        if first_line != self.headers:
            logger.warning("[SweepLogger] header mismatch in %s, starting a new file", self.path)
            self._create_new_file()

    def _create_new_file(self):
        with open(self.path, "w", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=self.headers, lineterminator="\n")
            writer.writeheader()
        logger.debug("[SweepLogger] created %s", self.path)

    # ------------------------------------------------------------
    def log(self, row: dict):
        record = {key: format_number(row.get(key)) for key in self.headers}
        with open(self.path, "a", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=self.headers, lineterminator="\n")
            writer.writerow(record)
            f.flush()

    def log_many(self, rows: Iterable[dict]):
        for row in rows:
            self.log(row)

    # ------------------------------------------------------------
    def read(self) -> pd.DataFrame:
        return pd.read_csv(self.path, dtype={"case": str, "status": str})

    def summary(self, top: Optional[int] = None) -> dict:
        """Row counts and the max/min band of scaled_error over the last ``top`` ok rows."""
        df = self.read()
        ok = df[df["status"] == "ok"].dropna(subset=["scaled_error"])
        if top is not None:
            ok = ok.tail(top)
        band = None
        if len(ok) > 0 and ok["scaled_error"].min() > 0:
            band = float(ok["scaled_error"].max() / ok["scaled_error"].min())
        return {
            "rows": int(len(df)),
            "ok_rows": int((df["status"] == "ok").sum()),
            "band_ratio": band,
            "path": str(self.path),
        }
