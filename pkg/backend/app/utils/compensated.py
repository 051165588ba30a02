from typing import Iterable, List


class RunningSum:
    """Like math.fsum, but keeps a running total with a compensation term."""

    def __init__(self, value: float = 0.0):
        self._s = float(value)
        self._c = 0.0

    @staticmethod
    def two_sum(u: float, v: float):
        # error-free transformation: u + v == s + t exactly
        s = u + v
        up = s - v
        vpp = s - up
        return s, -((up - u) + (vpp - v))

    def add(self, y: float) -> "RunningSum":
        self._s, t = self.two_sum(self._s, float(y))
        self._c += t
        return self

    @property
    def value(self) -> float:
        return self._s + self._c


def prefix_sums(values: Iterable[float]) -> List[float]:
    """Compensated left-to-right partial sums."""
    acc = RunningSum()
    return [acc.add(v).value for v in values]
