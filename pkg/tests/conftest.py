"""Shared fixtures: mpmath reference values and a quiet CLI environment."""

import mpmath as mp
import pytest


class MpOracle:
    """Reference values from hypergeometric closed forms of the arc functions."""

    def __init__(self, dps: int = 40):
        self.dps = dps

    def _a(self, p):
        return 1 / mp.mpf(p)

    def half_pi(self, p: float) -> float:
        with mp.workdps(self.dps):
            return float(mp.pi / (p * mp.sin(mp.pi / p)))

    def arcsin(self, x: float, p: float) -> float:
        with mp.workdps(self.dps):
            a = self._a(p)
            return float(x * mp.hyp2f1(a, a, 1 + a, mp.mpf(x) ** p))

    def arcsinh(self, x: float, p: float) -> float:
        with mp.workdps(self.dps):
            a = self._a(p)
            return float(x * mp.hyp2f1(a, a, 1 + a, -(mp.mpf(x) ** p)))

    def arctan(self, x: float, p: float) -> float:
        with mp.workdps(self.dps):
            a = self._a(p)
            return float(x * mp.hyp2f1(1, a, 1 + a, -(mp.mpf(x) ** p)))

    def arctanh(self, x: float, p: float) -> float:
        with mp.workdps(self.dps):
            a = self._a(p)
            return float(x * mp.hyp2f1(1, a, 1 + a, mp.mpf(x) ** p))

    def _sin(self, x: float, p: float):
        a = self._a(p)
        target = mp.mpf(x)
        if target >= mp.pi / (p * mp.sin(mp.pi / p)):
            return mp.mpf(1)
        return mp.findroot(
            lambda y: y * mp.hyp2f1(a, a, 1 + a, y**p) - target,
            (mp.mpf(0), mp.mpf(1)),
            solver="illinois",
        )

    def sin(self, x: float, p: float) -> float:
        """sin_p on [0, π_p/2] by root-finding on the arcsine closed form."""
        with mp.workdps(self.dps):
            return float(self._sin(x, p))

    def cos(self, x: float, p: float) -> float:
        with mp.workdps(self.dps):
            return float((1 - self._sin(x, p) ** p) ** (1 / mp.mpf(p)))

    def sinh(self, x: float, p: float) -> float:
        with mp.workdps(self.dps):
            a = self._a(p)
            target = mp.mpf(x)

            def f(y):
                return y * mp.hyp2f1(a, a, 1 + a, -(y**p)) - target

            hi = mp.mpf(1)
            while f(hi) < 0:
                hi *= 2
            return float(mp.findroot(f, (mp.mpf(0), hi), solver="illinois"))


@pytest.fixture(scope="session")
def oracle() -> MpOracle:
    return MpOracle()


@pytest.fixture
def quiet_env(monkeypatch) -> dict[str, str]:
    """Environment for CliRunner: no console logging, default tolerances."""
    for name in ("GENTRIG_REL_TOL", "GENTRIG_ABS_TOL", "GENTRIG_MAX_QUAD_LEVELS", "GENTRIG_MAX_ITERS", "GENTRIG_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    return {"LOG_TO_CONSOLE": "false", "LOG_LEVEL_APP": "WARNING", "LOG_FILE_PATH": ""}
