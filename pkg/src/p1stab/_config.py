"""Numerical tolerances shared by every module."""

import os

#: Tolerance for all phase comparisons. Override with ``P1STAB_EPS``.
EPS_PHASE = float(os.environ.get("P1STAB_EPS", "1e-9"))

#: Hard cap on twist searches in the geometric regime.
MAX_TWIST_SCAN = 10**6
