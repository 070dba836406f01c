"""Mann-Whitney U reference values (normal approximation, tie and continuity corrected)."""
import json
import random
import sys

from scipy.stats import mannwhitneyu

rng = random.Random(11)
cases = []
for na, nb, shift, rounding in [(20, 25, 0.0, None), (30, 30, 0.3, None), (50, 40, 0.1, 1),
                                 (200, 200, 0.05, 2), (8, 12, 1.0, None)]:
    a = [rng.gauss(0, 1) for _ in range(na)]
    b = [rng.gauss(shift, 1) for _ in range(nb)]
    if rounding is not None:
        a = [round(x, rounding) for x in a]
        b = [round(x, rounding) for x in b]
    r = mannwhitneyu(a, b, alternative="two-sided", method="asymptotic", use_continuity=True)
    cases.append({"a": a, "b": b, "u": float(r.statistic), "p": float(r.pvalue)})
json.dump({"cases": cases}, open(sys.argv[1], "w"))
