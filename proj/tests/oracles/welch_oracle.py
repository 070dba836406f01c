"""High-precision Welch t-test oracle (mpmath, 60 digits).

Writes 50 fixed sample pairs with t, Welch-Satterthwaite dof and the two-sided
p-value. Samples are stored as repr() doubles so the C++ side parses the exact
same binary values; the oracle converts each double exactly via mpf(float).
"""
import json
import random
import sys

import mpmath as mp

mp.mp.dps = 60


def welch(a, b):
    a = [mp.mpf(x) for x in a]
    b = [mp.mpf(x) for x in b]
    na, nb = len(a), len(b)
    ma, mb = mp.fsum(a) / na, mp.fsum(b) / nb
    va = mp.fsum((x - ma) ** 2 for x in a) / (na - 1)
    vb = mp.fsum((x - mb) ** 2 for x in b) / (nb - 1)
    sa, sb = va / na, vb / nb
    t = (ma - mb) / mp.sqrt(sa + sb)
    dof = (sa + sb) ** 2 / (sa ** 2 / (na - 1) + sb ** 2 / (nb - 1))
    x = dof / (dof + t * t)
    p = mp.betainc(dof / 2, mp.mpf(1) / 2, 0, x, regularized=True)
    return t, dof, p


def pairs():
    rng = random.Random(20250101)
    out = [([1, 2, 3, 4, 5], [2, 3, 4, 5, 6])]
    base = [rng.gauss(0.6, 0.1) for _ in range(30)]
    out.append((base, list(base)))
    # 10 standard deviations apart, n = 200 each
    out.append(([rng.gauss(0.0, 1.0) for _ in range(200)],
                [rng.gauss(10.0, 1.0) for _ in range(200)]))
    while len(out) < 50:
        na = rng.choice([2, 3, 5, 8, 13, 40, 120, 200])
        nb = rng.choice([2, 3, 5, 8, 13, 40, 120, 200])
        mu_a = rng.uniform(0.2, 0.9)
        mu_b = mu_a + rng.choice([0.0, 0.01, 0.05, 0.2, 0.5]) * rng.choice([-1, 1])
        sd_a = rng.choice([0.01, 0.05, 0.1, 0.3])
        sd_b = rng.choice([0.01, 0.05, 0.1, 0.3])
        a = [rng.gauss(mu_a, sd_a) for _ in range(na)]
        b = [rng.gauss(mu_b, sd_b) for _ in range(nb)]
        out.append((a, b))
    return out


def main(out_path):
    cases = []
    for a, b in pairs():
        a = [float(x) for x in a]
        b = [float(x) for x in b]
        t, dof, p = welch(a, b)
        cases.append({"a": a, "b": b, "t": mp.nstr(t, 25), "dof": mp.nstr(dof, 25),
                      "p": mp.nstr(p, 25)})
    with open(out_path, "w") as f:
        json.dump({"cases": cases}, f)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "welch_oracle.json")
