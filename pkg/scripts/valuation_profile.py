"""Print v(P_0(x)), ..., v(P_n(x)) for sampled x of fixed valuation.

For v(x) = m the profile is m, m-1, ..., 0 on the first m+1 levels; past
level m nothing is forced.  A second block shows the twisted lifts
phi(u) = u^2 + t^(m+1), where v(P_n(u)) = m-n+1 for 1 <= n <= m+1.
"""

import random

from deltawitt.config import PRESETS, RingSetup
from deltawitt.delta import exp_delta
from deltawitt.harness import sample_poly


def profile(ctx, x, n):
    return [c.v_pi() for c in exp_delta(ctx, x, n)]


def main():
    for name in ("f2tu", "z2u", "z3u", "ziu"):
        setup = PRESETS[name]
        print(setup.label)
        n = 5 if setup.ring.q == 2 else 4
        for m in range(0, 4):
            x = sample_poly(random.Random(f"{name}/{m}"), setup.alg, valuation=m)
            print(f"  v(x)={m}  x={x}  profile={profile(setup.ctx, x, n)}")
    print("phi(u) = u^2 + t^(m+1) on F_2[t][u], x = u")
    for m in (1, 2, 3):
        setup = RingSetup("EqualChar", 2, images=(f"u^2 + t^{m + 1}",))
        print(f"  m={m}  profile={profile(setup.ctx, setup.alg.gen(0), m + 2)}")


if __name__ == "__main__":
    main()
