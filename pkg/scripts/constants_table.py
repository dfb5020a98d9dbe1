"""Exhaustive search for delta-constants and their images in A_0.

For each ring and degree box, lists how many candidates have delta = 0
and checks that reduction mod pi is injective on them.
"""

import time

from deltawitt.config import PRESETS
from deltawitt.delta import candidate_count, enumerate_constants

CASES = [
    ("f2t", {"t": 8}),
    ("f2t", {"t": 12}),
    ("f4t", {"t": 4}),
    ("f2tu", {"t": 2, "u": 2}),
    ("f2tu", {"t": 3, "u": 2}),
    ("f2tu-twisted", {"t": 2, "u": 2}),
    ("f4tu", {"t": 1, "u": 2}),
    ("f3tu", {"t": 1, "u": 2}),
]


def main():
    print(f"{'ring':<26} {'box':<12} {'candidates':>10} {'constants':>9} {'injective':>9} {'time':>7}")
    for name, box in CASES:
        setup = PRESETS[name]
        start = time.perf_counter()
        found = enumerate_constants(setup.ctx, box, budget=1 << 20)
        residues = {setup.alg.to_residue(c) for c in found}
        elapsed = time.perf_counter() - start
        box_s = ",".join(f"{k}<={v}" for k, v in box.items())
        print(f"{setup.label:<26} {box_s:<12} {candidate_count(setup.ctx, box):>10} {len(found):>9} "
              f"{str(len(residues) == len(found)):>9} {elapsed:>6.2f}s")
        if len(found) <= 8:
            print("    " + ", ".join(str(c) for c in found))


if __name__ == "__main__":
    main()
