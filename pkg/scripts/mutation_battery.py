"""Flip one sign at a time and report the first check that notices.

    python3 scripts/mutation_battery.py
"""

import time

from bvhh.verify import MUTATION_FLAGS, mutation_witness

for flag in MUTATION_FLAGS:
    t = time.time()
    c = mutation_witness(flag)
    line = c.line() if c else "NOT CAUGHT"
    print(f"{flag:>9}  {time.time() - t:5.1f}s  {line}", flush=True)
