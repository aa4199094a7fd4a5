"""Quantum BCH codes of length 85 and the true distance of the smaller ones."""

import time

from qgf4 import quantum_params
from qgf4.cyclic import ONE, bch_family

for c in bch_family(85, ONE, 7):
    n, k, d = c.promised()
    line = f"[[{n},{k},>={d}]] g degree {c.g.deg}, zero cosets {list(c.zero_cosets)}"
    if n - k <= 24:
        t = time.time()
        qp = quantum_params(c.stabilizer_code())
        line += f"  true d = {qp.d} ({time.time() - t:.1f}s)"
    print(line)
