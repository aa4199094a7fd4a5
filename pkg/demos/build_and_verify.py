"""Build a few codes from smaller ones and recompute their parameters."""

import time

from qgf4 import quantum_params, weight_distribution
from qgf4.constructions import concatenate, gottesman_code, gottesman_matrix, hamming_513, paste
from qgf4.cyclic import hamming_code

h5 = hamming_513()
print("[[5,1,3]]:", quantum_params(h5))

t = time.time()
c25 = concatenate(h5, h5)
qp = quantum_params(c25)
print(f"concatenated with itself: {qp}  ({time.time() - t:.1f}s)")

for m in (3, 4, 5):
    G = gottesman_code(m, gottesman_matrix(m))
    print(f"gottesman m={m}:", quantum_params(G))

h21 = hamming_code(3)
print("cyclic hamming, m=3:", quantum_params(h21))
print("weights of its stabilizer:", weight_distribution(h21).support())

print("paste of [[21,15,3]] and [[5,1,3]]:", quantum_params(paste(h21, h5)))
