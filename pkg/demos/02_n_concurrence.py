"""
N-concurrence of even rings
===========================

The genuine multipartite concurrence of the ground state for N = 2, 4, 6.
Larger rings lose multipartite entanglement faster as the field grows.
"""
import numpy as np

from _common import save_table
from isingring import RingParams, ground_state, n_concurrence

J = 5.0
rows = []
for n in (2, 4, 6):
    for b in np.linspace(0, 10, 21):
        rows.append((b, n, n_concurrence(ground_state(RingParams(n, J, b)))))

for n in (2, 4, 6):
    vals = [v for b, m, v in rows if m == n]
    print(f"N={n}: C(B=0)={vals[0]:.4f}  C(B=5)={vals[10]:.4f}  C(B=10)={vals[-1]:.4f}")

save_table("n_concurrence", ["b", "n", "value"], rows)
