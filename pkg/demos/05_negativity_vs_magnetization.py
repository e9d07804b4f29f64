"""
Negativity against magnetisation
================================

Two-spin thermal states along a field sweep, at several temperatures.
Plotting negativity against magnetisation shows entanglement draining away
as the spins align with the field.
"""
import numpy as np

from _common import save_table
from isingring import RingParams, magnetization, negativity, thermal_state

J = 5.0
rows = []
for t in (1.0, 5.0, 10.0, 20.0):
    for b in np.linspace(0, 100, 200):
        rho = thermal_state(RingParams(2, J, b), t)
        rows.append((magnetization(rho), t, negativity(rho, {1})))

hot = thermal_state(RingParams(2, J, 100), 1.0)
print(f"T=1, B=100: negativity={negativity(hot, {1}):.4f}  magnetization={magnetization(hot):.4f}")

save_table("negativity_vs_magnetization", ["m", "t", "value"], rows)
