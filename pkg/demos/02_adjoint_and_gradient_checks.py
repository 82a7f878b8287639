"""Dot-product test and finite-difference gradient check.

The exact discrete adjoint makes <A f, g> = <f, A^T g> hold to machine
precision, which in turn makes the exact-adjoint data-fidelity gradient
agree with central finite differences.  The paper-backprojection gradient
(what the learned scheme consumes) is approximate; its angle to the true
gradient is printed for comparison.

Run:  python demos/02_adjoint_and_gradient_checks.py
"""

import numpy as np

from ffpat import (Grid, PressureImage, SensorData, adjoint_project,
                   build_weights, forward_project, full_mask, gradient)
from ffpat.kspace import data_misfit

rng = np.random.default_rng(0)

for shape in ((32, 1, 32, 32), (64, 1, 64, 64), (32, 32, 32, 32)):
    nx, ny, nz, nt = shape
    grid = Grid(nx, ny, nz, 1e-4, 1500.0, nt)
    w = build_weights(grid, np.deg2rad(45.0))
    f = PressureImage(grid, rng.normal(size=grid.image_shape))
    g = SensorData(grid, rng.normal(size=grid.data_shape))
    af = forward_project(f, w).values
    atg = adjoint_project(g, w).values
    lhs, rhs = float(np.sum(af * g.values)), float(np.sum(f.values * atg))
    rel = abs(lhs - rhs) / (np.linalg.norm(af) * np.linalg.norm(g.values))
    print(f"grid {nx}x{ny}x{nz}: dot-product defect {rel:.2e}")

grid = Grid(64, 1, 64, 1e-4, 1500.0, 64)
w = build_weights(grid, np.deg2rad(45.0))
mask = full_mask(grid.n_x, grid.n_y)
f = PressureImage(grid, rng.normal(size=grid.image_shape))
g = SensorData(grid, rng.normal(size=grid.data_shape))

exact = gradient(f, g, w, mask, mode="exact-adjoint").values
paper = gradient(f, g, w, mask, mode="paper-backprojection").values

v = rng.normal(size=grid.image_shape)
v /= np.linalg.norm(v)
h = 1e-5
fd = (data_misfit(PressureImage(grid, f.values + h * v), g, w, mask)
      - data_misfit(PressureImage(grid, f.values - h * v), g, w, mask)) / (2 * h)
print(f"\nfinite differences vs exact-adjoint gradient: "
      f"rel {abs(fd - float(np.sum(exact * v))) / abs(fd):.2e}")

cos = float(np.sum(exact * paper)
            / (np.linalg.norm(exact) * np.linalg.norm(paper)))
print(f"angle(paper-backprojection grad, true grad) = "
      f"{np.degrees(np.arccos(np.clip(cos, -1, 1))):.1f} deg "
      f"(descent direction, not the exact gradient)")
