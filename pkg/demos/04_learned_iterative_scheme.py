"""The iterate-update reconstruction driver and its file-exchange boundary.

Runs f_{k+1} = G_k(f_k, grad_k) from the k-space backprojection with
in-process update operators (gradient steps), then demonstrates the file
exchange an external learned component plugs into: each iterate's f_k /
grad_k pair is exported as NPY + meta.json, the "network" (here a stand-in
that clamps negatives) writes f_next_k.npy, and the driver imports it.

Run:  python demos/04_learned_iterative_scheme.py
"""

import os
import tempfile

import numpy as np

from ffpat import (Grid, UpdateOperator, add_noise, apply_mask, backproject,
                   build_weights, generate_beam_mask, learned_reconstruct,
                   measure, psnr, simulate)
from ffpat.io import save_array
from ffpat.recon import estimate_step
from ffpat.phantoms import random_disks

n = 64
grid = Grid(n, 1, n, 1e-4, 1500.0, 96)
w = build_weights(grid, np.deg2rad(45.0))
phantom = random_disks(grid, 3, seed=33)
mask = generate_beam_mask(n, 1, 16, 4, seed=2)
g = apply_mask(add_noise(measure(simulate(phantom), mask), 20.0, seed=8),
               mask)

print(f"f_0 = backprojection: {psnr(backproject(g, grid), phantom):.2f} dB")

# five gradient-step updates on the approximate (paper) gradient
tau = 0.4 * estimate_step(w, mask)
updates = [UpdateOperator(kind="gradient-step", tau=tau) for _ in range(5)]
f5, states = learned_reconstruct(g, w, mask, updates)
for s in states:
    print(f"  k={s.k}: fidelity {s.objective_history[-1]:.4e}")
print(f"f_5 (gradient steps): {psnr(f5, phantom):.2f} dB")

# the same driver talking to an "external" component through files
def clamp_network(exchange_dir, k, weights_path):
    f_k = np.load(os.path.join(exchange_dir, f"f_{k}.npy"))
    grad = np.load(os.path.join(exchange_dir, f"grad_{k}.npy"))
    f_next = np.maximum(f_k - tau * grad, 0.0)  # step + positivity
    save_array(os.path.join(exchange_dir, f"f_next_{k}.npy"), f_next)

with tempfile.TemporaryDirectory() as tmp:
    updates = [UpdateOperator(kind="external-file", k=k, weights_path=tmp,
                              runner=clamp_network) for k in range(5)]
    f_ext, _ = learned_reconstruct(g, w, mask, updates, exchange_dir=tmp)
    print(f"f_5 (external file exchange, projected steps): "
          f"{psnr(f_ext, phantom):.2f} dB")
    print("exchange dir held:",
          sorted(p for p in os.listdir(tmp))[:4], "...")
