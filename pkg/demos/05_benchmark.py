"""Operator wall-clock comparison across grid sizes.

The fast forward projection replaces one full-volume inverse FFT per time
step (the reference solver) with a single FFT + resampling + cosine
transform, which is where the reconstruction speed-up comes from.

Run:  python demos/05_benchmark.py
"""

from ffpat.bench import bench_csv, run_bench, speed_ratio

rows = run_bench(sizes=(32, 64, 128), reps=5)
print(bench_csv(rows))
for n in (32, 64, 128):
    print(f"n = {n:3d}: simulate / forward_project = "
          f"{speed_ratio(rows, n):5.1f}x")
