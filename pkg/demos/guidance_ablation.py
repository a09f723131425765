"""Train a small model for a minute, then score every guidance subset.

Each training step draws a random subset of the {intrinsics, pose, depth}
priors, so a single network learns both to reconstruct unaided and to absorb
whichever priors show up at test time.  The table at the end compares the
eight subsets on held-out scenes; with such a short budget the margins are
modest, but depth and pose guidance already pull their rows down.

Run:  python3 demos/guidance_ablation.py [steps]
"""

import sys
import time

import numpy as np

from guidedrecon.model import Model, ModelConfig
from guidedrecon.synthdata import gen_sequence
from guidedrecon.trainer import (
    ALL_SUBSETS,
    TrainConfig,
    evaluate,
    init_state,
    train_step,
)


def main(steps=200):
    train = [gen_sequence(s) for s in range(10)]
    holdout = [gen_sequence(s) for s in range(100, 103)]

    model = Model(ModelConfig.tiny(), np.random.default_rng(0))
    cfg = TrainConfig(total_steps=steps, warmup_steps=20, lr_peak=1e-3, seed=0)
    state = init_state(model, cfg)

    t0 = time.time()
    for k in range(steps):
        report = train_step(model, [train[k % len(train)]], state, cfg)
        if (k + 1) % 50 == 0:
            print(f"step {k + 1:4d}  total {report.total:.4f}  "
                  f"({(time.time() - t0) / (k + 1) * 1000:.0f} ms/step)")

    print(f"\nheld-out metrics by guidance subset ({len(holdout)} scenes):")
    print(f"  {'subset':>6}  {'l2':>8}  {'ate':>8}  {'abs_rel':>8}")
    for flags in ALL_SUBSETS:
        name = "".join(l for l, f in zip("KPD", flags) if f) or "none"
        row = evaluate(model, holdout, flags)
        l2 = np.mean([row[f"l2_{k}"] for k in range(1, 5)])
        print(f"  {name:>6}  {l2:8.4f}  {row['ate']:8.4f}  {row['abs_rel']:8.4f}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 200)
