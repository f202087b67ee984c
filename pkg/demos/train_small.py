# Train a model end to end for a few hundred steps and watch the LF -> LA
# switch. A full acceptance-grade run is `visionlan train` with the configs in
# tests/acceptance/; this one is cut down to finish in a few minutes.
import sys

import torch

from visionlan.dataio import RenderConfig
from visionlan.evalbench import evaluate, localization_rate
from visionlan.model import ModelConfig
from visionlan.training import Trainer, TrainConfig

torch.set_num_threads(1)
steps = int(sys.argv[1]) if len(sys.argv) > 1 else 600
trainer = Trainer(ModelConfig(), TrainConfig(total_steps=steps, lr=1e-3, batch_size=32), RenderConfig())

for m in iter(trainer.train_step, None):
    if m["step"] % 100 == 0 or trainer.step == steps:
        print(f"{m['step']:5d} {m['stage']}  L={m['L']:.3f}  rec={m['L_rec']:.3f}"
              f"  mas={m['L_mas']:.3f}  rem={m['L_rem']:.3f}")
    if trainer.step == steps:
        break

report = evaluate(trainer.model, trainer.test_words[:100], seed=1)
print(report.summary())
print("mask localization", localization_rate(trainer.model, trainer.test_words, n=200))
