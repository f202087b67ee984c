# The MLM only exists at training time. Count the parameters the inference
# graph actually touches, compare against a model built without an MLM, and
# time both.
from dataclasses import replace

import torch

from visionlan.evalbench import bench_pair, count_eips, inference_parameters
from visionlan.model import ModelConfig, VisionLAN

torch.set_num_threads(1)
cfg = ModelConfig()
torch.manual_seed(0)
full = VisionLAN(cfg).eval()
base = VisionLAN(replace(cfg, with_mlm=False)).eval()

x = torch.rand(1, cfg.height, cfg.width)
used = inference_parameters(full, x)
total = sum(p.numel() for p in full.parameters())
print(f"parameters stored: {total:,}; reached by recognize(): {sum(p.numel() for p in used.values()):,}")
print("MLM parameters:", sum(p.numel() for p in full.mlm.parameters()))
print("extra parameters at inference vs baseline:", count_eips(used, inference_parameters(base, x)))

a, b = bench_pair(full.recognize, base.recognize, x, warmup=20, reps=200)
print(f"latency ms  visionlan {a['mean']:.3f}  baseline {b['mean']:.3f}  ratio {a['mean'] / b['mean']:.3f}")

# a deeper reasoning stack does cost time
deep = VisionLAN(replace(cfg, layers=6, with_mlm=False)).eval()
_, d = bench_pair(base.recognize, deep.recognize, x, warmup=20, reps=100)
print(f"6 transformer units instead of 3: {d['mean']:.3f} ms")
