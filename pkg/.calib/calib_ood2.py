import json, time, sys
import numpy as np
from moodcrl.cli import frozenlake_ood_run, DEFAULT_CONFIG, deep_merge

overrides = json.loads(sys.argv[1])
seed = int(sys.argv[2])
cfg = deep_merge(DEFAULT_CONFIG, {"environment": "grid", **overrides})
t0 = time.time()
rows, summary = frozenlake_ood_run(cfg, seed)
summary["runtime_s"] = time.time() - t0
out = {k: summary[k] for k in ("ood_left_down_right", "top_row_up", "train_mean_L1", "test_mean_L1", "runtime_s")}
print(json.dumps(out, indent=1, sort_keys=True))
