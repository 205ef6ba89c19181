import json, time, sys
import numpy as np
from moodcrl.cli import frozenlake_ood_run, DEFAULT_CONFIG, deep_merge

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
cfg = deep_merge(DEFAULT_CONFIG, {"environment": "grid"})
t0 = time.time()
rows, summary = frozenlake_ood_run(cfg, seed)
summary["runtime_s"] = time.time() - t0
print(json.dumps(summary, indent=1, sort_keys=True))
with open(f".calib/ood_seed{seed}.json", "w") as f:
    json.dump(summary, f, indent=1, sort_keys=True)
