import json, time
import numpy as np
from moodcrl.envs import PENDULUM_LAYOUT, GRID_DISCRETE_DIMS, CartPendulumEnv, pendulum_graph, pendulum_step
from moodcrl.mdp import Dataset, subsample
from moodcrl.flow import FlowStack, train_nll
from moodcrl.mapper import train_mapper, predict_next

ds = Dataset.load_jsonl(".calib/low.jsonl", PENDULUM_LAYOUT, quality="low")
ds = subsample(ds, 58330, seed=0)
ds.fit_normalizer()
print("dataset:", len(ds), "tuples")

t0 = time.time()
flow = FlowStack(pendulum_graph(), rng=np.random.default_rng(0))
hist = train_nll(flow, ds, epochs=200, lr=1e-4, seed=0)
print(f"flow 200 epochs in {time.time()-t0:.0f}s")
curve = hist["epoch_nll"]
print("nll curve:", [round(curve[i], 3) for i in (0, 4, 9, 19, 49, 99, 149, 199)])
print("initial/final:", hist["initial_nll"], hist["final_nll"])

t0 = time.time()
mapper, mhist = train_mapper(flow, ds, epochs=60, lr=1e-4, seed=0)
print(f"mapper 60 epochs in {time.time()-t0:.0f}s")
mc = mhist["epoch_l1"]
print("l1 curve:", [round(mc[i], 4) for i in (0, 4, 9, 19, 39, 59) if i < len(mc)])

flow.save(".calib/flow_low.ckpt", ".calib/flow_low.json", ds.normalizer)
mapper.save(".calib/mapper_low.ckpt", ".calib/mapper_low.json", flow.graph.graph_hash())

# gate calibration: train-set logp percentiles
lp = flow.log_prob(ds.normalizer.normalize(ds.rows))
print("train logp percentiles:", {q: round(float(np.percentile(lp, q)), 2) for q in (0.1, 1, 5, 50, 95, 99)})

# one-step accuracy vs true dynamics on train tuples
idx = np.random.default_rng(1).choice(len(ds), 500, replace=False)
s = ds.rows[idx][:, PENDULUM_LAYOUT.s_slice]
a = ds.rows[idx][:, PENDULUM_LAYOUT.a_slice]
true_next = ds.rows[idx][:, PENDULUM_LAYOUT.s_next_slice]
pred_next, pred_r, pred_lp = predict_next(flow, mapper, ds.normalizer, PENDULUM_LAYOUT, s, a)
err = np.abs(pred_next - true_next)
print("in-sample one-step |err| mean per dim:", np.round(err.mean(axis=0), 5))
print("state stds:", np.round(ds.normalizer.std[:4], 4))
print("r_hat mean:", float(pred_r.mean()), "pred logp mean:", float(pred_lp.mean()))
