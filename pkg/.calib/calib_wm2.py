import json, time
import numpy as np
from moodcrl.envs import PENDULUM_LAYOUT, CartPendulumEnv, generate_behavior_dataset, pendulum_graph, pendulum_step
from moodcrl.mdp import Dataset, subsample
from moodcrl.flow import FlowStack, train_nll
from moodcrl.mapper import train_mapper, predict_next
from moodcrl.cli import quantile_summary

t0 = time.time()
low = generate_behavior_dataset(CartPendulumEnv(), 0, 2000, seed=0, quality="low")
med = generate_behavior_dataset(CartPendulumEnv(), 2000, 3000, seed=0, quality="medium")
print(f"gen {time.time()-t0:.0f}s low={len(low)} med={len(med)}")
print("low:", json.dumps(quantile_summary(low.window_episode_returns)))
print("med:", json.dumps(quantile_summary(med.window_episode_returns)))
size = min(len(low), len(med))
low_eq = subsample(low, size, 0); low_eq.save_jsonl(".calib/low.jsonl")
med_eq = subsample(med, size, 0); med_eq.save_jsonl(".calib/medium.jsonl")
print("equalized size:", size)

for tag, ds in (("low", low_eq), ("medium", med_eq)):
    ds.fit_normalizer()
    t0 = time.time()
    flow = FlowStack(pendulum_graph(), rng=np.random.default_rng(0))
    hist = train_nll(flow, ds, epochs=100, lr=1e-4, seed=0)
    c = hist["epoch_nll"]
    print(f"[{tag}] flow 100 epochs {time.time()-t0:.0f}s nll:", [round(c[i],2) for i in (0,9,29,59,99)])
    t0 = time.time()
    mapper, mhist = train_mapper(flow, ds, epochs=50, lr=1e-4, seed=0)
    mc = mhist["epoch_l1"]
    print(f"[{tag}] mapper 50 epochs {time.time()-t0:.0f}s l1:", [round(mc[i],4) for i in (0,9,29,49)])
    flow.save(f".calib/flow_{tag}.ckpt", f".calib/flow_{tag}.json", ds.normalizer)
    mapper.save(f".calib/mapper_{tag}.ckpt", f".calib/mapper_{tag}.json", flow.graph.graph_hash())
    lp = flow.log_prob(ds.normalizer.normalize(ds.rows))
    print(f"[{tag}] train logp pct:", {q: round(float(np.percentile(lp, q)),2) for q in (0.1,1,5,50,99)})
    idx = np.random.default_rng(1).choice(len(ds), 500, replace=False)
    s = ds.rows[idx][:, PENDULUM_LAYOUT.s_slice]; a = ds.rows[idx][:, PENDULUM_LAYOUT.a_slice]
    tn = ds.rows[idx][:, PENDULUM_LAYOUT.s_next_slice]
    pn, pr, plp = predict_next(flow, mapper, ds.normalizer, PENDULUM_LAYOUT, s, a)
    print(f"[{tag}] one-step |err| per dim:", np.round(np.abs(pn-tn).mean(axis=0), 5), "std:", np.round(ds.normalizer.std[:4],4))
    print(f"[{tag}] r_hat mean {float(pr.mean()):.3f} pred logp mean {float(plp.mean()):.1f}")
    # multi-step open-loop check vs true physics from a few starts
    rng = np.random.default_rng(2)
    s0 = ds.episode_start_states()[:20]
    state_m = s0.copy(); state_t = s0.copy()
    drift = []
    for step in range(30):
        forces = rng.uniform(-1, 1, (len(s0), 1))
        state_m, _, _ = predict_next(flow, mapper, ds.normalizer, PENDULUM_LAYOUT, state_m, forces)
        state_t = np.array([pendulum_step(st, f[0])[0] for st, f in zip(state_t, forces)])
        drift.append(float(np.abs(state_m - state_t).mean()))
    print(f"[{tag}] open-loop mean |drift| at steps 1/10/30:", round(drift[0],5), round(drift[9],5), round(drift[29],5))
