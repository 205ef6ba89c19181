import sys, time
import numpy as np
from moodcrl.envs import PENDULUM_LAYOUT, pendulum_graph, pendulum_step
from moodcrl.mdp import Dataset, subsample
from moodcrl.flow import FlowStack, train_nll
from moodcrl.mapper import train_mapper, predict_next

ds = Dataset.load_jsonl(".calib/low.jsonl", PENDULUM_LAYOUT, quality="low")
ds.fit_normalizer()
for jit in (float(a) for a in sys.argv[1:]):
    t0 = time.time()
    flow = FlowStack(pendulum_graph(), rng=np.random.default_rng(0))
    hist = train_nll(flow, ds, epochs=40, lr=1e-4, seed=0, jitter_std=jit)
    mapper, mhist = train_mapper(flow, ds, epochs=30, lr=1e-4, seed=0)
    mc = mhist["epoch_l1"]
    lp = flow.log_prob(ds.normalizer.normalize(ds.rows))
    idx = np.random.default_rng(1).choice(len(ds), 500, replace=False)
    s = ds.rows[idx][:, PENDULUM_LAYOUT.s_slice]; a = ds.rows[idx][:, PENDULUM_LAYOUT.a_slice]
    tn = ds.rows[idx][:, PENDULUM_LAYOUT.s_next_slice]
    pn, pr, plp = predict_next(flow, mapper, ds.normalizer, PENDULUM_LAYOUT, s, a)
    rng = np.random.default_rng(2)
    sm = ds.episode_start_states()[:20].copy(); st = sm.copy()
    drift = []
    for _ in range(30):
        f = rng.uniform(-1, 1, (len(sm), 1))
        sm, _, _ = predict_next(flow, mapper, ds.normalizer, PENDULUM_LAYOUT, sm, f)
        st = np.array([pendulum_step(x, ff[0])[0] for x, ff in zip(st, f)])
        drift.append(float(np.abs(sm - st).mean()))
    print(f"jitter={jit}: {time.time()-t0:.0f}s")
    print(f"  flow nll {hist['final_nll']:.2f}; mapper L1 first/last {mc[0]:.3f}/{mc[-1]:.4f}")
    print("  train logp pct:", {q: round(float(np.percentile(lp, q)),1) for q in (0.1,1,50,99)})
    print(f"  one-step |err|: {np.round(np.abs(pn-tn).mean(axis=0),5)} (stds {np.round(ds.normalizer.std[:4],3)})")
    print(f"  r_hat {float(pr.mean()):.3f}; scored logp mean {float(plp.mean()):.1f}")
    print(f"  open-loop drift @1/10/30: {drift[0]:.4f} {drift[9]:.4f} {drift[29]:.4f}")
