import json, sys, time
import numpy as np
from moodcrl.envs import PENDULUM_LAYOUT, CartPendulumEnv, pendulum_graph
from moodcrl.mdp import Dataset, subsample
from moodcrl.flow import FlowStack
from moodcrl.mapper import MapperNet, WorldModel
from moodcrl.policy import TrainConfig, train_policy_on_world_model

args = json.loads(sys.argv[1]) if len(sys.argv) > 1 else {}
seed = args.get("seed", 0)
tag = args.get("tag", "low")

ds = Dataset.load_jsonl(f".calib/{tag}.jsonl", PENDULUM_LAYOUT, quality=tag)
ds = subsample(ds, 58330, seed=0)
graph = pendulum_graph()
flow, normalizer, _ = FlowStack.load(f".calib/flow_{tag}.ckpt", f".calib/flow_{tag}.json", graph)
mapper = MapperNet.load(f".calib/mapper_{tag}.ckpt", f".calib/mapper_{tag}.json", flow)
env = CartPendulumEnv()
wm = WorldModel(
    flow, mapper, normalizer, PENDULUM_LAYOUT,
    initial_states=ds.episode_start_states(),
    is_terminal=env.is_terminal_state,
    features=lambda s: np.atleast_2d(s),
    prepare_action=env.prepare_action,
    action_kind="continuous",
)
cfg = TrainConfig(
    algorithm="ppo",
    horizon=args.get("horizon", 300),
    trunc_logp=args.get("c", -15.0),
    n_updates=args.get("n_updates", 150),
    episodes_per_update=args.get("episodes", 10),
    eval_every=args.get("eval_every", 15),
    eval_episodes=5,
    seed=seed,
)
t0 = time.time()
policy, metrics, curve = train_policy_on_world_model(wm, CartPendulumEnv(), cfg)
dt = time.time() - t0
tr = [m["trunc_rate"] for m in metrics]
mr = [m["mean_return"] for m in metrics]
print(f"[{tag} seed {seed}] {dt:.0f}s curve:", [(u, round(v, 1)) for u, v in curve])
print(f"  model-return first/last5: {np.round(mr[:5],1)} ... {np.round(mr[-5:],1)}")
print(f"  trunc_rate first/last5: {np.round(tr[:5],2)} ... {np.round(tr[-5:],2)}")
