import json, time
import numpy as np
from moodcrl.envs import CartPendulumEnv, generate_behavior_dataset
from moodcrl.cli import quantile_summary

t0 = time.time()
env = CartPendulumEnv()
low = generate_behavior_dataset(env, 0, 2000, seed=0, quality="low")
t1 = time.time()
env = CartPendulumEnv()
med = generate_behavior_dataset(env, 2000, 3000, seed=0, subsample_to=len(low), quality="medium")
t2 = time.time()
print("low:", len(low), "tuples,", json.dumps(quantile_summary(low.episode_returns())))
print("med:", len(med), "tuples,", json.dumps(quantile_summary(med.episode_returns())))
print(f"gen low {t1-t0:.0f}s, gen med {t2-t1:.0f}s")
low.save_jsonl(".calib/low.jsonl")
med.save_jsonl(".calib/medium.jsonl")
