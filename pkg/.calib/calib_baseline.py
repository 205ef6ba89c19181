import time
import numpy as np
from moodcrl.envs import frozenlake_split
from moodcrl.mapper import train_baseline

train, test = frozenlake_split()
train.fit_normalizer()
s, a, tgt = train.rows[:, [0]], train.rows[:, [1]], train.rows[:, 2]
for lr in (1e-4, 3e-4):
    for epochs in (500, 1000, 2000):
        t0 = time.time()
        net, hist = train_baseline(train, epochs=epochs, lr=lr, seed=0)
        pred, _ = net.predict(s, a)
        l1 = float(np.mean(np.abs(pred[:, 0] - tgt)))
        print(f"lr={lr:g} epochs={epochs}: train L1={l1:.3f}  ({time.time()-t0:.0f}s)")
