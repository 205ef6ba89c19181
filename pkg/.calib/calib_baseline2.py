import time
import numpy as np
from moodcrl.envs import frozenlake_split
from moodcrl.mapper import train_baseline

train, _ = frozenlake_split()
train.fit_normalizer()
s, a, tgt = train.rows[:, [0]], train.rows[:, [1]], train.rows[:, 2]
for bs, lr, epochs in [(716, 1e-4, 500), (716, 1e-4, 1000), (716, 3e-4, 1000), (716, 3e-4, 2000), (256, 1e-4, 300)]:
    t0 = time.time()
    net, hist = train_baseline(train, epochs=epochs, batch_size=bs, lr=lr, seed=0)
    pred, rpred = net.predict(s, a)
    l1 = float(np.mean(np.abs(pred[:, 0] - tgt)))
    print(f"bs={bs} lr={lr:g} epochs={epochs}: train L1={l1:.3f} ({time.time()-t0:.0f}s)")
