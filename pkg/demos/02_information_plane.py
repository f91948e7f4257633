"""
The information plane of a training run
=======================================

Estimates, for every captured epoch and layer, the mutual information
I(X;M) between the input and the layer's activations and I(Y;M) between
the target masks and the activations, then renders one information-plane
scatter per layer (I_XM on x, I_YM on y, one point per epoch).

Masks are high-dimensional, so they are first reduced to a small label
alphabet with k-means (k=16 here); I(Y;M) is then bounded above by
log2(16) = 4 bits, which the estimates must respect.

Requires the trace from demo 01:

    python3 demos/01_train_and_capture.py
    python3 demos/02_information_plane.py
"""

import math
import sys
from pathlib import Path

from infounet import analysis, mi, reduction, svgplot
from infounet.trace import ActivationTrace

out = Path(__file__).parent / "out" / "run"
if not (out / "trace").is_dir():
    sys.exit("run demos/01_train_and_capture.py first")

trace = ActivationTrace.load(out / "trace")

# Reduce each probe mask to one of k=16 cluster labels. The clustering
# is fit on the probe masks themselves; labels play the role of Y.
model = reduction.kmeans_fit(trace.probe_masks, k=16, seed=5)
y_labels = reduction.kmeans_assign_batch(model, trace.probe_masks)
print(f"k-means reduction: k={model.k}, "
      f"{len(set(y_labels.tolist()))} clusters in use")

# The KDE estimator treats the probe activations as centers of a
# Gaussian mixture with unit noise variance and evaluates mixture
# entropy by pairwise bounds (upper bound by default).
traj = analysis.info_plane(trace, y_labels, mi.KdeConfig())
traj.to_csv(out / "mi.csv")
print(f"{len(traj.records)} MI records -> {out / 'mi.csv'}")

# I(Y;M) can never exceed the label entropy, here at most 4 bits.
worst = max(r.i_ym_bits for r in traj.records)
print(f"max I_YM {worst:.3f} bits <= log2(16) = {math.log2(16):.0f}")

# At the last captured epoch the profile over layers is U-shaped:
# high near input and output, pinched at the bottleneck.
last = traj.epochs()[-1]
ym = traj.series(last, "i_ym_bits")
print(f"epoch {last}: I_YM layer 1 = {ym[1]:.2f}, "
      f"bottleneck (9) = {ym[9]:.2f}, head (23) = {ym[23]:.2f}")

paths = svgplot.plane_svgs(traj, out / "plots")
print(f"{len(paths)} information-plane SVGs -> {out / 'plots'}")
