"""
Training a small U-Net with activation capture
==============================================

Builds a 4-level U-Net on synthetic blob segmentation data, trains it
for a handful of epochs, and snapshots every layer's activations on a
fixed probe set at chosen epochs. The saved trace is the raw material
for all the information-theoretic analysis in the other demos.

Run from the repository root:

    python3 demos/01_train_and_capture.py

Writes demos/out/run/trace/. Takes well under a minute.
"""

from pathlib import Path

from infounet import data, unet

out = Path(__file__).parent / "out" / "run"

# A synthetic dataset: blurred random blobs thresholded into binary
# masks, images in [0, 1]. 96 samples at 32x32, split 64 train / 32
# validation. The validation images double as the probe set, so every
# capture sees the same inputs.
dataset = data.gen_synthetic(96, 32, seed=7)
train_set, val_set = data.split(dataset, 64, 32, seed=11)
print(f"dataset: {len(train_set)} train / {len(val_set)} val, 32x32")

# The network is described by a spec: input size, depth, channel width,
# and which skip connections are enabled (all four by default).
spec = unet.NetworkSpec(input_size=32, levels=4, base_channels=8, seed=0)
graph = unet.build(spec)
print(f"network: {len(graph)} layers, merges at {graph.merge_indices}")

# Train for 60 epochs, capturing activations on an exponential schedule.
# Captures are expensive (one extra forward pass over the probes), so
# the schedule front-loads them where training moves fastest.
captures = [1, 2, 5, 10, 20, 50, 60]
trace = unet.train(
    graph, train_set, 60, captures, val_set,
    learning_rate=0.05, momentum=0.9, batch_size=8,
)

for epoch, loss, train_dice, val_dice in trace.metrics_table():
    if epoch in (0, 1, 5, 20, 60):
        print(f"epoch {epoch:3d}  loss {loss:.4f}  "
              f"train Dice {train_dice:.3f}  val Dice {val_dice:.3f}")

# The trace stores, per capture epoch, one float32 tensor per layer
# evaluated on the probe set, plus the probe images and masks.
acts = trace.activations[captures[-1]]
print(f"captured {len(acts)} layers at epoch {captures[-1]}; "
      f"layer 1 tensor {acts[1].shape}, bottleneck {acts[9].shape}")

trace.save(out / "trace")
print(f"trace written to {out / 'trace'}")
