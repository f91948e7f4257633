"""
U-plots, the data-processing inequality, and saturation
=======================================================

Three reads of the same MI trajectory:

* U-plots: MI versus layer index, one curve per epoch. For a U-Net the
  I_YM curve is U-shaped, and skip connections prop up the decoder side.
* DPI check: along a plain feed-forward chain, I(X;M_i) cannot grow from
  one layer to the next. At merge layers a skip connection injects a
  second stream, so an increase there is expected; anywhere else it
  would be an estimator anomaly worth flagging.
* Saturation: the first capture epoch at which a layer's I(Y;M) stays
  within epsilon of its maximum. Merge layers fed by deeper skips
  saturate later, and that ordering predicts which skip removals hurt.

Requires demos 01 and 02 to have been run.
"""

import sys
from pathlib import Path

from infounet import analysis, svgplot, unet
from infounet.trace import ActivationTrace

out = Path(__file__).parent / "out" / "run"
if not (out / "mi.csv").is_file():
    sys.exit("run demos/01 and 02 first")

traj = analysis.MITrajectory.from_csv(out / "mi.csv")
trace = ActivationTrace.load(out / "trace")
graph = unet.build(unet.NetworkSpec.from_dict(trace.spec_echo))

# --- U-plots ---------------------------------------------------------
table = analysis.uplot(traj, "i_ym_bits")
epochs = sorted(table.rows)
first, last = epochs[0], epochs[-1]
print(f"I_YM u-plot, epochs {first} vs {last}:")
for layer in (1, 5, 9, 14, 20, 23):
    col = table.layers.index(layer)
    a = table.rows[first][col]
    b = table.rows[last][col]
    print(f"  layer {layer:2d}: {a:.2f} -> {b:.2f} bits")
paths = svgplot.uplot_svgs(traj, out / "plots")
print(f"u-plot SVGs: {[p.name for p in paths]}")

# --- DPI check -------------------------------------------------------
# Flags every adjacent-layer MI jump beyond 0.1 bits. Jumps into merge
# layers {11, 14, 17, 20} are tagged expected-merge; the rest anomaly.
report = analysis.dpi_check(traj, graph, tolerance=0.1)
final = traj.epochs()[-1]
merges = report.at_epoch(final, chain="forward", tag="expected-merge")
print(f"epoch {final}: {len(merges)} forward expected-merge rise(s) at "
      f"{sorted(f.pair[1] for f in merges)}")

# Single-stream segments (no skip in or out) should be clean on the
# forward chain; anything else means the estimator misbehaved.
single = set(analysis.single_stream_pairs(graph))
bad = [f for f in report.at_epoch(final, chain="forward", tag="anomaly")
       if f.pair in single]
print(f"single-stream forward anomalies: {len(bad)}")

# --- Saturation ------------------------------------------------------
sat = analysis.saturation_detect(traj, 0.1, graph)
for m in (20, 17, 14, 11):
    e = sat.saturation[m]
    print(f"merge {m}: saturates at epoch {'never' if e is None else e}")
print("late saturation at deep merges = the skips into them still carry")
print("fresh target information; removing those should cost the most:")
for pred in sat.predictions:
    when = pred["watch_saturation_epoch"]
    status = f"removable (watch layer {pred['watch_layer']} saturated at {when})" \
        if pred["removable"] else f"keep (watch layer {pred['watch_layer']} not saturated)"
    print(f"  skip {pred['skip']} ({pred['source']} -> {pred['merge']}): {status}")
