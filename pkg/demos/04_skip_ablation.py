"""
Skip ablation: which connections earn their keep?
=================================================

Trains four variants of the same U-Net and compares how fast each one
reaches the full model's best validation Dice:

* Model 1: all four skips enabled
* Model 2: top skip removed
* Model 3: top two removed
* Model 4: top three removed (only the deepest skip remains)

The deepest skip is never removed. The expectation, matching the
saturation analysis in demo 03, is that shallow skips cost the least
to drop and each further removal slows convergence: median
epochs-to-reach m2 <= m3 <= m4, with models 3 and 4 often never
reaching the target at this scale.

One caveat on reading the verdict: the full model converges through
its shallowest skip path with a head start of roughly ten epochs.
That start is near-constant, so at this small scale it is a large
fraction of model 1's total convergence time and the strict
"model 2 within 25% of model 1" flag is usually False here, even
though the two models differ by a scale-independent constant rather
than a rate.

This demo runs at a reduced scale (60 epochs, 2 seeds) so it finishes
in a few minutes; the acceptance suite runs the full version.
"""

from pathlib import Path

from infounet import analysis, data, unet

out = Path(__file__).parent / "out" / "ablation"
out.mkdir(parents=True, exist_ok=True)

dataset = data.gen_synthetic(96, 32, seed=7)
train_set, val_set = data.split(dataset, 64, 32, seed=11)
base = unet.NetworkSpec(input_size=32, levels=4, base_channels=8)

report = analysis.ablate_compare(
    base, train_set, val_set, epochs=60, seeds=(0, 1),
)

for m in report.models:
    skips = ", ".join(report.skips_per_model[m]) or "none"
    med = report.medians[m]
    print(f"model {m} (skips: {skips}): median epochs-to-reach = "
          f"{'never' if med is None else med}")

print(f"per-seed best val Dice of model 1: "
      f"{ {s: round(v, 3) for s, v in report.best_val_model1.items()} }")
print(f"ordering verdict: {report.ordering}")
if report.failed:
    print(f"failed runs: {report.failed}")

analysis.write_ablation_curves(report, out / "curves.csv")
print(f"per-epoch Dice curves -> {out / 'curves.csv'}")
