#!/usr/bin/env python
# How strongly a relative flux error is magnified in the estimate.
import numpy as np

from thermoprobe import elasticity, example_spec, run_experiment, sample_curve, vertical_asymptote
from thermoprobe.experiments import amplification_ratios

for example in (1, 2, 3):
    spec = example_spec(example)
    cfg = spec.config
    q_bar = vertical_asymptote(cfg)
    curve = sample_curve(cfg, 0.05 * q_bar, 0.99 * q_bar, 7)
    print("\nkappa_B = %g, asymptote %.3f" % (cfg.kappa_B, q_bar))
    for q, e in curve.samples:
        print("  q = %8.3f  E = %8.3f" % (q, e))
    print("  at the true flux %.3f: E = %.3f" % (spec.true_flux, elasticity(cfg, spec.true_flux)))

# The observed ratio rel_error(kappa)/rel_error(q) is exactly E at the
# measured flux, so near a steep asymptote it drifts away from E(q).
spec = example_spec(2)
rows = run_experiment(spec)
ratios = amplification_ratios(rows, spec.true_flux)
e_true = elasticity(spec.config, spec.true_flux)
print("\nAl/Pb: E(q) = %.3f" % e_true)
for r, ratio in zip(rows, ratios):
    print("  q_hat %.0f  ratio %7.3f  E(q_hat) %7.3f" % (r.q_hat, ratio, elasticity(spec.config, r.q_hat)))
print("spread of ratios: %.1f%%" % (100 * np.ptp(ratios) / e_true))
