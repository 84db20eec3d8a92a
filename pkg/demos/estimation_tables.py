#!/usr/bin/env python
# Recover the hidden conductivity from noisy flux readings on the 10 m
# reference bar, for the three material pairs.
from thermoprobe import (ConductivityBounds, admissible_interval, build_report, example_spec,
                         run_experiment, summarize)

names = {1: "Fe (hidden) / Ag", 2: "Al (hidden) / Pb", 3: "Ag (hidden) / Cu"}

for example in (1, 2, 3):
    spec = example_spec(example)
    rows = run_experiment(spec)
    print("\n%s   true kappa_A = %g   q = %.4f" % (names[example], spec.true_kappa_A, spec.true_flux))
    print("   q_hat    kappa_hat   |dq|     |dk|     rel")
    for r in rows:
        print("%8.1f  %10.4f  %6.3f  %7.3f  %6.3f"
              % (r.q_hat, r.kappa_hat, r.data_error, r.abs_error, r.rel_error))
    s = summarize(rows, spec)
    print("max rel error %.4f, elasticity at q %.3f" % (s.max_rel_error, s.elasticity_at_true_flux))

# Lead has a low conductivity, so the admissible window is narrow and an
# error of a few W/m^2 moves the aluminium estimate by tens of units.
spec = example_spec(2)
bounds = ConductivityBounds(50.0, 500.0)
window = admissible_interval(spec.config, bounds)
print("\nAl/Pb window for kappa in [50, 500]: (%.3f, %.3f), asymptote %.3f"
      % (window.q_min, window.q_max, window.q_asymptote))
report = build_report(spec.config, 258.0, noise_level=1.0, bounds=bounds)
print("q_hat = 258: kappa_hat %.3f, certified error < %.1f" % (report.kappa_hat, report.absolute_error_bound))
report = build_report(spec.config, 275.0, noise_level=1.0, bounds=bounds)
print("q_hat = 275: admissible=%s (%s)" % (report.admissible, report.reason))
