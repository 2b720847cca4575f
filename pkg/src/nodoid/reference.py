"""Reference comparison values for the standard seven-mass grid.

These are the published reference estimates the ``table1`` command
recomputes: per mass, the quarter period b/3 = -a, the two rigorous bounds
for the first eigenvalue, the shooting (first-method) estimate, and the
Rayleigh-Ritz estimates at basis size 13 for the first seven eigenvalues
(the nearly degenerate pairs are quoted as a single value each).

The first-method entry for m = -20 reads -12 in the source table, which is
inconsistent with every other row and with the lambda0 = m - 1 law; it is
kept verbatim here and flagged as a suspected misprint (expected -21).
"""

MASS_GRID = (-0.25, -0.5, -1.0, -2.0, -3.0, -10.0, -20.0)

RITZ_N = 13

COLUMNS = (
    "quarter_period",
    "lower_bound",
    "mean_potential_bound",
    "lambda0_shoot",
    "lambda0_ritz",
    "lambda1_ritz",
    "lambda2_ritz",
    "lambda34_ritz",
    "lambda56_ritz",
)

REFERENCE_TABLE = {
    -0.25: {
        "quarter_period": 2.0137,
        "lower_bound": -2.25,
        "mean_potential_bound": -1.0522,
        "lambda0_shoot": -1.25,
        "lambda0_ritz": -1.245,
        "lambda1_ritz": -0.992,
        "lambda2_ritz": 0.00543,
        "lambda34_ritz": 1.44,
        "lambda56_ritz": 4.45,
    },
    -0.5: {
        "quarter_period": 1.656,
        "lower_bound": -2.5,
        "mean_potential_bound": -1.3643,
        "lambda0_shoot": -1.5,
        "lambda0_ritz": -1.4994,
        "lambda1_ritz": -0.9987,
        "lambda2_ritz": 0.00102,
        "lambda34_ritz": 2.279,
        "lambda56_ritz": 6.75,
    },
    -1.0: {
        "quarter_period": 1.3108,
        "lower_bound": -3.0,
        "mean_potential_bound": -1.9137,
        "lambda0_shoot": -2.0,
        "lambda0_ritz": -1.999,
        "lambda1_ritz": -0.9993,
        "lambda2_ritz": 0.00062,
        "lambda34_ritz": 3.86,
        "lambda56_ritz": 11.021,
    },
    -2.0: {
        "quarter_period": 1.0,
        "lower_bound": -4.0,
        "mean_potential_bound": -2.9483,
        "lambda0_shoot": -3.0,
        "lambda0_ritz": -2.999,
        "lambda1_ritz": -0.9932,
        "lambda2_ritz": 0.00615,
        "lambda34_ritz": 6.94,
        "lambda56_ritz": 19.26,
    },
    -3.0: {
        "quarter_period": 0.8428,
        "lower_bound": -5.0,
        "mean_potential_bound": -3.964,
        "lambda0_shoot": -4.0,
        "lambda0_ritz": -3.999,
        "lambda1_ritz": -0.999,
        "lambda2_ritz": 0.00069,
        "lambda34_ritz": 9.943,
        "lambda56_ritz": 27.3,
    },
    -10.0: {
        "quarter_period": 0.4849,
        "lower_bound": -12.0,
        "mean_potential_bound": -10.988,
        "lambda0_shoot": -11.0,
        "lambda0_ritz": -10.999,
        "lambda1_ritz": -0.9974,
        "lambda2_ritz": 0.00256,
        "lambda34_ritz": 30.99,
        "lambda56_ritz": 83.46,
    },
    -20.0: {
        "quarter_period": 0.34683,
        "lower_bound": -22.0,
        "mean_potential_bound": -20.994,
        "lambda0_shoot": -12.0,
        "lambda0_ritz": -20.999,
        "lambda1_ritz": -0.983,
        "lambda2_ritz": 0.0168,
        "lambda34_ritz": 61.056,
        "lambda56_ritz": 163.61,
    },
}

# (mass, column) -> value implied by the lambda0 = m - 1 law; the printed
# cell contradicts the rest of its own row.
SUSPECTED_MISPRINTS = {(-20.0, "lambda0_shoot"): -21.0}
