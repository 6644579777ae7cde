"""Package-wide default tolerances."""

# Relative tolerance for symmetry predicates and exclusion (norm-ratio) tests.
# Two orders above double-precision accumulation error at the supported sizes.
DEFAULT_TOL = 1e-10

# Relative singular-value cutoff for rank counting.
DEFAULT_RANK_TOL = 1e-8

# Construction inputs must be unit-normalized within this, unless the caller
# explicitly asks for renormalization.
INPUT_NORM_TOL = 1e-8
