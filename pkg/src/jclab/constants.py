"""Repo-wide numerical tolerances."""

#: max |U^dagger U - I| for constructed unitaries
UNITARY_TOL = 1e-10
#: max |rho - rho^dagger| for density matrices
HERMITIAN_TOL = 1e-12
#: looser Hermiticity gate for eigensolver input
EIG_HERMITIAN_TOL = 1e-10
#: smallest eigenvalue accepted as positive semidefinite
PSD_TOL = 1e-10
#: required truncated trace of a constructed state: trace >= 1 - TRACE_TOL
TRACE_TOL = 1e-8
#: largest normalization deficit accepted by moment calculations
NORMALIZATION_TOL = 1e-6
#: bound on n_max^2 P(n_max) for G2(0); the n^2 weight amplifies a truncated tail
MOMENT_TAIL_TOL = 1e-14
#: negative PCD entries above -PROB_CLAMP_TOL are clamped to zero
PROB_CLAMP_TOL = 1e-12
#: oracle-vs-closed-form and route-equivalence tolerance
ORACLE_TOL = 1e-8

#: default truncation search
NMAX_START = 128
NMAX_LIMIT = 4096
NMAX_ENV = "JC_LAB_NMAX"

#: field tail mass discarded before Jaynes-Cummings evolution
JC_TAIL_TOL = 1e-13
