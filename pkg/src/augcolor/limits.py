"""Size caps for the exact / brute-force routines.

All caps live here so desk-scale runtimes stay bounded and the numbers are
documented in one place. They can be overridden per call via the `cap`
keyword of the functions that enforce them.
"""

# exact_chromatic: iterative deepening + backtracking; minutes beyond ~16.
EXACT_CHROMATIC_CAP = 16

# maximum_independent_set: bitset branch and bound.
EXACT_MIS_CAP = 40

# count_independent_sets on arbitrary (non-multipartite) graphs.
BRUTE_FORCE_COUNT_CAP = 30

# host_coloring falls back to exact_chromatic for DIMACS hosts up to here;
# larger hosts must come with a user-provided coloring.
HOST_EXACT_COLORING_CAP = EXACT_CHROMATIC_CAP

# Default backtracking-node budget for the size-k independent set search.
DEFAULT_IS_NODE_LIMIT = 10**8
