from network_interventions.orientation.cut import (
    CutResult, cut_weight, spectral_side, balanced_maxcut_exact, balanced_maxcut_heuristic,
    orient_bipartite, orientation_cost
)
