from .static import *  # noqa: F401,F403
from .network import (
    Network, validate_network, make_complete, make_complete_bipartite, make_bipartite, make_lemma3_network
)
from .spectrum import Spectrum, spectrum, lemma2_bounds
from .equilibrium import (
    GameConfig, EquilibriumResult, equilibrium, welfare, regularity_margin, assumption1_bound,
    satisfies_assumption1, make_config
)
