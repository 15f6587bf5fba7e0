from network_interventions.analysis.inequality import (
    InequalityReport, theil_index, eigencentrality_entropy, payoff_inequality
)
from network_interventions.analysis.welfare import (
    welfare_limit, welfare_ratio_limit, lemma3_bound, welfare_cost_of_equality, equal_payoff_welfare_bound
)
from network_interventions.analysis.partition import SignPartition, sign_partition
