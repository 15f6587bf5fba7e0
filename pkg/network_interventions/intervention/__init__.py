from network_interventions.intervention.single import (
    SingleSolution, solve_single, stationarity_residual, shadow_price_limit, equal_payoff_single
)
from network_interventions.intervention.projection import project_feasible, dykstra_projection
from network_interventions.intervention.joint import (
    SolverOptions, JointProblem, KKTReport, JointSolution, objective_and_gradient, solve_joint, kkt_report
)
from network_interventions.intervention.oracle import oracle_joint
from network_interventions.intervention.structure import (
    LinkStructureReport, check_theorem1, small_budget_asymptotics
)
