""" Joint intervention: the planner changes both the marginal utilities and the network """
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields

import numpy as np

from network_interventions.intervention.projection import project_feasible
from network_interventions.intervention.single import solve_single, stationarity_residual
from network_interventions.netgame.equilibrium import GameConfig, resolvent_solve
from network_interventions.netgame.network import Network, make_complete, validate_network
from network_interventions.netgame.static import (
    BOX_TOL, BudgetExhaustedError, PreconditionViolatedError, SingularSystemError
)
from network_interventions.orientation.cut import orient_bipartite, spectral_side

logger = logging.getLogger(__name__)

BUDGET_RESERVE = 1e-9
ARMIJO_FACTOR = 0.5
ARMIJO_SIGMA = 1e-4
MIN_STEP = 1e-20


@dataclass(frozen=True)
class SolverOptions:
    """ Numerical settings of the joint solver and its oracle """
    restarts: int = 16
    max_iters: int = 10000
    grad_tol: float = 1e-8
    step_init: float = 0.1
    seed: int = 0
    oracle_grid: int = 21
    workers: int = 1

    def __post_init__(self):
        for option in fields(self):
            value = getattr(self, option.name)
            if option.name == 'seed':
                if value < 0:
                    raise PreconditionViolatedError(f'seed must be nonnegative, got {value}')
            elif not value > 0:
                raise PreconditionViolatedError(f'{option.name} must be positive, got {value}')

    @classmethod
    def names(cls):
        return [option.name for option in fields(cls)]


@dataclass(frozen=True, eq=False)
class JointProblem:
    """ The game, the cost κ of changing links, the total budget C and the solver options """
    cfg: GameConfig
    kappa: float
    C: float
    options: SolverOptions = field(default_factory=SolverOptions)

    def __post_init__(self):
        if not (math.isfinite(self.kappa) and self.kappa > 0):
            raise PreconditionViolatedError(f'kappa must be positive and finite, got {self.kappa}')
        if not (math.isfinite(self.C) and self.C >= 0):
            raise PreconditionViolatedError(f'The budget must be nonnegative and finite, got {self.C}')

    @property
    def radius(self):
        """ Frobenius radius of the link-change ball, keeping a sliver of the budget for the utilities """
        return math.sqrt(self.C * (1 - BUDGET_RESERVE) / self.kappa)

    def with_budget(self, C):
        return JointProblem(cfg=self.cfg, kappa=self.kappa, C=C, options=self.options)


@dataclass(frozen=True, eq=False)
class KKTReport:
    """
        Residuals of the first-order conditions at a joint solution.

        stationarity_a is ‖(I−φg)⁻²a − μ(a − ahat)‖. link_residuals[i][j] is |∂ᵢⱼ| for an interior
        link and the violated part of the sign condition for a link at 0 or wbar.
    """
    stationarity_a: float
    link_residuals: np.ndarray
    max_violation: float


@dataclass(frozen=True, eq=False)
class JointSolution:
    a_star: np.ndarray
    g_star: Network
    mu_star: float
    value: float
    budget_on_g: float
    budget_on_a: float
    kkt: KKTReport
    restart_values: list
    converged: bool = True
    iterations: list = field(default_factory=list)
    multiplicity_warning: bool = False


def _evaluate(p, w):
    """ Returns: (F(w), Frobenius gradient, inner SingleSolution) """
    cfg = p.cfg
    ghat = cfg.ghat.w
    remaining = p.C - p.kappa * float(np.sum((w - ghat) ** 2))
    if remaining < 0:
        raise BudgetExhaustedError(f'Link changes cost {p.C - remaining} which exceeds the budget {p.C}')
    inner = solve_single(cfg, w, remaining)
    x = resolvent_solve(cfg, w, inner.a_star)
    y = resolvent_solve(cfg, w, x)
    grad = cfg.phi * (np.outer(x, y) + np.outer(y, x))
    if math.isfinite(inner.mu_star):
        grad -= 2 * inner.mu_star * p.kappa * (w - ghat)
    np.fill_diagonal(grad, 0.0)
    return inner.value, grad, inner


def objective_and_gradient(p, g):
    """ The reduced objective F(g) = V_single(g, C − κ‖g − ghat‖²) and its gradient.

    The gradient comes from the envelope theorem at the inner optimum (a*, μ*):
    φ(xyᵀ + yxᵀ) − 2μ*κ(g − ghat) with x = (I−φg)⁻¹a* and y = (I−φg)⁻¹x, diagonal zeroed.
    It is the Frobenius gradient, so perturbing g_ij and g_ji together changes F at twice grad[i][j].

    Args:
        p (JointProblem): The problem
        g (Network|np.ndarray): A network within the budget

    Returns: (value, grad)
    """
    w = np.asarray(getattr(g, 'w', g), dtype=float)
    value, grad, _ = _evaluate(p, w)
    return value, grad


@dataclass
class _Run:
    """ State of one projected-gradient restart """
    index: int
    w: np.ndarray
    value: float = -math.inf
    converged: bool = False
    iterations: int = 0


def _ascend(p, start, index):
    """ Projected gradient ascent with Armijo backtracking from one start """
    options = p.options
    ghat = p.cfg.ghat.w
    wbar = p.cfg.wbar
    radius = p.radius
    run = _Run(index=index, w=start)
    try:
        value, grad, _ = _evaluate(p, run.w)
    except SingularSystemError:
        logger.debug('Restart %s starts at a singular network; skipping', index)
        return run
    for iteration in range(options.max_iters):
        run.iterations = iteration
        scale = max(1.0, abs(value))
        step = options.step_init
        trial = project_feasible(run.w + step * grad, ghat, radius, wbar)
        if np.linalg.norm(trial - run.w) / step < options.grad_tol * scale:
            run.converged = True
            break
        slack = 4 * np.finfo(float).eps * scale
        accepted = False
        while step >= MIN_STEP:
            try:
                trial_value, trial_grad, _ = _evaluate(p, trial)
            except (SingularSystemError, BudgetExhaustedError):
                trial_value = -math.inf
            if trial_value >= value + ARMIJO_SIGMA * float(np.sum(grad * (trial - run.w))) - slack:
                accepted = True
                break
            step *= ARMIJO_FACTOR
            trial = project_feasible(run.w + step * grad, ghat, radius, wbar)
        if not accepted:
            # No step improves beyond roundoff: accept as stationary when close to the tolerance
            mapping = np.linalg.norm(project_feasible(run.w + options.step_init * grad, ghat, radius, wbar)
                                     - run.w) / options.step_init
            run.converged = mapping < math.sqrt(options.grad_tol) * scale
            logger.debug('Restart %s stalled at iteration %s, gradient mapping %s', index, iteration, mapping)
            break
        run.w, value, grad = trial, trial_value, trial_grad
    else:
        run.iterations = options.max_iters
    run.value = value
    logger.info('Restart %s finished at %s after %s iterations (converged=%s)',
                index, value, run.iterations, run.converged)
    return run


def _starts(p, initial_networks):
    """ Restart 0 at ghat, restart 1 at the structured large-budget guess, then warm starts and random ones """
    cfg = p.cfg
    ghat = cfg.ghat.w
    n, wbar, radius = cfg.n, cfg.wbar, p.radius
    starts = [ghat.copy()]
    if p.options.restarts >= 2 and n >= 2:
        if cfg.phi < 0:
            guess = orient_bipartite(spectral_side(ghat), n, wbar).w
        else:
            guess = make_complete(n, wbar).w
        starts.append(project_feasible(guess, ghat, radius, wbar))
    for network in initial_networks:
        starts.append(project_feasible(np.asarray(getattr(network, 'w', network), dtype=float), ghat, radius, wbar))
    structured = len(starts)
    for r in range(structured, structured + p.options.restarts - min(p.options.restarts, 2)):
        rng = np.random.default_rng(p.options.seed + r)
        noise = np.triu(rng.uniform(-wbar, wbar, size=(n, n)), k=1)
        starts.append(project_feasible(ghat + noise + noise.T, ghat, radius, wbar))
    return starts


def kkt_report(p, w, inner):
    """ First-order optimality residuals of a joint solution.

    Args:
        p (JointProblem): The problem
        w (np.ndarray): The network g*
        inner (SingleSolution): The inner solution on g*

    Returns: The KKTReport
    """
    cfg = p.cfg
    stationarity = stationarity_residual(cfg, w, inner)
    if p.C == 0:
        residuals = np.zeros_like(w)
    else:
        _, grad, _ = _evaluate(p, w)
        residuals = np.abs(grad)
        lower = w <= BOX_TOL
        upper = w >= cfg.wbar - BOX_TOL
        residuals = np.where(lower, np.maximum(grad, 0.0), residuals)
        residuals = np.where(upper, np.maximum(-grad, 0.0), residuals)
        np.fill_diagonal(residuals, 0.0)
    return KKTReport(stationarity_a=stationarity, link_residuals=residuals,
                     max_violation=float(max(stationarity, residuals.max(initial=0.0))))


def _solution(p, w, restart_values, converged, iterations):
    cfg = p.cfg
    budget_on_g = p.kappa * float(np.sum((w - cfg.ghat.w) ** 2))
    inner = solve_single(cfg, w, max(p.C - budget_on_g, 0.0))
    return JointSolution(
        a_star=inner.a_star,
        g_star=validate_network(w, cfg.wbar),
        mu_star=inner.mu_star,
        value=inner.value,
        budget_on_g=budget_on_g,
        budget_on_a=float(np.sum((inner.a_star - cfg.ahat) ** 2)),
        kkt=kkt_report(p, w, inner),
        restart_values=restart_values,
        converged=converged,
        iterations=iterations,
        multiplicity_warning=inner.multiplicity_warning
    )


def solve_joint(p, initial_networks=()):
    """ Optimal joint intervention by multi-start projected gradient ascent on the network.

    Each iterate g is scored by the exact single intervention with the budget left after paying
    κ‖g − ghat‖² for the links. Restarts run independently and the best value wins, ties going
    to the lowest restart index.

    Args:
        p (JointProblem): The problem
        initial_networks (iterable): Extra starting networks, projected to feasibility

    Returns: The JointSolution; converged is False when no restart met the gradient tolerance
    """
    cfg = p.cfg
    if p.C == 0:
        return _solution(p, cfg.ghat.w.copy(), [welfare_at_ghat(p)], True, [0])
    starts = _starts(p, list(initial_networks))
    logger.debug('Running %s restarts on %s worker(s)', len(starts), p.options.workers)
    if p.options.workers > 1:
        with ThreadPoolExecutor(max_workers=p.options.workers) as pool:
            runs = list(pool.map(lambda item: _ascend(p, item[1], item[0]), enumerate(starts)))
    else:
        runs = [_ascend(p, start, index) for index, start in enumerate(starts)]
    best = runs[0]
    for run in runs[1:]:
        if run.value > best.value:
            best = run
    converged = any(run.converged for run in runs)
    if not converged:
        logger.warning('No restart met the gradient tolerance %s; returning the best iterate', p.options.grad_tol)
    return _solution(p, best.w, [run.value for run in runs], converged, [run.iterations for run in runs])


def welfare_at_ghat(p):
    """ Returns: âᵀ(I − φĝ)⁻²â, the value with no intervention """
    return solve_single(p.cfg, p.cfg.ghat.w, 0.0).value
