"""The restricted-game loop: grow each player's policy set with best-response
oracles, estimate utilities by Monte Carlo with common random numbers, solve
the restricted matrix game, and stop when neither oracle beats the current
equilibrium by more than the tolerance.
"""

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import env, matrix_game, oracle, policy

# seed-domain tags; keep distinct so derived streams never collide
_ROLLOUT = 11
_ORACLE_DEF = 12
_ORACLE_ATT = 13
_EVAL = 14
_EVAL_ORACLE = 15


@dataclass
class DoubleOracleConfig:
    """Knobs of one solver run; everything downstream derives from master_seed."""
    rollouts_per_entry: int = 200
    eval_horizon: int = 150
    improvement_tol: float = None  # None: one combined standard error, floored
    max_iterations: int = 30
    def_hp: oracle.OracleHyperparams = None
    att_hp: oracle.OracleHyperparams = None
    master_seed: int = 0
    carryover: bool = False

    def __post_init__(self):
        if self.rollouts_per_entry < 1 or self.eval_horizon < 1:
            raise ValueError("rollout counts and horizon must be >= 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.improvement_tol is not None and self.improvement_tol < 0:
            raise ValueError("improvement_tol must be >= 0")


@dataclass
class IterationRecord:
    iteration: int
    n_def: int
    n_att: int
    value: float
    def_improvement: float
    att_improvement: float


@dataclass
class RestrictedGame:
    """The solver's result: policy lists, the Monte Carlo utility matrix with
    per-entry standard errors, and the equilibrium mix over each list."""
    def_policies: list
    att_policies: list
    utilities: np.ndarray
    std_errors: np.ndarray
    sigma_def: np.ndarray
    sigma_att: np.ndarray
    value: float
    iterations: int
    converged: bool
    history: list = field(default_factory=list)

    def value_std_error(self):
        weights = np.outer(self.sigma_def, self.sigma_att)
        return float(np.sqrt(((weights * self.std_errors) ** 2).sum()))


def _rollout_once(def_s, att_s, cfg, horizon, seed, r, carryover):
    rng = np.random.default_rng(np.random.SeedSequence([seed, _ROLLOUT, r]))
    return env.rollout(def_s, att_s, cfg, horizon, rng, carryover=carryover)


def estimate_utility(def_s, att_s, cfg, n_rollouts, horizon, seed,
                     carryover=False, threads=1):
    """Monte Carlo estimate of the defender's expected discounted return.

    Rollout r always uses the stream derived from (seed, r), so estimates for
    different policy pairs share random numbers when given the same seed.

    :return: (mean, standard error); the standard error is 0 for n_rollouts = 1.
    """
    if n_rollouts < 1:
        raise ValueError("n_rollouts must be >= 1")
    if threads > 1 and n_rollouts > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            returns = list(pool.map(
                lambda r: _rollout_once(def_s, att_s, cfg, horizon, seed, r, carryover),
                range(n_rollouts)))
    else:
        returns = [_rollout_once(def_s, att_s, cfg, horizon, seed, r, carryover)
                   for r in range(n_rollouts)]
    returns = np.asarray(returns)
    mean = float(returns.mean())
    se = float(returns.std(ddof=1) / np.sqrt(n_rollouts)) if n_rollouts > 1 else 0.0
    return mean, se


def run(cfg, doc, progress=None, oracle_log=None, threads=1):
    """Run the double oracle until neither best response improves.

    Starts from the uniform-budget policy pair, alternates equilibrium solves
    with oracle training, and extends the utility matrix incrementally
    (existing entries are never recomputed). Matrix entries are independent;
    with threads > 1 they are estimated concurrently, and because every
    rollout stream is derived from (master seed, rollout index) the result is
    identical for any thread count.

    :param progress: optional callable receiving an IterationRecord per iteration.
    :param oracle_log: optional callable(player, iteration, metrics list).
    :return: RestrictedGame holding the final equilibrium.
    """
    def_policies = [policy.UniformDefender()]
    att_policies = [policy.UniformAttacker()]
    loss_floor = 1e-3 * float(cfg.losses.max())
    seed = doc.master_seed

    def entry(def_s, att_s):
        return estimate_utility(def_s, att_s, cfg, doc.rollouts_per_entry,
                                doc.eval_horizon, seed, carryover=doc.carryover)

    def entries(pairs):
        if threads > 1 and len(pairs) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                return list(pool.map(lambda p: entry(*p), pairs))
        return [entry(*p) for p in pairs]

    u00 = entry(def_policies[0], att_policies[0])
    utilities = np.array([[u00[0]]])
    std_errors = np.array([[u00[1]]])

    def_hp = doc.def_hp or oracle.OracleHyperparams.for_scenario(cfg)
    att_hp = doc.att_hp or oracle.OracleHyperparams.for_scenario(cfg)

    history = []
    converged = False
    sigma_def, sigma_att, value = matrix_game.solve_zero_sum(utilities)
    iteration = 0

    for iteration in range(1, doc.max_iterations + 1):
        sigma_def, sigma_att, value = matrix_game.solve_zero_sum(utilities)
        value_se = float(np.sqrt(
            ((np.outer(sigma_def, sigma_att) * std_errors) ** 2).sum()))

        hp_d = dataclasses.replace(
            def_hp, seed=_derive_seed(seed, _ORACLE_DEF, iteration))
        hp_a = dataclasses.replace(
            att_hp, seed=_derive_seed(seed, _ORACLE_ATT, iteration))
        metrics_d, metrics_a = [], []
        new_def = oracle.best_response(
            +1, policy.MixedStrategy(att_policies, sigma_att), cfg, hp_d,
            metrics=metrics_d, carryover=doc.carryover)
        new_att = oracle.best_response(
            -1, policy.MixedStrategy(def_policies, sigma_def), cfg, hp_a,
            metrics=metrics_a, carryover=doc.carryover)
        new_def.label = "neural-defender-%d" % iteration
        new_att.label = "neural-attacker-%d" % iteration
        if oracle_log is not None:
            oracle_log(+1, iteration, metrics_d)
            oracle_log(-1, iteration, metrics_a)

        # candidate row: new defender against every stored attacker policy
        row = entries([(new_def, att) for att in att_policies])
        row_mean = np.array([m for m, _ in row])
        row_se = np.array([s for _, s in row])
        def_value = float(row_mean @ sigma_att)
        def_value_se = float(np.sqrt(((sigma_att * row_se) ** 2).sum()))
        def_improvement = def_value - value

        # candidate column: every stored defender policy against the new attacker
        col = entries([(dp, new_att) for dp in def_policies])
        col_mean = np.array([m for m, _ in col])
        col_se = np.array([s for _, s in col])
        att_value = float(col_mean @ sigma_def)
        att_value_se = float(np.sqrt(((sigma_def * col_se) ** 2).sum()))
        att_improvement = value - att_value

        if doc.improvement_tol is not None:
            tol_def = tol_att = doc.improvement_tol
        else:
            tol_def = max(np.hypot(def_value_se, value_se), loss_floor)
            tol_att = max(np.hypot(att_value_se, value_se), loss_floor)

        history.append(IterationRecord(iteration, len(def_policies),
                                       len(att_policies), value,
                                       def_improvement, att_improvement))
        if progress is not None:
            progress(history[-1])

        add_def = def_improvement > tol_def
        add_att = att_improvement > tol_att
        if not add_def and not add_att:
            converged = True
            break

        if add_def:
            def_policies.append(new_def)
            utilities = np.vstack([utilities, row_mean])
            std_errors = np.vstack([std_errors, row_se])
        if add_att:
            att_policies.append(new_att)
            if add_def:
                corner = entry(new_def, new_att)
                col_mean = np.append(col_mean, corner[0])
                col_se = np.append(col_se, corner[1])
            utilities = np.hstack([utilities, col_mean.reshape(-1, 1)])
            std_errors = np.hstack([std_errors, col_se.reshape(-1, 1)])

    sigma_def, sigma_att, value = matrix_game.solve_zero_sum(utilities)
    return RestrictedGame(
        def_policies=def_policies, att_policies=att_policies,
        utilities=utilities, std_errors=std_errors,
        sigma_def=sigma_def, sigma_att=sigma_att, value=value,
        iterations=iteration, converged=converged, history=history)


def _derive_seed(master, domain, index):
    return int(np.random.SeedSequence([master, domain, index]).generate_state(1)[0])


@dataclass
class EvalResult:
    mean_loss: float
    ci95: float
    episodes: int
    attacker_label: str


ATTACKER_MODELS = ("oracle", "uniform", "greedy", "none")


def evaluate_matchup(defender, attacker_model, cfg, episodes, horizon, seed,
                     oracle_hp=None, carryover=False):
    """Mean defender loss (positive numbers are bad) against one attacker model.

    For the "oracle" model a best-response attacker is first trained against
    the given defender strategy; fixed baselines are evaluated directly. A
    mixed defender strategy is resampled every episode.

    :return: EvalResult with a 95% confidence half-width.
    """
    if isinstance(defender, policy.PureStrategy):
        defender = policy.MixedStrategy.pure(defender)
    if attacker_model == "oracle":
        hp = oracle_hp or oracle.OracleHyperparams.for_scenario(cfg)
        hp = dataclasses.replace(hp, seed=_derive_seed(seed, _EVAL_ORACLE, 0))
        attacker = oracle.best_response(-1, defender, cfg, hp, carryover=carryover)
    elif attacker_model == "uniform":
        attacker = policy.UniformAttacker()
    elif attacker_model == "greedy":
        attacker = policy.GreedyAttacker()
    elif attacker_model == "none":
        attacker = policy.NoOp(policy.ATTACKER)
    else:
        raise ValueError("unknown attacker model %r (expected one of %s)"
                         % (attacker_model, ", ".join(ATTACKER_MODELS)))

    losses = np.empty(episodes)
    for e in range(episodes):
        rng = np.random.default_rng(np.random.SeedSequence([seed, _EVAL, e]))
        pure = defender.sample_pure(rng)
        losses[e] = -env.rollout(pure, attacker, cfg, horizon, rng,
                                 carryover=carryover)
    mean = float(losses.mean())
    se = float(losses.std(ddof=1) / np.sqrt(episodes)) if episodes > 1 else 0.0
    return EvalResult(mean_loss=mean, ci95=1.96 * se, episodes=episodes,
                      attacker_label=attacker_model)
