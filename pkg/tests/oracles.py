"""Independent test oracles: brute-force enumerations kept deliberately free
of the library's own formulas so they can vouch for them.
"""

from fractions import Fraction
from itertools import combinations, product

import numpy as np


def enum_survival_fraction(n, s, alpha):
    """Exact single-type survival probability by enumerating every
    alpha-subset of n alerts and counting those disjoint from the attack's
    s alerts (taken to occupy indices 0..s-1)."""
    if alpha == 0:
        return Fraction(1)
    total = 0
    safe = 0
    for subset in combinations(range(n), alpha):
        total += 1
        if all(i >= s for i in subset):
            safe += 1
    if total == 0:  # alpha > n cannot happen under the preconditions
        raise ValueError("alpha exceeds n")
    return Fraction(safe, total)


def enum_survival(n_vec, s_vec, alpha_vec):
    """Multi-type survival probability: product of per-type enumerations
    (the inspected subsets of different types are independent)."""
    frac = Fraction(1)
    for n, s, alpha in zip(n_vec, s_vec, alpha_vec):
        frac *= enum_survival_fraction(n, s, alpha)
    return frac


def support_enumeration_value(u, tol=1e-9):
    """Zero-sum game value by support enumeration over both players.

    For each support pair, solves the indifference equations and checks the
    equilibrium conditions; returns the value of any valid equilibrium.
    """
    u = np.asarray(u, dtype=np.float64)
    n_rows, n_cols = u.shape
    for r_size in range(1, n_rows + 1):
        for c_size in range(1, n_cols + 1):
            for rows in combinations(range(n_rows), r_size):
                for cols in combinations(range(n_cols), c_size):
                    res = _try_support(u, rows, cols, tol)
                    if res is not None:
                        return res
    raise AssertionError("no equilibrium found (should be impossible)")


def _try_support(u, rows, cols, tol):
    sub = u[np.ix_(rows, cols)]
    k, m = sub.shape
    if k != m:
        return None  # generic equilibria of continuous games have square supports
    # unknowns: x (len k) on rows with value v; y (len m) on cols with value w
    a = np.zeros((k + 1, k + 1))
    a[:k, :k] = sub.T  # indifference of every column in the support
    a[:k, k] = -1.0
    a[k, :k] = 1.0
    b = np.zeros(k + 1)
    b[k] = 1.0
    try:
        x_sol = np.linalg.solve(a, b)
    except np.linalg.LinAlgError:
        return None
    x, v = x_sol[:k], x_sol[k]
    a2 = np.zeros((m + 1, m + 1))
    a2[:m, :m] = sub
    a2[:m, m] = -1.0
    a2[m, :m] = 1.0
    try:
        y_sol = np.linalg.solve(a2, b)
    except np.linalg.LinAlgError:
        return None
    y, w = y_sol[:m], y_sol[m]
    if (x < -tol).any() or (y < -tol).any() or abs(v - w) > 1e-6:
        return None
    x_full = np.zeros(u.shape[0])
    y_full = np.zeros(u.shape[1])
    x_full[list(rows)] = np.clip(x, 0.0, None)
    y_full[list(cols)] = np.clip(y, 0.0, None)
    x_full /= x_full.sum()
    y_full /= y_full.sum()
    value = float(x_full @ u @ y_full)
    # equilibrium check: no profitable pure deviation for either player
    if (u @ y_full).max() > value + 1e-6:
        return None
    if (x_full @ u).min() < value - 1e-6:
        return None
    return value, x_full, y_full


def enumerate_toy_matrix(cfg):
    """Exact one-round utility matrix of the toy scenario.

    Rows are defender decision rules (an inspection per reachable observation),
    columns are attack subsets; entries are discounted expected defender
    utilities computed with exact arithmetic from subset enumeration.
    """
    det = cfg.trigger_det
    losses = cfg.losses
    budget = cfg.defense_budget
    costs = cfg.inspect_costs
    subsets = list(product((0, 1), repeat=cfg.n_attacks))
    subsets = [s for s in subsets
               if sum(c * e for c, e in zip(s, cfg.attack_costs)) <= cfg.attack_budget]

    obs_for_subset = {s: tuple(int(sum(det[a, t] * s[a] for a in range(cfg.n_attacks)))
                               for t in range(cfg.n_alert_types))
                      for s in subsets}
    observations = sorted(set(obs_for_subset.values()))

    def feasible_actions(n):
        actions = []
        ranges = [range(x + 1) for x in n]
        for alpha in product(*ranges):
            if sum(a * c for a, c in zip(alpha, costs)) <= budget:
                actions.append(alpha)
        return actions

    per_obs_actions = {obs: feasible_actions(obs) for obs in observations}
    rules = list(product(*[per_obs_actions[obs] for obs in observations]))

    def expected_loss(rule, subset):
        obs = obs_for_subset[subset]
        alpha = rule[observations.index(obs)]
        loss = Fraction(0)
        for a in range(cfg.n_attacks):
            if not subset[a]:
                continue
            surv = enum_survival(obs, det[a], alpha)
            loss += Fraction(losses[a]).limit_denominator(10 ** 6) * surv
        return loss

    tau = Fraction(cfg.discount).limit_denominator(10 ** 6)
    matrix = np.array([[-float(tau * expected_loss(rule, s)) for s in subsets]
                       for rule in rules])
    return matrix, rules, subsets, observations
