"""Strategies: observation encodings, the continuous-action relaxations and
their feasibility-preserving decoders, neural policies, and the baselines.

Every strategy is immutable once built and safe to share across concurrent
rollouts; all randomness comes from the Generator passed to `act`.
"""

import numpy as np

from . import nn

DEFENDER = "defender"
ATTACKER = "attacker"


class PolicyError(ValueError):
    pass


# -- observations ---------------------------------------------------------------

def obs_defender(state, cfg):
    """The defender's view: per-type alert counts, normalized."""
    return state.n / cfg.obs_scale_arr


def obs_attacker(state, cfg):
    """The attacker's view: scaled counts, execution flags, scaled attack alerts."""
    return np.concatenate([state.n / cfg.obs_scale_arr,
                           state.m.astype(np.float64),
                           (state.s / cfg.obs_scale_arr).ravel()])


def defender_obs_dim(cfg):
    return cfg.n_alert_types


def attacker_obs_dim(cfg):
    return cfg.n_alert_types + cfg.n_attacks * (1 + cfg.n_alert_types)


# -- action decoding ---------------------------------------------------------------

def decode_defender(raw, n, cfg):
    """Turn budget fractions into a feasible inspection action.

    Each raw_t is the fraction of the defense budget offered to type t; the
    offers are rescaled if they oversubscribe the budget, then floored to
    whole affordable alerts and capped at the alerts present. The result
    satisfies the budget and availability constraints by construction.
    """
    raw = np.asarray(raw, dtype=np.float64)
    budget = cfg.defense_budget
    b = raw * budget
    total = b.sum()
    if total > budget and total > 0:
        b = b * (budget / total)
    costs = cfg.inspect_costs
    if (costs <= 0).any():  # free types are capped only by availability
        quota = np.where(costs > 0, b / np.where(costs > 0, costs, 1.0), np.inf)
    else:
        quota = b / costs
    alpha = np.floor(np.minimum(n, quota)).astype(np.int64)
    # guard against float round-off at the budget boundary; must hold exactly
    spend = float(costs @ alpha)
    while spend > budget:
        t = int(np.argmax(costs * alpha))
        alpha[t] -= 1
        spend = float(costs @ alpha)
    return alpha


def project_attacker(raw, cfg):
    """Scale attack probabilities so the expected execution cost fits the budget."""
    raw = np.asarray(raw, dtype=np.float64)
    cost = float(raw @ cfg.attack_costs)
    if cost > cfg.attack_budget:
        return raw * (cfg.attack_budget / cost)
    return raw


def sample_attack(probs, rng):
    """Independent Bernoulli execution draw per attack."""
    probs = np.asarray(probs, dtype=np.float64)
    return (rng.random(probs.shape[0]) < probs).astype(np.int64)


# -- pure strategies ---------------------------------------------------------------

class PureStrategy:
    """A deterministic policy: observation -> action (the action itself may
    be a sampled realization of attack probabilities)."""

    role = None
    label = "strategy"

    def act(self, state, cfg, rng):
        raise NotImplementedError


class NeuralStrategy(PureStrategy):
    """A trained policy network plus the standard decoder/projector."""

    def __init__(self, params, role, label=None):
        if role not in (DEFENDER, ATTACKER):
            raise PolicyError("role must be defender or attacker")
        self.params = params
        self.role = role
        self.label = label or ("neural-%s" % role)

    def act(self, state, cfg, rng):
        if self.role == DEFENDER:
            if self.params.in_dim != defender_obs_dim(cfg) or \
               self.params.out_dim != cfg.n_alert_types:
                raise PolicyError("network dimensions do not match the scenario")
            raw, _ = nn.forward(self.params, obs_defender(state, cfg))
            return decode_defender(raw, state.n, cfg)
        if self.params.in_dim != attacker_obs_dim(cfg) or \
           self.params.out_dim != cfg.n_attacks:
            raise PolicyError("network dimensions do not match the scenario")
        raw, _ = nn.forward(self.params, obs_attacker(state, cfg))
        return sample_attack(project_attacker(raw, cfg), rng)


class UniformDefender(PureStrategy):
    """Offers an equal budget fraction to every alert type."""

    role = DEFENDER
    label = "uniform-defender"

    def act(self, state, cfg, rng):
        raw = np.full(cfg.n_alert_types, 1.0 / cfg.n_alert_types)
        return decode_defender(raw, state.n, cfg)


class UniformAttacker(PureStrategy):
    """Spreads the attack budget evenly over attacks, as execution probability."""

    role = ATTACKER
    label = "uniform-attacker"

    def act(self, state, cfg, rng):
        share = cfg.attack_budget / cfg.n_attacks
        raw = np.minimum(1.0, share / cfg.attack_costs)
        return sample_attack(project_attacker(raw, cfg), rng)


class GreedyAttacker(PureStrategy):
    """Executes attacks in descending L_a * min(D / E_a, 1) order while the
    remaining budget covers them, skipping unaffordable ones; ties break
    toward the lower attack id."""

    role = ATTACKER
    label = "greedy-attacker"

    def act(self, state, cfg, rng):
        scores = cfg.losses * np.minimum(
            np.divide(cfg.attack_budget, cfg.attack_costs,
                      out=np.full(cfg.n_attacks, np.inf),
                      where=cfg.attack_costs > 0), 1.0)
        chosen = np.zeros(cfg.n_attacks, dtype=np.int64)
        remaining = cfg.attack_budget
        for a in sorted(range(cfg.n_attacks), key=lambda a: (-scores[a], a)):
            if cfg.attack_costs[a] <= remaining:
                chosen[a] = 1
                remaining -= cfg.attack_costs[a]
        return chosen


class StaticPriorityDefender(PureStrategy):
    """Spends the budget on alert types in ascending priority number (1 is
    highest), exhausting each type before moving to the next."""

    role = DEFENDER

    def __init__(self, priorities, label="priority-defender"):
        self.priorities = tuple(priorities)
        self.label = label

    def act(self, state, cfg, rng):
        if len(self.priorities) != cfg.n_alert_types:
            raise PolicyError("priority list length does not match the scenario")
        alpha = np.zeros(cfg.n_alert_types, dtype=np.int64)
        remaining = cfg.defense_budget
        for t in sorted(range(cfg.n_alert_types), key=lambda t: (self.priorities[t], t)):
            cost = cfg.inspect_costs[t]
            take = int(state.n[t]) if cost == 0 else min(
                int(state.n[t]), int(remaining // cost))
            alpha[t] = take
            remaining -= take * cost
        return alpha


class NoOp(PureStrategy):
    """Inspects nothing / attacks nothing."""

    def __init__(self, role):
        if role not in (DEFENDER, ATTACKER):
            raise PolicyError("role must be defender or attacker")
        self.role = role
        self.label = "noop-%s" % role

    def act(self, state, cfg, rng):
        if self.role == DEFENDER:
            return np.zeros(cfg.n_alert_types, dtype=np.int64)
        return np.zeros(cfg.n_attacks, dtype=np.int64)


# -- mixed strategies ---------------------------------------------------------------

class MixedStrategy:
    """A probability distribution over pure strategies of one player."""

    def __init__(self, strategies, probs):
        strategies = list(strategies)
        probs = np.asarray(probs, dtype=np.float64)
        if len(strategies) == 0:
            raise PolicyError("a mixed strategy needs at least one pure strategy")
        if probs.shape != (len(strategies),):
            raise PolicyError("one probability per strategy is required")
        if (probs < 0).any() or (probs > 1).any():
            raise PolicyError("probabilities must lie in [0, 1]")
        if abs(probs.sum() - 1.0) > 1e-9:
            raise PolicyError("probabilities must sum to 1")
        self.strategies = strategies
        self.probs = probs
        self._cum = np.cumsum(probs)

    def __len__(self):
        return len(self.strategies)

    def sample_pure(self, rng):
        """Categorical draw by weight; zero-weight entries are never drawn."""
        i = int(np.searchsorted(self._cum, rng.random(), side="right"))
        return self.strategies[min(i, len(self.strategies) - 1)]

    @classmethod
    def pure(cls, strategy):
        return cls([strategy], [1.0])
