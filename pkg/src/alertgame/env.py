"""The attack detection environment: typed alert counts, hidden attack state,
uniform-subset inspection, and discounted-return rollouts.

State is a plain value; `step` and `rollout` share nothing, so any number of
rollouts may run concurrently as long as each owns its own Generator.
"""

from dataclasses import dataclass

import numpy as np


class EnvError(ValueError):
    """Raised when a state or action violates a model invariant."""


@dataclass
class AdeState:
    """Environment state at the start of a time period.

    :param n: per alert type, count of uninvestigated alerts.
    :param m: per attack, 0/1 indicator of execution in the previous period.
    :param s: per (attack, alert type), alerts raised by that attack.
    :param k: time index.
    """
    n: np.ndarray
    m: np.ndarray
    s: np.ndarray
    k: int

    def validate(self):
        if self.n.min(initial=0) < 0 or self.s.min(initial=0) < 0:
            raise EnvError("alert counts must be nonnegative")
        if not np.isin(self.m, (0, 1)).all():
            raise EnvError("m must be a 0/1 indicator vector")
        if ((self.m == 0) & (self.s.sum(axis=1) > 0)).any():
            raise EnvError("s must be zero for attacks that were not executed")
        if (self.s.sum(axis=0) > self.n).any():
            raise EnvError("attack alerts cannot exceed the total alert count")
        if self.k < 0:
            raise EnvError("time index must be nonnegative")


@dataclass
class InspectOutcome:
    """Result of one inspection round."""
    survived: np.ndarray   # executed and not detected
    detected: np.ndarray   # executed and detected
    hits: np.ndarray       # inspected alerts per (attack, type)


@dataclass
class StepOutcome:
    """Result of one full period: inspection, attack generation, new alerts."""
    next_state: AdeState
    reward: float          # defender sign: minus the loss of surviving attacks
    detected: np.ndarray
    survived: np.ndarray


def init_state(cfg):
    """All-zero initial state for a scenario."""
    nt, na = cfg.n_alert_types, cfg.n_attacks
    return AdeState(n=np.zeros(nt, dtype=np.int64),
                    m=np.zeros(na, dtype=np.int64),
                    s=np.zeros((na, nt), dtype=np.int64),
                    k=0)


def survival_prob(n, s_a, alpha):
    """Probability that an attack's alerts all escape a uniform inspection.

    Computes prod_t C(n_t - s_t, alpha_t) / C(n_t, alpha_t) with the
    conventions C(x, 0) = 1 and C(x, y) = 0 for y > x >= 0, via the
    telescoping product prod_j (n - s - j) / (n - j), which is exact to a few
    ulps and cannot overflow.

    :param n: total alerts per type, shape (T,) or batched (B, T).
    :param s_a: the attack's alerts per type, same shape.
    :param alpha: inspected count per type, same shape.
    :return: scalar for a single query, shape (B,) for a batch.
    """
    n = np.asarray(n, dtype=np.int64)
    s = np.asarray(s_a, dtype=np.int64)
    a = np.asarray(alpha, dtype=np.int64)
    single = n.ndim == 1
    n, s, a = np.atleast_2d(n), np.atleast_2d(s), np.atleast_2d(a)
    if (s < 0).any() or (a < 0).any() or (s > n).any():
        raise EnvError("survival_prob requires 0 <= s_a <= n")
    if (a > n).any():
        raise EnvError("survival_prob requires alpha <= n")
    prob = np.ones(n.shape[0])
    for j in range(int(a.max(initial=0))):
        active = a > j
        num = np.maximum((n - s - j).astype(np.float64), 0.0)
        den = np.where(active, (n - j).astype(np.float64), 1.0)
        prob *= np.where(active, num / den, 1.0).prod(axis=1)
    return float(prob[0]) if single else prob


def _draw_subset(n, k, rng):
    """k distinct indices uniform over range(n), partial Fisher-Yates."""
    if k == 0:
        return np.empty(0, dtype=np.int64)
    if k == n:
        return np.arange(n, dtype=np.int64)
    offsets = rng.integers(0, n - np.arange(k))
    out = np.empty(k, dtype=np.int64)
    state = {}
    for i in range(k):
        j = i + offsets[i]
        vj = state.get(j, j)
        state[j] = state.get(i, i)
        out[i] = vj
    return out


def inspect(state, alpha, rng):
    """Draw the inspected alert subsets and resolve detection.

    Alerts of a type are exchangeable; within type t the first s[0,t] indices
    belong to attack 0, the next s[1,t] to attack 1, and so on, with benign
    alerts last. An executed attack survives iff no drawn index lands in any
    of its blocks.

    :param alpha: number of alerts to inspect per type, alpha_t <= n_t.
    :return: InspectOutcome with per-attack survived/detected flags and the
        per-(attack, type) counts of inspected attack alerts.
    """
    alpha = np.asarray(alpha, dtype=np.int64)
    if (alpha < 0).any() or (alpha > state.n).any():
        raise EnvError("inspection counts must satisfy 0 <= alpha <= n")
    na, nt = state.s.shape
    hits = np.zeros((na, nt), dtype=np.int64)
    s_totals = state.s.sum(axis=0)
    for t in range(nt):
        k = int(alpha[t])
        # a draw among purely benign alerts cannot touch any attack block
        if k == 0 or s_totals[t] == 0:
            continue
        drawn = _draw_subset(int(state.n[t]), k, rng)
        edges = np.cumsum(state.s[:, t])
        block = np.searchsorted(edges, drawn, side="right")
        inside = block < na
        if inside.any():
            hits[:, t] += np.bincount(block[inside], minlength=na)
    executed = state.m == 1
    detected = executed & (hits.sum(axis=1) > 0)
    survived = executed & ~detected
    return InspectOutcome(survived=survived, detected=detected, hits=hits)


def check_def_action(alpha, state, cfg):
    """Check the budget constraint and alert availability of an inspection."""
    alpha = np.asarray(alpha, dtype=np.int64)
    if alpha.shape != (cfg.n_alert_types,):
        raise EnvError("defender action has wrong shape")
    if (alpha < 0).any() or (alpha > state.n).any():
        raise EnvError("cannot inspect more alerts than exist")
    if float(cfg.inspect_costs @ alpha) > cfg.defense_budget:
        raise EnvError("inspection cost exceeds the defense budget")
    return alpha


def check_att_action(att, cfg):
    alpha = np.asarray(att, dtype=np.int64)
    if alpha.shape != (cfg.n_attacks,):
        raise EnvError("attacker action has wrong shape")
    if not np.isin(alpha, (0, 1)).all():
        raise EnvError("attacker action must be a 0/1 indicator vector")
    return alpha


def step(state, alpha, att, cfg, rng, carryover=False, validate=True):
    """Advance one period: inspect, realize losses, attack, trigger alerts.

    The inspection resolves attacks executed in the previous period; the new
    attack indicators become next period's m, and the new alert counts are
    fresh false alarms plus attack-triggered alerts (plus, with `carryover`,
    the uninspected leftovers that do not belong to detected attacks).
    """
    if validate:
        state.validate()
        alpha = check_def_action(alpha, state, cfg)
        att = check_att_action(att, cfg)
    else:
        alpha = np.asarray(alpha, dtype=np.int64)
        att = np.asarray(att, dtype=np.int64)

    outcome = inspect(state, alpha, rng)
    reward = -float(cfg.losses @ outcome.survived)

    m_next = att.copy()
    s_next = np.zeros_like(state.s)
    for a in np.flatnonzero(m_next):
        s_next[a] = cfg.sample_triggers(int(a), rng)
    false_alarms = rng.poisson(cfg.lam)
    n_next = false_alarms + s_next.sum(axis=0)
    if carryover:
        leftover = state.n - alpha - (state.s[outcome.detected].sum(axis=0)
                                      - outcome.hits[outcome.detected].sum(axis=0))
        n_next = n_next + np.maximum(leftover, 0)

    next_state = AdeState(n=n_next, m=m_next, s=s_next, k=state.k + 1)
    return StepOutcome(next_state=next_state, reward=reward,
                       detected=outcome.detected, survived=outcome.survived)


def rollout(def_policy, att_policy, cfg, horizon, rng, carryover=False):
    """Discounted defender return of one simulated episode.

    Both players act on the state at the start of each period (the defender
    sees only the alert counts, the attacker the full state); the attacker's
    utility is the negation.

    :param horizon: number of periods to simulate, >= 1.
    :return: sum over k of discount^k * reward_k.
    """
    state = init_state(cfg)
    total = 0.0
    weight = 1.0
    tau = cfg.discount
    for _ in range(horizon):
        alpha = def_policy.act(state, cfg, rng)
        att = att_policy.act(state, cfg, rng)
        out = step(state, alpha, att, cfg, rng, carryover=carryover, validate=False)
        total += weight * out.reward
        weight *= tau
        state = out.next_state
    return total
