"""Actor-critic best-response learner: trains one player's policy and value
networks against a fixed opponent mixed strategy embedded in the environment.

The critic regresses on bootstrapped targets built from the *current*
networks (no target copies by default), and the actor ascends the sampled
policy gradient obtained by chaining the critic's action gradient through
the actor.
"""

from dataclasses import dataclass, field

import numpy as np

from . import env, nn, policy


@dataclass
class OracleHyperparams:
    """Training configuration for one best-response computation.

    Defaults mirror the full-scale experimental setup (500 episodes of 400
    steps, Adam at 1e-3 / 2e-3, discount 0.95, 40k replay slots); desk-scale
    runs override episodes/steps.
    """
    episodes: int = 500
    steps: int = 400
    policy_lr: float = 1e-3
    value_lr: float = 2e-3
    discount: float = 0.95
    buffer_capacity: int = 40_000
    minibatch: int = 64
    eps_start: float = 1.0
    eps_end: float = 0.05
    seed: int = 0
    policy_hidden: int = 16
    value_hidden: int = 32
    literal_relu_output: bool = False
    target_rate: float = None  # optional soft-target factor; None = literal algorithm

    def __post_init__(self):
        if self.episodes < 1 or self.steps < 1:
            raise ValueError("episodes and steps must be >= 1")
        if self.policy_lr <= 0 or self.value_lr <= 0:
            raise ValueError("learning rates must be positive")
        if not 0.0 < self.discount < 1.0:
            raise ValueError("discount must lie strictly inside (0, 1)")
        if not (0.0 <= self.eps_end <= self.eps_start <= 1.0):
            raise ValueError("exploration schedule must satisfy 0 <= end <= start <= 1")
        if self.buffer_capacity < 1 or self.minibatch < 1:
            raise ValueError("buffer capacity and minibatch must be >= 1")

    @classmethod
    def for_scenario(cls, cfg, **overrides):
        """Hidden widths follow the case-study sizes: 16/32 for small games
        (|T| <= 3), 32/64 for larger ones."""
        hidden = (16, 32) if cfg.n_alert_types <= 3 else (32, 64)
        params = dict(policy_hidden=hidden[0], value_hidden=hidden[1],
                      discount=cfg.discount, steps=cfg.horizon)
        params.update(overrides)
        return cls(**params)


@dataclass
class EpisodeMetrics:
    episode: int
    mean_reward: float
    mean_critic_loss: float
    epsilon: float


def td_target(rewards, next_obs, actor, critic, discount):
    """Bootstrapped regression targets y = r + tau * Q(o', pi(o')) using the
    current networks."""
    next_actions, _ = nn.forward(actor, next_obs)
    q_next, _ = nn.forward(critic, np.hstack([next_obs, next_actions]))
    return np.asarray(rewards, dtype=np.float64) + discount * q_next[:, 0]


def critic_update(obs, actions, targets, critic, opt):
    """One Adam step on the mean squared TD error; returns the pre-update loss."""
    x = np.hstack([obs, actions])
    q, cache = nn.forward(critic, x)
    err = q[:, 0] - targets
    loss = float(np.mean(err ** 2))
    dq = (2.0 / len(err)) * err.reshape(-1, 1)
    grads, _ = nn.backward(critic, cache, dq)
    nn.adam_step(critic, grads, opt)
    return loss


def actor_update(obs, actor, critic, opt):
    """Ascend mean_i Q(o_i, pi(o_i)) by chaining the critic's action gradient
    through the actor; returns the norm of the ascent direction."""
    n = obs.shape[0]
    actions, actor_cache = nn.forward(actor, obs)
    _, critic_cache = nn.forward(critic, np.hstack([obs, actions]))
    dq = np.full((n, 1), 1.0 / n)
    _, dx = nn.backward(critic, critic_cache, dq)
    grad_action = dx[:, obs.shape[1]:]
    grads, _ = nn.backward(actor, actor_cache, grad_action)
    norm = float(np.sqrt(sum(float((dw ** 2).sum() + (db ** 2).sum())
                             for dw, db in grads)))
    nn.adam_step(actor, [(-dw, -db) for dw, db in grads], opt)
    return norm


def _network_dims(player, cfg):
    if player == +1:
        return policy.defender_obs_dim(cfg), cfg.n_alert_types
    return policy.attacker_obs_dim(cfg), cfg.n_attacks


def _soft_update(target, source, rate):
    for wt, ws in zip(target.weights, source.weights):
        wt += rate * (ws - wt)
    for bt, bs in zip(target.biases, source.biases):
        bt += rate * (bs - bt)


def best_response(player, opponent, cfg, hp, metrics=None, carryover=False):
    """Train an approximate best response for one player.

    :param player: +1 trains the defender, -1 the attacker.
    :param opponent: MixedStrategy of the other player, resampled per episode.
    :param cfg: ScenarioConfig.
    :param hp: OracleHyperparams; the run is a pure function of (hp.seed,
        opponent), bit-reproducible.
    :param metrics: optional list that receives an EpisodeMetrics per episode.
    :return: the trained policy network wrapped as a NeuralStrategy.
    """
    rng = np.random.default_rng(np.random.SeedSequence(hp.seed))
    role = policy.DEFENDER if player == +1 else policy.ATTACKER
    obs_fn = policy.obs_defender if player == +1 else policy.obs_attacker
    obs_dim, act_dim = _network_dims(player, cfg)

    actor = nn.init_policy_net(obs_dim, hp.policy_hidden, act_dim, rng)
    critic = nn.init_value_net(obs_dim + act_dim, hp.value_hidden, rng,
                               literal_relu_output=hp.literal_relu_output)
    opt_actor = nn.AdamState.for_params(actor, hp.policy_lr)
    opt_critic = nn.AdamState.for_params(critic, hp.value_lr)
    target_actor = actor.copy() if hp.target_rate else actor
    target_critic = critic.copy() if hp.target_rate else critic
    buffer = nn.ReplayBuffer(hp.buffer_capacity, obs_dim, act_dim)

    total_steps = hp.episodes * hp.steps
    anneal_steps = max(1, total_steps // 2)
    step_count = 0

    for episode in range(hp.episodes):
        state = env.init_state(cfg)
        opp = opponent.sample_pure(rng)
        reward_sum = 0.0
        loss_sum, loss_count = 0.0, 0
        epsilon = hp.eps_start
        for _ in range(hp.steps):
            frac = min(1.0, step_count / anneal_steps)
            epsilon = hp.eps_start + (hp.eps_end - hp.eps_start) * frac
            obs = obs_fn(state, cfg)
            if rng.random() < epsilon:
                raw = rng.random(act_dim)
            else:
                raw, _ = nn.forward(actor, obs)
            if player == +1:
                def_action = policy.decode_defender(raw, state.n, cfg)
                att_action = opp.act(state, cfg, rng)
            else:
                def_action = opp.act(state, cfg, rng)
                att_action = policy.sample_attack(policy.project_attacker(raw, cfg), rng)
            out = env.step(state, def_action, att_action, cfg, rng,
                           carryover=carryover, validate=False)
            reward = out.reward if player == +1 else -out.reward
            next_obs = obs_fn(out.next_state, cfg)
            buffer.push(obs, raw, reward, next_obs)
            reward_sum += reward
            if len(buffer) >= hp.minibatch:
                b_obs, b_act, b_rew, b_next = buffer.sample(hp.minibatch, rng)
                y = td_target(b_rew, b_next, target_actor, target_critic, hp.discount)
                loss_sum += critic_update(b_obs, b_act, y, critic, opt_critic)
                actor_update(b_obs, actor, critic, opt_actor)
                loss_count += 1
                if hp.target_rate:
                    _soft_update(target_actor, actor, hp.target_rate)
                    _soft_update(target_critic, critic, hp.target_rate)
            state = out.next_state
            step_count += 1
        if metrics is not None:
            metrics.append(EpisodeMetrics(
                episode=episode,
                mean_reward=reward_sum / hp.steps,
                mean_critic_loss=(loss_sum / loss_count) if loss_count else float("nan"),
                epsilon=epsilon))

    return policy.NeuralStrategy(actor, role)
