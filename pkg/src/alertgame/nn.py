"""Minimal dense-network toolkit: forward/backward for fixed MLP stacks,
bias-corrected Adam, Xavier/He initialization, and a ring replay buffer.

Everything is float64; gradients are exact, so the test suite can hold them
to finite-difference tolerances.
"""

import json
from dataclasses import dataclass, field

import numpy as np

ACTIVATIONS = ("tanh", "relu", "sigmoid", "identity")


class NnError(ValueError):
    pass


@dataclass(frozen=True)
class LayerSpec:
    fan_in: int
    fan_out: int
    activation: str

    def __post_init__(self):
        if self.fan_in < 1 or self.fan_out < 1:
            raise NnError("layer dimensions must be >= 1")
        if self.activation not in ACTIVATIONS:
            raise NnError("unknown activation %r" % self.activation)


@dataclass
class MlpParams:
    """Weights and biases of a dense stack; weights[i] has shape (fan_in, fan_out)."""
    layers: list
    weights: list
    biases: list

    def __post_init__(self):
        for spec, w, b in zip(self.layers, self.weights, self.biases):
            if w.shape != (spec.fan_in, spec.fan_out) or b.shape != (spec.fan_out,):
                raise NnError("parameter shapes do not match the layer spec")
        for a, b in zip(self.layers, self.layers[1:]):
            if a.fan_out != b.fan_in:
                raise NnError("layer dimensions do not chain")

    @property
    def in_dim(self):
        return self.layers[0].fan_in

    @property
    def out_dim(self):
        return self.layers[-1].fan_out

    def copy(self):
        return MlpParams(list(self.layers),
                         [w.copy() for w in self.weights],
                         [b.copy() for b in self.biases])


def _xavier_uniform(fan_in, fan_out, rng):
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=(fan_in, fan_out))


def _he_normal(fan_in, fan_out, rng):
    return rng.normal(0.0, np.sqrt(2.0 / fan_in), size=(fan_in, fan_out))


def init_policy_net(in_dim, hidden, out_dim, rng):
    """Tanh hidden layer, sigmoid output, Xavier-uniform weights, zero biases."""
    layers = [LayerSpec(in_dim, hidden, "tanh"), LayerSpec(hidden, out_dim, "sigmoid")]
    weights = [_xavier_uniform(s.fan_in, s.fan_out, rng) for s in layers]
    biases = [np.zeros(s.fan_out) for s in layers]
    return MlpParams(layers, weights, biases)


def init_value_net(in_dim, hidden, rng, literal_relu_output=False):
    """Relu hidden layer, He-normal weights, scalar output.

    The output activation is identity by default so the network can represent
    the non-positive returns of the defender; `literal_relu_output` restores
    a relu output.
    """
    out_act = "relu" if literal_relu_output else "identity"
    layers = [LayerSpec(in_dim, hidden, "relu"), LayerSpec(hidden, 1, out_act)]
    weights = [_he_normal(s.fan_in, s.fan_out, rng) for s in layers]
    biases = [np.zeros(s.fan_out) for s in layers]
    return MlpParams(layers, weights, biases)


def _apply(act, z):
    if act == "tanh":
        return np.tanh(z)
    if act == "relu":
        return np.maximum(z, 0.0)
    if act == "sigmoid":
        return 1.0 / (1.0 + np.exp(-z))
    return z


def _apply_grad(act, z, a, da):
    if act == "tanh":
        return (1.0 - a * a) * da
    if act == "relu":
        return np.where(z > 0.0, da, 0.0)
    if act == "sigmoid":
        return a * (1.0 - a) * da
    return da


def forward(params, x):
    """Run the stack; returns (output, cache for backward).

    Accepts a single sample of shape (in_dim,) or a batch (N, in_dim); the
    output mirrors the input's arrangement.
    """
    x = np.asarray(x, dtype=np.float64)
    single = x.ndim == 1
    a = x.reshape(1, -1) if single else x
    if a.shape[1] != params.in_dim:
        raise NnError("input has dimension %d, expected %d" % (a.shape[1], params.in_dim))
    steps = []
    for spec, w, b in zip(params.layers, params.weights, params.biases):
        z = a @ w + b
        a_next = _apply(spec.activation, z)
        steps.append((a, z, a_next))
        a = a_next
    return (a[0] if single else a), (steps, single)


def backward(params, cache, dy):
    """Exact gradients of sum(output * dy) w.r.t. parameters and input.

    :param cache: second element returned by `forward`.
    :param dy: upstream gradient, same shape as the forward output.
    :return: (grads, grad_input) where grads is a list of (dW, db) per layer.
    """
    steps, single = cache
    da = np.asarray(dy, dtype=np.float64)
    if single:
        da = da.reshape(1, -1)
    grads = [None] * len(params.layers)
    for i in range(len(params.layers) - 1, -1, -1):
        a_in, z, a_out = steps[i]
        if da.shape != a_out.shape:
            raise NnError("upstream gradient shape mismatch at layer %d" % i)
        dz = _apply_grad(params.layers[i].activation, z, a_out, da)
        grads[i] = (a_in.T @ dz, dz.sum(axis=0))
        da = dz @ params.weights[i].T
    return grads, (da[0] if single else da)


@dataclass
class AdamState:
    """First/second-moment accumulators for one MlpParams, plus the step count."""
    lr: float
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    t: int = 0
    m: list = field(default_factory=list)
    v: list = field(default_factory=list)

    @classmethod
    def for_params(cls, params, lr):
        state = cls(lr=lr)
        state.m = [(np.zeros_like(w), np.zeros_like(b))
                   for w, b in zip(params.weights, params.biases)]
        state.v = [(np.zeros_like(w), np.zeros_like(b))
                   for w, b in zip(params.weights, params.biases)]
        return state


def adam_step(params, grads, state):
    """One bias-corrected Adam descent step, in place."""
    state.t += 1
    b1, b2 = state.beta1, state.beta2
    c1 = 1.0 - b1 ** state.t
    c2 = 1.0 - b2 ** state.t
    for i, (dw, db) in enumerate(grads):
        for tensor, g, m, v in ((params.weights[i], dw, state.m[i][0], state.v[i][0]),
                                (params.biases[i], db, state.m[i][1], state.v[i][1])):
            m *= b1
            m += (1.0 - b1) * g
            v *= b2
            v += (1.0 - b2) * np.square(g)
            tensor -= state.lr * (m / c1) / (np.sqrt(v / c2) + state.eps)


# -- checkpoints ---------------------------------------------------------------

CHECKPOINT_VERSION = 1


def save_params(params, path):
    """Write a network checkpoint; round-trips bit-exactly."""
    header = {"version": CHECKPOINT_VERSION,
              "layers": [[s.fan_in, s.fan_out, s.activation] for s in params.layers]}
    arrays = {"header": np.frombuffer(json.dumps(header).encode(), dtype=np.uint8)}
    for i, (w, b) in enumerate(zip(params.weights, params.biases)):
        arrays["w%d" % i] = w
        arrays["b%d" % i] = b
    np.savez(path, **arrays)


def load_params(path):
    with np.load(path) as data:
        header = json.loads(bytes(data["header"]).decode())
        if header.get("version") != CHECKPOINT_VERSION:
            raise NnError("unsupported checkpoint version %r" % header.get("version"))
        layers = [LayerSpec(fi, fo, act) for fi, fo, act in header["layers"]]
        weights = [data["w%d" % i].astype(np.float64) for i in range(len(layers))]
        biases = [data["b%d" % i].astype(np.float64) for i in range(len(layers))]
    return MlpParams(layers, weights, biases)


# -- replay memory ---------------------------------------------------------------

class ReplayBuffer:
    """Fixed-capacity FIFO ring of (obs, action, reward, next_obs) transitions."""

    def __init__(self, capacity, obs_dim, act_dim):
        if capacity < 1:
            raise NnError("capacity must be >= 1")
        self.capacity = capacity
        self.obs = np.empty((capacity, obs_dim))
        self.act = np.empty((capacity, act_dim))
        self.rew = np.empty(capacity)
        self.next_obs = np.empty((capacity, obs_dim))
        self.size = 0
        self._head = 0

    def __len__(self):
        return self.size

    def push(self, obs, action, reward, next_obs):
        i = self._head
        self.obs[i] = obs
        self.act[i] = action
        self.rew[i] = reward
        self.next_obs[i] = next_obs
        self._head = (i + 1) % self.capacity
        self.size = min(self.size + 1, self.capacity)

    def sample(self, n, rng):
        """Uniform draw with replacement of n stored transitions."""
        if self.size == 0:
            raise NnError("cannot sample from an empty replay buffer")
        if n < 1:
            raise NnError("sample size must be >= 1")
        idx = rng.integers(0, self.size, size=n)
        return (self.obs[idx], self.act[idx], self.rew[idx], self.next_obs[idx])
