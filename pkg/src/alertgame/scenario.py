"""Game configurations: alert/attack catalogs, trigger and false-alarm
distributions, budgets, and the always-inspect preprocessing step.

A scenario is immutable once built and is shared freely between the
environment, the policies, and the solver.
"""

import dataclasses
from dataclasses import dataclass, field

import numpy as np
import yaml

FORMAT_TAG = "ade-scenario-v1"


class ScenarioError(ValueError):
    """Raised when a scenario document is malformed or violates an invariant."""


@dataclass(frozen=True)
class DeterministicCount:
    """An attack raises exactly `count` alerts of a type."""
    count: int

    def sample(self, rng):
        return self.count

    def mean(self):
        return float(self.count)


@dataclass(frozen=True)
class BernoulliCount:
    """An attack raises a single alert of a type with probability `p`."""
    p: float

    def sample(self, rng):
        return int(rng.random() < self.p)

    def mean(self):
        return self.p


@dataclass(frozen=True)
class CountTable:
    """General count distribution: P(count = counts[i]) = probs[i]."""
    counts: tuple
    probs: tuple

    def sample(self, rng):
        u = rng.random()
        acc = 0.0
        for c, p in zip(self.counts, self.probs):
            acc += p
            if u < acc:
                return c
        return self.counts[-1]

    def mean(self):
        return float(sum(c * p for c, p in zip(self.counts, self.probs)))


@dataclass(frozen=True)
class AlertTypeSpec:
    """One alert type: identifier, display name, and investigation cost C_t."""
    id: int
    name: str
    cost: float


@dataclass(frozen=True)
class AttackSpec:
    """One attack action: identifier, name, execution cost E_a, and loss L_a."""
    id: int
    name: str
    cost: float
    loss: float


@dataclass(frozen=True)
class ScenarioConfig:
    """All constants of one game instance.

    :param alert_types: AlertTypeSpec tuple, ids dense 0..|T|-1.
    :param attacks: AttackSpec tuple, ids dense 0..|A|-1.
    :param trigger_dist: |A| x |T| nested tuple of count distributions P_{a,t}.
    :param false_alarm_means: per alert type, the Poisson mean of false alerts.
    :param defense_budget: B, total investigation cost per period.
    :param attack_budget: D, total (expected) execution cost per period.
    :param discount: temporal discount factor, strictly inside (0, 1).
    :param horizon: episode truncation length used for training/evaluation.
    :param obs_scale: per-type positive normalizer for network inputs;
        defaults to max(1, false alarm mean).
    :param benign_rates: optional per-type benign trigger rates consumed by
        pruning; defaults to the false alarm means.
    """
    name: str
    alert_types: tuple
    attacks: tuple
    trigger_dist: tuple
    false_alarm_means: tuple
    defense_budget: float
    attack_budget: float
    discount: float
    horizon: int
    obs_scale: tuple = None
    benign_rates: tuple = None
    # cached numpy views, derived in __post_init__
    _arrays: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.obs_scale is None:
            object.__setattr__(
                self, "obs_scale",
                tuple(max(1.0, float(lam)) for lam in self.false_alarm_means))
        self._validate()
        object.__setattr__(self, "_arrays", self._build_arrays())

    # -- invariant checks ---------------------------------------------------

    def _validate(self):
        nt, na = len(self.alert_types), len(self.attacks)
        if nt == 0 or na == 0:
            raise ScenarioError("alert_types and attacks must be nonempty")
        if [t.id for t in self.alert_types] != list(range(nt)):
            raise ScenarioError("alert_types: ids must be dense 0..|T|-1")
        if [a.id for a in self.attacks] != list(range(na)):
            raise ScenarioError("attacks: ids must be dense 0..|A|-1")
        for t in self.alert_types:
            if t.cost < 0:
                raise ScenarioError("alert_types[%d].cost must be >= 0" % t.id)
        for a in self.attacks:
            if a.cost < 0:
                raise ScenarioError("attacks[%d].cost must be >= 0" % a.id)
            if a.loss < 0:
                raise ScenarioError("attacks[%d].loss must be >= 0" % a.id)
        if len(self.trigger_dist) != na:
            raise ScenarioError("trigger_dist must have one row per attack")
        for a, row in enumerate(self.trigger_dist):
            if len(row) != nt:
                raise ScenarioError("trigger_dist[%d] must have |T| entries" % a)
            for t, dist in enumerate(row):
                if isinstance(dist, BernoulliCount):
                    if not 0.0 <= dist.p <= 1.0:
                        raise ScenarioError(
                            "trigger_dist[%d][%d]: probability outside [0,1]" % (a, t))
                elif isinstance(dist, DeterministicCount):
                    if dist.count < 0:
                        raise ScenarioError(
                            "trigger_dist[%d][%d]: negative count" % (a, t))
                elif isinstance(dist, CountTable):
                    if abs(sum(dist.probs) - 1.0) > 1e-9 or min(dist.probs) < 0:
                        raise ScenarioError(
                            "trigger_dist[%d][%d]: probabilities must be a distribution" % (a, t))
                    if min(dist.counts) < 0:
                        raise ScenarioError(
                            "trigger_dist[%d][%d]: negative count" % (a, t))
                else:
                    raise ScenarioError(
                        "trigger_dist[%d][%d]: unknown distribution %r" % (a, t, dist))
        if len(self.false_alarm_means) != nt:
            raise ScenarioError("false_alarm_means must have |T| entries")
        if any(lam < 0 for lam in self.false_alarm_means):
            raise ScenarioError("false_alarm_means must be >= 0")
        if self.defense_budget < 0:
            raise ScenarioError("defense_budget must be >= 0")
        if self.attack_budget < 0:
            raise ScenarioError("attack_budget must be >= 0")
        if not 0.0 < self.discount < 1.0:
            raise ScenarioError("discount must lie strictly inside (0, 1)")
        if self.horizon < 1:
            raise ScenarioError("horizon must be >= 1")
        if len(self.obs_scale) != nt or any(s <= 0 for s in self.obs_scale):
            raise ScenarioError("obs_scale must have |T| positive entries")
        if self.benign_rates is not None:
            if len(self.benign_rates) != nt or any(r < 0 for r in self.benign_rates):
                raise ScenarioError("benign_rates must have |T| nonnegative entries")

    def _build_arrays(self):
        nt, na = len(self.alert_types), len(self.attacks)
        det = np.zeros((na, nt), dtype=np.int64)
        bern = np.zeros((na, nt), dtype=np.float64)
        tables = {}
        for a, row in enumerate(self.trigger_dist):
            for t, dist in enumerate(row):
                if isinstance(dist, DeterministicCount):
                    det[a, t] = dist.count
                elif isinstance(dist, BernoulliCount):
                    bern[a, t] = dist.p
                else:
                    tables[(a, t)] = dist
        return {
            "inspect_costs": np.array([t.cost for t in self.alert_types]),
            "attack_costs": np.array([a.cost for a in self.attacks]),
            "losses": np.array([a.loss for a in self.attacks]),
            "lam": np.array(self.false_alarm_means, dtype=np.float64),
            "obs_scale": np.array(self.obs_scale, dtype=np.float64),
            "trigger_det": det,
            "trigger_bern": bern,
            "trigger_tables": tables,
            "trigger_means": det + bern + np.array(
                [[tables[(a, t)].mean() if (a, t) in tables else 0.0
                  for t in range(nt)] for a in range(na)]),
        }

    # -- convenience views used in hot paths ---------------------------------

    @property
    def n_alert_types(self):
        return len(self.alert_types)

    @property
    def n_attacks(self):
        return len(self.attacks)

    @property
    def inspect_costs(self):
        return self._arrays["inspect_costs"]

    @property
    def attack_costs(self):
        return self._arrays["attack_costs"]

    @property
    def losses(self):
        return self._arrays["losses"]

    @property
    def lam(self):
        return self._arrays["lam"]

    @property
    def obs_scale_arr(self):
        return self._arrays["obs_scale"]

    @property
    def trigger_det(self):
        return self._arrays["trigger_det"]

    @property
    def trigger_bern(self):
        return self._arrays["trigger_bern"]

    @property
    def trigger_tables(self):
        return self._arrays["trigger_tables"]

    @property
    def trigger_means(self):
        return self._arrays["trigger_means"]

    def sample_triggers(self, attack, rng):
        """Draw the vector of alert counts raised by one executed attack."""
        counts = self.trigger_det[attack] + (
            rng.random(self.n_alert_types) < self.trigger_bern[attack])
        tables = self.trigger_tables
        if tables:
            counts = counts.copy()
            for (a, t), dist in tables.items():
                if a == attack:
                    counts[t] = dist.sample(rng)
        return counts

    def replace(self, **changes):
        """A copy with some fields changed; invariants re-checked."""
        return dataclasses.replace(self, _arrays=None, **changes)


# -- document format ---------------------------------------------------------

def _dist_to_doc(dist):
    if isinstance(dist, DeterministicCount):
        return {"dist": "deterministic", "count": dist.count}
    if isinstance(dist, BernoulliCount):
        return {"dist": "bernoulli", "p": dist.p}
    return {"dist": "table", "counts": list(dist.counts), "probs": list(dist.probs)}


def _dist_from_doc(doc, where):
    kind = doc.get("dist")
    if kind == "deterministic":
        return DeterministicCount(int(doc["count"]))
    if kind == "bernoulli":
        return BernoulliCount(float(doc["p"]))
    if kind == "table":
        return CountTable(tuple(int(c) for c in doc["counts"]),
                          tuple(float(p) for p in doc["probs"]))
    raise ScenarioError("%s: unknown trigger distribution %r" % (where, kind))


def _fmt(value):
    # repr floats so that load(dump(cfg)) round-trips bit-exactly
    return repr(value) if isinstance(value, float) else str(value)


def dump_scenario(cfg):
    """Serialize a ScenarioConfig to the scenario document text."""
    lines = ["format: %s" % FORMAT_TAG,
             "name: %s" % cfg.name,
             "discount: %s" % _fmt(cfg.discount),
             "horizon: %d" % cfg.horizon,
             "defense_budget: %s" % _fmt(float(cfg.defense_budget)),
             "attack_budget: %s" % _fmt(float(cfg.attack_budget)),
             "alert_types:"]
    for t in cfg.alert_types:
        entry = "- {id: %d, name: %s, cost: %s, false_alarm_mean: %s" % (
            t.id, t.name, _fmt(float(t.cost)), _fmt(float(cfg.false_alarm_means[t.id])))
        if cfg.benign_rates is not None:
            entry += ", benign_rate: %s" % _fmt(float(cfg.benign_rates[t.id]))
        lines.append(entry + "}")
    lines.append("attacks:")
    for a in cfg.attacks:
        lines.append("- id: %d" % a.id)
        lines.append("  name: %s" % a.name)
        lines.append("  cost: %s" % _fmt(float(a.cost)))
        lines.append("  loss: %s" % _fmt(float(a.loss)))
        triggers = []
        for t in range(cfg.n_alert_types):
            dist = cfg.trigger_dist[a.id][t]
            if dist.mean() == 0.0 and isinstance(dist, (DeterministicCount, BernoulliCount)):
                continue
            doc = _dist_to_doc(dist)
            parts = ", ".join("%s: %s" % (k, _fmt(v)) for k, v in doc.items())
            triggers.append("  - {alert_type: %d, %s}" % (t, parts))
        if triggers:
            lines.append("  triggers:")
            lines.extend(triggers)
        else:
            lines.append("  triggers: []")
    lines.append("obs_scale: [%s]" % ", ".join(_fmt(float(s)) for s in cfg.obs_scale))
    return "\n".join(lines) + "\n"


def save_scenario(cfg, path):
    with open(path, "w") as fh:
        fh.write(dump_scenario(cfg))


def parse_scenario(text, name_hint="scenario"):
    """Build a validated ScenarioConfig from scenario document text."""
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as err:
        raise ScenarioError("parse failure: %s" % err)
    if not isinstance(doc, dict):
        raise ScenarioError("scenario document must be a mapping")
    if doc.get("format") != FORMAT_TAG:
        raise ScenarioError("format: expected %r, got %r" % (FORMAT_TAG, doc.get("format")))
    for key in ("alert_types", "attacks", "discount", "horizon",
                "defense_budget", "attack_budget"):
        if key not in doc:
            raise ScenarioError("missing required field %r" % key)

    alert_types, lam, benign = [], [], []
    has_benign = False
    for i, entry in enumerate(doc["alert_types"]):
        alert_types.append(AlertTypeSpec(
            id=int(entry["id"]), name=str(entry["name"]), cost=float(entry["cost"])))
        lam.append(float(entry["false_alarm_mean"]))
        if "benign_rate" in entry:
            has_benign = True
            benign.append(float(entry["benign_rate"]))
        else:
            benign.append(float(entry["false_alarm_mean"]))
    nt = len(alert_types)

    attacks, rows = [], []
    for entry in doc["attacks"]:
        attacks.append(AttackSpec(
            id=int(entry["id"]), name=str(entry["name"]),
            cost=float(entry["cost"]), loss=float(entry["loss"])))
        row = [DeterministicCount(0)] * nt
        for trig in entry.get("triggers") or []:
            t = int(trig["alert_type"])
            if not 0 <= t < nt:
                raise ScenarioError(
                    "attacks[%d]: trigger references unknown alert_type %d" % (entry["id"], t))
            row[t] = _dist_from_doc(trig, "attacks[%d]" % entry["id"])
        rows.append(tuple(row))

    return ScenarioConfig(
        name=str(doc.get("name", name_hint)),
        alert_types=tuple(alert_types),
        attacks=tuple(attacks),
        trigger_dist=tuple(rows),
        false_alarm_means=tuple(lam),
        defense_budget=float(doc["defense_budget"]),
        attack_budget=float(doc["attack_budget"]),
        discount=float(doc["discount"]),
        horizon=int(doc["horizon"]),
        obs_scale=tuple(float(s) for s in doc["obs_scale"]) if "obs_scale" in doc else None,
        benign_rates=tuple(benign) if has_benign else None,
    )


def load_scenario(path):
    """Load and validate a scenario document from disk."""
    with open(path) as fh:
        text = fh.read()
    return parse_scenario(text, name_hint=str(path))


# -- preprocessing ------------------------------------------------------------

def prune_always_inspect(raw, epsilon):
    """Remove alert types whose benign-trigger rate is at most epsilon.

    Alerts of the removed types are marked as always inspected, so any attack
    that is certain to raise one (a deterministic count >= 1 or a sure
    Bernoulli trigger) is always detected and is dropped from the game, as is
    any attack whose every trigger lands on removed types.

    :param raw: ScenarioConfig, possibly carrying extra zero-benign types.
    :param epsilon: benign-rate threshold, >= 0.
    :return: (reduced ScenarioConfig, reserved_budget) where reserved_budget
        is the expected per-period cost of inspecting the pruned types'
        benign alerts, to be subtracted from the defense budget by the caller.
    :raises ScenarioError: if the reserved budget exceeds the defense budget,
        or a surviving attack has a partial trigger on a pruned type.
    """
    if epsilon < 0:
        raise ScenarioError("epsilon must be >= 0")
    rates = raw.benign_rates if raw.benign_rates is not None else raw.false_alarm_means
    keep_t = [t for t in range(raw.n_alert_types) if rates[t] > epsilon]
    pruned_t = [t for t in range(raw.n_alert_types) if rates[t] <= epsilon]
    if not pruned_t:
        return raw, 0.0
    if not keep_t:
        raise ScenarioError("pruning removed every alert type")

    reserved = sum(raw.alert_types[t].cost * rates[t] for t in pruned_t)
    if reserved > raw.defense_budget:
        raise ScenarioError(
            "reserved budget %.6g for always-inspected types exceeds defense budget %.6g"
            % (reserved, raw.defense_budget))

    pruned_set = set(pruned_t)
    keep_a = []
    for a in range(raw.n_attacks):
        always_detected = False
        triggers_kept = False
        partial_pruned = None
        for t in range(raw.n_alert_types):
            dist = raw.trigger_dist[a][t]
            if dist.mean() <= 0:
                continue
            if t in pruned_set:
                sure = (isinstance(dist, DeterministicCount) and dist.count >= 1) or \
                       (isinstance(dist, BernoulliCount) and dist.p >= 1.0)
                if sure:
                    always_detected = True
                else:
                    partial_pruned = t
            else:
                triggers_kept = True
        if not triggers_kept or always_detected:
            continue  # removed: always detected, or never raises a surviving alert type
        if partial_pruned is not None:
            raise ScenarioError(
                "attacks[%d]: partial trigger on pruned type %d is not "
                "representable in the reduced game" % (a, partial_pruned))
        keep_a.append(a)

    if not keep_a:
        raise ScenarioError("pruning removed every attack")

    cfg = ScenarioConfig(
        name=raw.name,
        alert_types=tuple(
            AlertTypeSpec(i, raw.alert_types[t].name, raw.alert_types[t].cost)
            for i, t in enumerate(keep_t)),
        attacks=tuple(
            AttackSpec(i, raw.attacks[a].name, raw.attacks[a].cost, raw.attacks[a].loss)
            for i, a in enumerate(keep_a)),
        trigger_dist=tuple(
            tuple(raw.trigger_dist[a][t] for t in keep_t) for a in keep_a),
        false_alarm_means=tuple(raw.false_alarm_means[t] for t in keep_t),
        defense_budget=raw.defense_budget,
        attack_budget=raw.attack_budget,
        discount=raw.discount,
        horizon=raw.horizon,
        obs_scale=tuple(raw.obs_scale[t] for t in keep_t),
        benign_rates=tuple(rates[t] for t in keep_t),
    )
    return cfg, reserved


# -- built-in case studies -----------------------------------------------------

# Suricata rule priorities (1 = highest) for the seven IDS alert types below.
IDS_PRIORITIES = (2, 1, 2, 3, 3, 1, 3)

_IDS_TYPES = ("attempted-recon", "attempted-user", "bad-unknown", "misc-activity",
              "not-suspicious", "policy-violation", "protocol-command-decode")
_IDS_LAM = (7200.0, 44100.0, 1600.0, 7300.0, 17400.0, 4000.0, 10200.0)
_IDS_ATTACKS = (
    # name, cost E_a, loss L_a, triggered alert counts per kept type
    ("Brute Force",  120.0, 3.6, (1230, 0, 0, 0, 0, 0, 0)),
    ("Botnet",        60.0, 6.0, (0, 4, 2, 106, 0, 54, 0)),
    ("DoS",           74.0, 4.0, (0, 0, 0, 0, 0, 24, 0)),
    ("Heartbleed",    20.0, 3.6, (0, 0, 4, 0, 10, 0, 0)),
    ("Infiltration",  52.0, 1.4, (710, 2, 862, 12, 0, 80, 600)),
    ("PortScan",      80.0, 1.4, (138, 0, 320, 30, 0, 0, 0)),
    ("Web Attack",    62.0, 2.7, (0, 0, 6, 0, 0, 0, 0)),
)

_FRAUD_LAM = (10.0, 47.0, 39.0)
_FRAUD_ATTACKS = (
    # name, cost E_a, loss L_a, per-type single-alert probabilities
    ("fraud-1", 1.0, 9.4,  (0.9, 0.61, 0.0)),
    ("fraud-4", 3.0, 12.1, (0.09, 0.87, 0.12)),
    ("fraud-6", 2.0, 16.0, (0.0, 0.41, 0.85)),
)


def builtin_fraud():
    """The fraud-detection case study: 3 alert types, 3 attacks, B=20, D=2."""
    return ScenarioConfig(
        name="fraud",
        alert_types=tuple(AlertTypeSpec(i, "fraud-alert-%d" % (1, 4, 6)[i], 1.0)
                          for i in range(3)),
        attacks=tuple(AttackSpec(i, name, cost, loss)
                      for i, (name, cost, loss, _) in enumerate(_FRAUD_ATTACKS)),
        trigger_dist=tuple(
            tuple(BernoulliCount(p) if p > 0 else DeterministicCount(0) for p in probs)
            for (_, _, _, probs) in _FRAUD_ATTACKS),
        false_alarm_means=_FRAUD_LAM,
        defense_budget=20.0,
        attack_budget=2.0,
        discount=0.95,
        horizon=400,
        benign_rates=_FRAUD_LAM,
    )


def builtin_ids():
    """The intrusion-detection case study: 7 alert types, 7 attacks, B=1000, D=120."""
    return ScenarioConfig(
        name="ids",
        alert_types=tuple(AlertTypeSpec(i, name, 1.0) for i, name in enumerate(_IDS_TYPES)),
        attacks=tuple(AttackSpec(i, name, cost, loss)
                      for i, (name, cost, loss, _) in enumerate(_IDS_ATTACKS)),
        trigger_dist=tuple(
            tuple(DeterministicCount(int(c)) for c in counts)
            for (_, _, _, counts) in _IDS_ATTACKS),
        false_alarm_means=_IDS_LAM,
        defense_budget=1000.0,
        attack_budget=120.0,
        discount=0.95,
        horizon=400,
        benign_rates=_IDS_LAM,
    )


def builtin_fraud_raw():
    """The fraud case study before pruning: 6 alert types, 6 attacks.

    Types 2, 3, and 5 are never raised by benign transactions and the three
    extra attacks trigger only those types, so pruning at epsilon=0 reproduces
    builtin_fraud() exactly.
    """
    names = ("fraud-alert-1", "fraud-alert-2", "fraud-alert-3",
             "fraud-alert-4", "fraud-alert-5", "fraud-alert-6")
    lam = (10.0, 0.0, 0.0, 47.0, 0.0, 39.0)
    kept_cols = (0, 3, 5)  # columns that carry the post-prune types 1, 4, 6
    specs = {name: (cost, loss, dict(zip(kept_cols, probs)))
             for name, cost, loss, probs in _FRAUD_ATTACKS}
    specs["fraud-2"] = (2.0, 7.0, {1: 0.8})
    specs["fraud-3"] = (1.0, 5.5, {2: 0.7, 4: 0.3})
    specs["fraud-5"] = (2.0, 8.2, {4: 0.9})
    order = ("fraud-1", "fraud-2", "fraud-3", "fraud-4", "fraud-5", "fraud-6")
    attacks, rows = [], []
    for i, name in enumerate(order):
        cost, loss, trig = specs[name]
        attacks.append(AttackSpec(i, name, cost, loss))
        rows.append(tuple(
            BernoulliCount(trig[t]) if trig.get(t, 0.0) > 0 else DeterministicCount(0)
            for t in range(6)))
    return ScenarioConfig(
        name="fraud",
        alert_types=tuple(AlertTypeSpec(i, n, 1.0) for i, n in enumerate(names)),
        attacks=tuple(attacks),
        trigger_dist=tuple(rows),
        false_alarm_means=lam,
        defense_budget=20.0,
        attack_budget=2.0,
        discount=0.95,
        horizon=400,
        obs_scale=tuple(max(1.0, l) for l in lam),
        benign_rates=lam,
    )


def builtin_ids_raw():
    """The IDS case study before pruning: 10 alert types, 8 attacks.

    The three extra Suricata types are never raised by benign traffic, and
    DDoS raises no alerts at all; pruning at epsilon=0 reproduces builtin_ids().
    """
    # The three extra types are raised only by malicious traffic outside the
    # eight representative actions, so no modeled attack triggers them.
    names = _IDS_TYPES + ("trojan-activity", "unsuccessful-user", "web-application-attack")
    lam = _IDS_LAM + (0.0, 0.0, 0.0)
    attacks, rows = [], []
    for i, (name, cost, loss, counts) in enumerate(_IDS_ATTACKS):
        attacks.append(AttackSpec(i, name, cost, loss))
        rows.append(tuple(DeterministicCount(int(c)) for c in counts)
                    + (DeterministicCount(0),) * 3)
    attacks.append(AttackSpec(7, "DDoS", 66.0, 4.0))
    rows.append(tuple(DeterministicCount(0) for _ in range(10)))
    return ScenarioConfig(
        name="ids",
        alert_types=tuple(AlertTypeSpec(i, n, 1.0) for i, n in enumerate(names)),
        attacks=tuple(attacks),
        trigger_dist=tuple(rows),
        false_alarm_means=lam,
        defense_budget=1000.0,
        attack_budget=120.0,
        discount=0.95,
        horizon=400,
        obs_scale=tuple(max(1.0, l) for l in lam),
        benign_rates=lam,
    )


def toy_scenario():
    """A two-type, two-attack game small enough to enumerate exactly.

    No false alarms, deterministic triggers that share an alert type, and
    budgets chosen so every useful inspection split is reachable.
    """
    return ScenarioConfig(
        name="toy",
        alert_types=(AlertTypeSpec(0, "toy-alert-0", 1.0),
                     AlertTypeSpec(1, "toy-alert-1", 1.0)),
        attacks=(AttackSpec(0, "toy-attack-0", 1.0, 4.0),
                 AttackSpec(1, "toy-attack-1", 1.0, 2.0)),
        trigger_dist=(
            (DeterministicCount(2), DeterministicCount(0)),
            (DeterministicCount(1), DeterministicCount(1)),
        ),
        false_alarm_means=(0.0, 0.0),
        defense_budget=2.5,
        attack_budget=2.0,
        discount=0.95,
        horizon=400,
    )
