import os

import numpy as np
import pytest

from alertgame import scenario
from conftest import SCENARIO_DIR


class TestBuiltins:
    def test_fraud_constants(self, fraud_cfg):
        assert fraud_cfg.n_alert_types == 3 and fraud_cfg.n_attacks == 3
        assert list(fraud_cfg.inspect_costs) == [1.0, 1.0, 1.0]
        assert list(fraud_cfg.attack_costs) == [1.0, 3.0, 2.0]
        assert list(fraud_cfg.losses) == [9.4, 12.1, 16.0]
        assert list(fraud_cfg.lam) == [10.0, 47.0, 39.0]
        assert fraud_cfg.defense_budget == 20.0 and fraud_cfg.attack_budget == 2.0
        assert fraud_cfg.discount == 0.95 and fraud_cfg.horizon == 400
        expect_probs = [[0.9, 0.61, 0.0], [0.09, 0.87, 0.12], [0.0, 0.41, 0.85]]
        assert np.allclose(fraud_cfg.trigger_bern, expect_probs)
        assert fraud_cfg.trigger_det.sum() == 0

    def test_ids_constants(self, ids_cfg):
        assert ids_cfg.n_alert_types == 7 and ids_cfg.n_attacks == 7
        assert list(ids_cfg.lam) == [7200, 44100, 1600, 7300, 17400, 4000, 10200]
        assert list(ids_cfg.attack_costs) == [120, 60, 74, 20, 52, 80, 62]
        assert list(ids_cfg.losses) == [3.6, 6.0, 4.0, 3.6, 1.4, 1.4, 2.7]
        # Brute Force floods attempted-recon with 1230 alerts, nothing else
        assert list(ids_cfg.trigger_det[0]) == [1230, 0, 0, 0, 0, 0, 0]
        assert list(ids_cfg.trigger_det[4]) == [710, 2, 862, 12, 0, 80, 600]
        assert ids_cfg.trigger_bern.sum() == 0
        assert ids_cfg.defense_budget == 1000.0 and ids_cfg.attack_budget == 120.0

    def test_obs_scale_default(self, fraud_cfg, toy_cfg):
        assert list(fraud_cfg.obs_scale) == [10.0, 47.0, 39.0]
        assert list(toy_cfg.obs_scale) == [1.0, 1.0]  # lambda 0 floors at 1

    def test_builtins_byte_match_checked_in_files(self):
        pairs = [(scenario.builtin_fraud, "fraud.scn"),
                 (scenario.builtin_ids, "ids.scn"),
                 (scenario.builtin_fraud_raw, "fraud_raw.scn"),
                 (scenario.builtin_ids_raw, "ids_raw.scn"),
                 (scenario.toy_scenario, "toy.scn")]
        for builder, fname in pairs:
            with open(os.path.join(SCENARIO_DIR, fname)) as fh:
                assert fh.read() == scenario.dump_scenario(builder()), fname


class TestDocumentFormat:
    def test_load_builtin_files(self):
        cfg = scenario.load_scenario(os.path.join(SCENARIO_DIR, "fraud.scn"))
        assert cfg == scenario.builtin_fraud()
        cfg = scenario.load_scenario(os.path.join(SCENARIO_DIR, "ids.scn"))
        assert cfg == scenario.builtin_ids()

    def test_round_trip_identity(self, fraud_cfg, ids_cfg, toy_cfg):
        for cfg in (fraud_cfg, ids_cfg, toy_cfg, scenario.builtin_ids_raw()):
            again = scenario.parse_scenario(scenario.dump_scenario(cfg))
            assert again == cfg
            assert scenario.dump_scenario(again) == scenario.dump_scenario(cfg)

    def test_table_distribution_round_trips(self, fraud_cfg):
        dist = scenario.CountTable((0, 2, 5), (0.5, 0.3, 0.2))
        rows = list(fraud_cfg.trigger_dist)
        rows[0] = (dist,) + rows[0][1:]
        cfg = fraud_cfg.replace(trigger_dist=tuple(rows))
        assert scenario.parse_scenario(scenario.dump_scenario(cfg)) == cfg

    def test_out_of_range_discount_rejected(self, fraud_cfg):
        text = scenario.dump_scenario(fraud_cfg).replace("discount: 0.95", "discount: 1.2")
        with pytest.raises(scenario.ScenarioError, match="discount"):
            scenario.parse_scenario(text)

    def test_negative_cost_rejected(self, fraud_cfg):
        with pytest.raises(scenario.ScenarioError, match="cost"):
            fraud_cfg.replace(attacks=(
                scenario.AttackSpec(0, "bad", -1.0, 1.0),) + fraud_cfg.attacks[1:])

    def test_bad_probability_rejected(self, fraud_cfg):
        rows = list(fraud_cfg.trigger_dist)
        rows[0] = (scenario.BernoulliCount(1.5),) + rows[0][1:]
        with pytest.raises(scenario.ScenarioError, match="probability"):
            fraud_cfg.replace(trigger_dist=tuple(rows))

    def test_sparse_ids_rejected(self, fraud_cfg):
        types = (scenario.AlertTypeSpec(0, "a", 1.0), scenario.AlertTypeSpec(2, "b", 1.0),
                 scenario.AlertTypeSpec(1, "c", 1.0))
        with pytest.raises(scenario.ScenarioError, match="dense"):
            fraud_cfg.replace(alert_types=types)

    def test_parse_failure_reported(self):
        with pytest.raises(scenario.ScenarioError, match="format"):
            scenario.parse_scenario("just: some\nyaml: file\n")
        with pytest.raises(scenario.ScenarioError):
            scenario.parse_scenario("{unbalanced")


class TestPruning:
    def test_ids_raw_prunes_to_builtin(self):
        cfg, reserved = scenario.prune_always_inspect(scenario.builtin_ids_raw(), 0.0)
        assert cfg.n_alert_types == 7 and cfg.n_attacks == 7
        assert reserved == 0.0
        assert cfg == scenario.builtin_ids()

    def test_fraud_raw_prunes_to_builtin(self):
        cfg, reserved = scenario.prune_always_inspect(scenario.builtin_fraud_raw(), 0.0)
        assert cfg.n_alert_types == 3 and cfg.n_attacks == 3
        assert reserved == 0.0
        assert cfg == scenario.builtin_fraud()

    def test_no_zero_rate_types_is_a_no_op(self, fraud_cfg):
        cfg, reserved = scenario.prune_always_inspect(fraud_cfg, 0.0)
        assert cfg == fraud_cfg and reserved == 0.0

    def test_pruning_is_idempotent(self):
        once, _ = scenario.prune_always_inspect(scenario.builtin_ids_raw(), 0.0)
        twice, reserved = scenario.prune_always_inspect(once, 0.0)
        assert twice == once and reserved == 0.0

    @staticmethod
    def _raw_with_rare_type(defense_budget=20.0):
        # type 0 has a tiny benign rate and is only triggered by attack 0
        return scenario.ScenarioConfig(
            name="rare",
            alert_types=(scenario.AlertTypeSpec(0, "rare", 2.0),
                         scenario.AlertTypeSpec(1, "common-1", 1.0),
                         scenario.AlertTypeSpec(2, "common-2", 1.0)),
            attacks=(scenario.AttackSpec(0, "a0", 1.0, 5.0),
                     scenario.AttackSpec(1, "a1", 1.0, 7.0)),
            trigger_dist=(
                (scenario.DeterministicCount(1), scenario.DeterministicCount(0),
                 scenario.DeterministicCount(0)),
                (scenario.DeterministicCount(0), scenario.BernoulliCount(0.8),
                 scenario.DeterministicCount(2)),
            ),
            false_alarm_means=(0.5, 47.0, 39.0),
            defense_budget=defense_budget, attack_budget=2.0,
            discount=0.95, horizon=400)

    def test_positive_epsilon_reserves_budget(self):
        cfg, reserved = scenario.prune_always_inspect(self._raw_with_rare_type(), 1.0)
        assert cfg.n_alert_types == 2 and cfg.n_attacks == 1
        assert cfg.attacks[0].name == "a1"
        assert reserved == pytest.approx(2.0 * 0.5)  # cost 2 at rate 0.5

    def test_infeasible_reservation_rejected(self):
        raw = self._raw_with_rare_type(defense_budget=0.5)
        with pytest.raises(scenario.ScenarioError, match="reserved"):
            scenario.prune_always_inspect(raw, 1.0)

    def test_sure_trigger_on_pruned_type_removes_attack(self):
        # an attack with a certain trigger on an always-inspected type is
        # always detected even though it also raises surviving types
        raw = scenario.builtin_fraud_raw()
        rows = [list(r) for r in raw.trigger_dist]
        rows[0][1] = scenario.DeterministicCount(3)
        raw = raw.replace(trigger_dist=tuple(tuple(r) for r in rows))
        cfg, _ = scenario.prune_always_inspect(raw, 0.0)
        assert cfg.n_attacks == 2
        assert [a.name for a in cfg.attacks] == ["fraud-4", "fraud-6"]

    def test_partial_trigger_on_pruned_type_rejected(self):
        raw = scenario.builtin_fraud_raw()
        rows = [list(r) for r in raw.trigger_dist]
        rows[0][1] = scenario.BernoulliCount(0.5)
        raw = raw.replace(trigger_dist=tuple(tuple(r) for r in rows))
        with pytest.raises(scenario.ScenarioError, match="partial"):
            scenario.prune_always_inspect(raw, 0.0)


class TestTriggerSampling:
    def test_deterministic_counts_are_exact(self, ids_cfg, rng):
        assert list(ids_cfg.sample_triggers(0, rng)) == [1230, 0, 0, 0, 0, 0, 0]

    def test_bernoulli_rates(self, fraud_cfg):
        rng = np.random.default_rng(3)
        draws = np.array([fraud_cfg.sample_triggers(2, rng) for _ in range(20_000)])
        rates = draws.mean(axis=0)
        for t, p in enumerate([0.0, 0.41, 0.85]):
            sigma = np.sqrt(max(p * (1 - p), 1e-12) / 20_000)
            assert abs(rates[t] - p) <= max(3 * sigma, 1e-9)

    def test_table_sampling(self, rng):
        dist = scenario.CountTable((1, 4), (0.25, 0.75))
        draws = [dist.sample(rng) for _ in range(20_000)]
        assert abs(np.mean([d == 4 for d in draws]) - 0.75) < 0.02
        assert dist.mean() == pytest.approx(3.25)
