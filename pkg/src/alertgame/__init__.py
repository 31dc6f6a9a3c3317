"""Robust alert prioritization as a zero-sum game: a simulated detection
environment, actor-critic best-response oracles, and a double-oracle solver
that returns an equilibrium mix of inspection policies.
"""

__version__ = "0.1.0"

from .scenario import (ScenarioConfig, ScenarioError, load_scenario, save_scenario,
                       dump_scenario, prune_always_inspect, builtin_fraud,
                       builtin_ids, builtin_fraud_raw, builtin_ids_raw,
                       toy_scenario, IDS_PRIORITIES)
from .env import AdeState, init_state, survival_prob, inspect, step, rollout
from .policy import (MixedStrategy, NeuralStrategy, UniformDefender,
                     UniformAttacker, GreedyAttacker, StaticPriorityDefender,
                     NoOp, decode_defender, project_attacker, sample_attack,
                     obs_defender, obs_attacker)
from .oracle import OracleHyperparams, best_response
from .matrix_game import (UtilityMatrix, solve_zero_sum, exploitability,
                          best_pure_response_value)
from .double_oracle import (DoubleOracleConfig, RestrictedGame, estimate_utility,
                            run, evaluate_matchup)

__all__ = [
    "ScenarioConfig", "ScenarioError", "load_scenario", "save_scenario",
    "dump_scenario", "prune_always_inspect", "builtin_fraud", "builtin_ids",
    "builtin_fraud_raw", "builtin_ids_raw", "toy_scenario", "IDS_PRIORITIES",
    "AdeState", "init_state", "survival_prob", "inspect", "step", "rollout",
    "MixedStrategy", "NeuralStrategy", "UniformDefender", "UniformAttacker",
    "GreedyAttacker", "StaticPriorityDefender", "NoOp", "decode_defender",
    "project_attacker", "sample_attack", "obs_defender", "obs_attacker",
    "OracleHyperparams", "best_response", "UtilityMatrix", "solve_zero_sum",
    "exploitability", "best_pure_response_value", "DoubleOracleConfig",
    "RestrictedGame", "estimate_utility", "run", "evaluate_matchup",
]
