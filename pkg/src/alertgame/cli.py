"""Batch experiment front end.

Subcommands: `train` runs the double oracle and writes per-iteration CSV plus
a strategy bundle; `eval` sweeps a defender against attacker models over
budget grids into a tidy CSV; `solve` solves a matrix-game CSV; `scenario
validate` checks a scenario document. Every run writes its manifest before
computing, and identical manifests produce byte-identical CSVs regardless of
`--threads`.
"""

import argparse
import dataclasses
import json
import os
import sys

import numpy as np

from . import __version__, double_oracle, matrix_game, nn, oracle, policy, scenario

EXIT_USAGE = 2


class CliError(Exception):
    def __init__(self, message, code=1):
        super().__init__(message)
        self.code = code


def _f9(x):
    return "%.9g" % float(x)


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(str(v) if isinstance(v, (int, str)) else _f9(v)
                              for v in row) + "\n")


def _load_scenario(path):
    if not os.path.exists(path):
        raise CliError("scenario file not found: %s" % path, code=EXIT_USAGE)
    try:
        return scenario.load_scenario(path)
    except scenario.ScenarioError as err:
        raise CliError("invalid scenario %s: %s" % (path, err), code=EXIT_USAGE)


def _apply_budgets(cfg, def_budget, att_budget):
    changes = {}
    if def_budget is not None:
        changes["defense_budget"] = def_budget
    if att_budget is not None:
        changes["attack_budget"] = att_budget
    return cfg.replace(**changes) if changes else cfg


def _write_manifest(out_dir, subcommand, args_dict, seed, scenario_path):
    os.makedirs(out_dir, exist_ok=True)
    manifest = {
        "tool": "alertgame",
        "version": __version__,
        "subcommand": subcommand,
        "scenario": scenario_path,
        "seed": seed,
        "out": out_dir,
        "config": args_dict,
    }
    with open(os.path.join(out_dir, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return manifest


# -- strategy bundles ---------------------------------------------------------

def save_bundle(out_dir, result, cfg):
    """Write the equilibrium mix: an index plus one checkpoint per network."""
    os.makedirs(out_dir, exist_ok=True)
    index = {"version": 1, "scenario": cfg.name, "value": float(result.value),
             "defender": [], "attacker": []}
    for side, policies, probs in (("defender", result.def_policies, result.sigma_def),
                                  ("attacker", result.att_policies, result.sigma_att)):
        for i, (strat, prob) in enumerate(zip(policies, probs)):
            rec = {"weight": float(prob), "label": strat.label}
            if isinstance(strat, policy.NeuralStrategy):
                fname = "%s_%02d.npz" % (side, i)
                nn.save_params(strat.params, os.path.join(out_dir, fname))
                rec["kind"] = "neural"
                rec["file"] = fname
            elif isinstance(strat, policy.UniformDefender):
                rec["kind"] = "uniform-defender"
            elif isinstance(strat, policy.UniformAttacker):
                rec["kind"] = "uniform-attacker"
            else:
                raise CliError("cannot serialize strategy %r" % strat.label)
            index[side].append(rec)
    with open(os.path.join(out_dir, "index.json"), "w") as fh:
        json.dump(index, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_bundle(bundle_dir, side):
    path = os.path.join(bundle_dir, "index.json")
    if not os.path.exists(path):
        raise CliError("strategy bundle not found: %s" % path, code=EXIT_USAGE)
    with open(path) as fh:
        index = json.load(fh)
    strategies, probs = [], []
    role = policy.DEFENDER if side == "defender" else policy.ATTACKER
    for rec in index[side]:
        kind = rec["kind"]
        if kind == "neural":
            params = nn.load_params(os.path.join(bundle_dir, rec["file"]))
            strategies.append(policy.NeuralStrategy(params, role, label=rec["label"]))
        elif kind == "uniform-defender":
            strategies.append(policy.UniformDefender())
        elif kind == "uniform-attacker":
            strategies.append(policy.UniformAttacker())
        else:
            raise CliError("unknown strategy kind %r in bundle" % kind)
        probs.append(rec["weight"])
    return policy.MixedStrategy(strategies, probs)


# -- subcommands ---------------------------------------------------------------

def cmd_train(args):
    cfg = _load_scenario(args.scenario)
    cfg = _apply_budgets(cfg, args.def_budget, args.att_budget)
    hp = oracle.OracleHyperparams.for_scenario(
        cfg, episodes=args.episodes, steps=args.steps)
    doc = double_oracle.DoubleOracleConfig(
        rollouts_per_entry=args.rollouts,
        eval_horizon=args.horizon,
        improvement_tol=args.tol,
        max_iterations=args.max_iterations,
        def_hp=hp, att_hp=hp,
        master_seed=args.seed,
        carryover=args.carryover)
    _write_manifest(args.out, "train", {
        "defense_budget": cfg.defense_budget,
        "attack_budget": cfg.attack_budget,
        "episodes": hp.episodes, "steps": hp.steps,
        "policy_lr": hp.policy_lr, "value_lr": hp.value_lr,
        "discount": hp.discount, "buffer_capacity": hp.buffer_capacity,
        "minibatch": hp.minibatch,
        "rollouts_per_entry": doc.rollouts_per_entry,
        "eval_horizon": doc.eval_horizon,
        "improvement_tol": doc.improvement_tol,
        "max_iterations": doc.max_iterations,
        "carryover": doc.carryover,
    }, args.seed, args.scenario)

    oracle_dir = os.path.join(args.out, "oracle_logs")
    os.makedirs(oracle_dir, exist_ok=True)

    def oracle_log(player, iteration, metrics):
        name = "defender" if player == +1 else "attacker"
        _write_csv(os.path.join(oracle_dir, "iter%02d_%s.csv" % (iteration, name)),
                   ["episode", "mean_reward", "critic_loss", "epsilon"],
                   [(m.episode, m.mean_reward, m.mean_critic_loss, m.epsilon)
                    for m in metrics])

    result = double_oracle.run(cfg, doc, oracle_log=oracle_log, threads=args.threads)

    _write_csv(os.path.join(args.out, "iterations.csv"),
               ["iteration", "n_def_policies", "n_att_policies",
                "restricted_value", "def_improvement", "att_improvement"],
               [(r.iteration, r.n_def, r.n_att, r.value,
                 r.def_improvement, r.att_improvement) for r in result.history])
    save_bundle(os.path.join(args.out, "strategies"), result, cfg)
    print("converged=%s iterations=%d value=%s"
          % (result.converged, result.iterations, _f9(result.value)))
    return 0


def _resolve_defender(name, cfg):
    if name == "uniform":
        return policy.MixedStrategy.pure(policy.UniformDefender()), "uniform"
    if name == "priority":
        if len(scenario.IDS_PRIORITIES) == cfg.n_alert_types:
            priorities = scenario.IDS_PRIORITIES
        else:
            raise CliError("--defender priority needs --priority-list for this scenario",
                           code=EXIT_USAGE)
        return (policy.MixedStrategy.pure(policy.StaticPriorityDefender(priorities)),
                "priority")
    if os.path.isdir(name):
        return load_bundle(name, "defender"), "bundle:%s" % name
    raise CliError("unknown defender %r (uniform, priority, or a bundle directory)"
                   % name, code=EXIT_USAGE)


def cmd_eval(args):
    cfg = _load_scenario(args.scenario)
    def_budgets = args.def_budget or [cfg.defense_budget]
    att_budgets = args.att_budget or [cfg.attack_budget]
    if args.attacker not in double_oracle.ATTACKER_MODELS:
        raise CliError("unknown attacker model %r" % args.attacker, code=EXIT_USAGE)
    _write_manifest(args.out, "eval", {
        "defender": args.defender,
        "attacker": args.attacker,
        "def_budgets": def_budgets,
        "att_budgets": att_budgets,
        "episodes": args.rollouts,
        "horizon": args.horizon,
        "oracle_episodes": args.episodes,
        "oracle_steps": args.steps,
        "priority_list": args.priority_list,
        "carryover": args.carryover,
    }, args.seed, args.scenario)

    rows = []
    for def_budget in def_budgets:
        for att_budget in att_budgets:
            case = _apply_budgets(cfg, def_budget, att_budget)
            if args.priority_list and args.defender == "priority":
                defender = policy.MixedStrategy.pure(
                    policy.StaticPriorityDefender(args.priority_list))
                label = "priority"
            else:
                defender, label = _resolve_defender(args.defender, case)
            hp = oracle.OracleHyperparams.for_scenario(
                case, episodes=args.episodes, steps=args.steps)
            res = double_oracle.evaluate_matchup(
                defender, args.attacker, case, episodes=args.rollouts,
                horizon=args.horizon, seed=args.seed, oracle_hp=hp,
                carryover=args.carryover)
            rows.append((label, args.attacker, def_budget, att_budget,
                         res.mean_loss, res.ci95, res.episodes))
    _write_csv(os.path.join(args.out, "eval.csv"),
               ["defender", "attacker_model", "B", "D",
                "mean_loss", "ci95", "seeds"],
               rows)
    for row in rows:
        print("defender=%s attacker=%s B=%s D=%s loss=%s +-%s"
              % (row[0], row[1], _f9(row[2]), _f9(row[3]), _f9(row[4]), _f9(row[5])))
    return 0


def cmd_solve(args):
    if not os.path.exists(args.matrix):
        raise CliError("matrix file not found: %s" % args.matrix, code=EXIT_USAGE)
    try:
        u = matrix_game.read_matrix_csv(args.matrix)
    except matrix_game.MatrixGameError as err:
        raise CliError("malformed matrix CSV: %s" % err, code=EXIT_USAGE)
    sigma_def, sigma_att, value = matrix_game.solve_zero_sum(u, tol=args.tol)
    gap = matrix_game.exploitability(u, sigma_def, sigma_att)
    print("value: %s" % _f9(value))
    print("exploitability: %s" % _f9(gap))
    for label, prob in zip(u.row_labels, sigma_def):
        print("defender %s: %s" % (label, _f9(prob)))
    for label, prob in zip(u.col_labels, sigma_att):
        print("attacker %s: %s" % (label, _f9(prob)))
    return 0


def cmd_scenario_validate(args):
    cfg = _load_scenario(args.scenario)
    print("ok: %s (|T|=%d, |A|=%d, B=%s, D=%s)"
          % (cfg.name, cfg.n_alert_types, cfg.n_attacks,
             _f9(cfg.defense_budget), _f9(cfg.attack_budget)))
    return 0


# -- argument parsing ---------------------------------------------------------

def _float_list(text):
    return [float(v) for v in text.split(",") if v]


def _int_list(text):
    return [int(v) for v in text.split(",") if v]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="alertgame",
        description="Robust alert-prioritization policies via a double-oracle game solver.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    train = sub.add_parser("train", help="run the double oracle on a scenario")
    train.add_argument("--scenario", required=True)
    train.add_argument("--seed", type=int, default=0)
    train.add_argument("--out", required=True)
    train.add_argument("--episodes", type=int, default=500)
    train.add_argument("--steps", type=int, default=400)
    train.add_argument("--rollouts", type=int, default=200)
    train.add_argument("--horizon", type=int, default=150)
    train.add_argument("--def-budget", type=float, default=None)
    train.add_argument("--att-budget", type=float, default=None)
    train.add_argument("--tol", type=float, default=None)
    train.add_argument("--max-iterations", type=int, default=30)
    train.add_argument("--threads", type=int, default=1)
    train.add_argument("--carryover", action="store_true")
    train.set_defaults(func=cmd_train)

    evl = sub.add_parser("eval", help="evaluate a defender against attacker models")
    evl.add_argument("--scenario", required=True)
    evl.add_argument("--seed", type=int, default=0)
    evl.add_argument("--out", required=True)
    evl.add_argument("--defender", default="uniform",
                     help="uniform, priority, or a strategy bundle directory")
    evl.add_argument("--attacker", default="oracle",
                     help="oracle, uniform, greedy, or none")
    evl.add_argument("--def-budget", type=_float_list, default=None,
                     help="comma-separated sweep values")
    evl.add_argument("--att-budget", type=_float_list, default=None)
    evl.add_argument("--rollouts", type=int, default=200,
                     help="evaluation episodes per grid cell")
    evl.add_argument("--horizon", type=int, default=150)
    evl.add_argument("--episodes", type=int, default=500,
                     help="training episodes for the oracle attacker")
    evl.add_argument("--steps", type=int, default=400)
    evl.add_argument("--priority-list", type=_int_list, default=None)
    evl.add_argument("--threads", type=int, default=1)
    evl.add_argument("--carryover", action="store_true")
    evl.set_defaults(func=cmd_eval)

    solve = sub.add_parser("solve", help="solve a zero-sum matrix game CSV")
    solve.add_argument("--matrix", required=True)
    solve.add_argument("--tol", type=float, default=1e-6)
    solve.set_defaults(func=cmd_solve)

    scen = sub.add_parser("scenario", help="scenario utilities")
    scen_sub = scen.add_subparsers(dest="scenario_command", required=True)
    val = scen_sub.add_parser("validate", help="parse and validate a scenario file")
    val.add_argument("--scenario", required=True)
    val.set_defaults(func=cmd_scenario_validate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as err:
        print("error: %s" % err, file=sys.stderr)
        return err.code


if __name__ == "__main__":
    sys.exit(main())
