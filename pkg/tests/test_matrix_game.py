import numpy as np
import pytest

from alertgame import matrix_game as mg
from oracles import support_enumeration_value

RPS = np.array([[0.0, -1.0, 1.0], [1.0, 0.0, -1.0], [-1.0, 1.0, 0.0]])
PENNIES = np.array([[1.0, -1.0], [-1.0, 1.0]])
ASYM = np.array([[3.0, 1.0], [1.0, 2.0]])


class TestSolve:
    def test_rock_paper_scissors(self):
        sd, sa, value = mg.solve_zero_sum(RPS)
        assert np.allclose(sd, 1 / 3, atol=1e-8)
        assert np.allclose(sa, 1 / 3, atol=1e-8)
        assert value == pytest.approx(0.0, abs=1e-9)

    def test_matching_pennies(self):
        sd, sa, value = mg.solve_zero_sum(PENNIES)
        assert np.allclose(sd, 0.5, atol=1e-8) and np.allclose(sa, 0.5, atol=1e-8)
        assert value == pytest.approx(0.0, abs=1e-9)

    def test_asymmetric_game(self):
        # indifference: rows mix (1/3, 2/3), cols mix (1/3, 2/3), value 5/3
        sd, sa, value = mg.solve_zero_sum(ASYM)
        assert value == pytest.approx(5 / 3, abs=1e-9)
        assert np.allclose(sd, [1 / 3, 2 / 3], atol=1e-8)
        assert np.allclose(sa, [1 / 3, 2 / 3], atol=1e-8)

    def test_single_entry(self):
        sd, sa, value = mg.solve_zero_sum(np.array([[4.2]]))
        assert value == pytest.approx(4.2)
        assert sd[0] == 1.0 and sa[0] == 1.0

    def test_strategies_are_distributions(self, rng):
        for _ in range(50):
            shape = (int(rng.integers(1, 5)), int(rng.integers(1, 5)))
            u = rng.normal(size=shape)
            sd, sa, _ = mg.solve_zero_sum(u)
            assert (sd >= 0).all() and (sa >= 0).all()
            assert sd.sum() == pytest.approx(1.0, abs=1e-9)
            assert sa.sum() == pytest.approx(1.0, abs=1e-9)

    def test_duality(self, rng):
        for _ in range(50):
            shape = (int(rng.integers(1, 5)), int(rng.integers(1, 5)))
            u = rng.normal(size=shape)
            sd, sa, value = mg.solve_zero_sum(u)
            assert mg.exploitability(u, sd, sa) <= 1e-6

    def test_against_support_enumeration(self, rng):
        for _ in range(60):
            u = rng.uniform(-5, 5, size=(rng.integers(2, 5), rng.integers(2, 5)))
            _, _, value = mg.solve_zero_sum(u)
            oracle_value, _, _ = support_enumeration_value(u)
            assert value == pytest.approx(oracle_value, abs=1e-6)

    def test_scaling_and_shifting(self):
        sd0, sa0, v0 = mg.solve_zero_sum(ASYM)
        sd1, sa1, v1 = mg.solve_zero_sum(3.0 * ASYM)
        assert v1 == pytest.approx(3.0 * v0, abs=1e-8)
        assert set(np.flatnonzero(sd1 > 1e-9)) == set(np.flatnonzero(sd0 > 1e-9))
        sd2, sa2, v2 = mg.solve_zero_sum(ASYM + 7.0)
        assert v2 == pytest.approx(v0 + 7.0, abs=1e-8)
        assert set(np.flatnonzero(sa2 > 1e-9)) == set(np.flatnonzero(sa0 > 1e-9))

    def test_rejects_non_finite(self):
        with pytest.raises(mg.MatrixGameError):
            mg.solve_zero_sum(np.array([[1.0, np.nan]]))
        with pytest.raises(mg.MatrixGameError):
            mg.solve_zero_sum(np.array([[np.inf], [1.0]]))

    def test_deterministic_for_fixed_input(self):
        u = np.array([[1.0, 2.0, 0.5], [0.0, 1.5, 2.5]])
        first = mg.solve_zero_sum(u)
        second = mg.solve_zero_sum(u)
        assert np.array_equal(first[0], second[0])
        assert np.array_equal(first[1], second[1])


class TestExploitability:
    def test_zero_at_equilibrium(self):
        sd, sa, _ = mg.solve_zero_sum(RPS)
        assert mg.exploitability(RPS, sd, sa) <= 1e-9

    def test_positive_off_equilibrium(self):
        gap = mg.exploitability(RPS, [1.0, 0.0, 0.0], np.full(3, 1 / 3))
        assert gap == pytest.approx(1.0)

    def test_asymmetric_equilibrium(self):
        sd, sa, _ = mg.solve_zero_sum(ASYM)
        assert mg.exploitability(ASYM, sd, sa) <= 1e-9

    def test_dimension_mismatch(self):
        with pytest.raises(mg.MatrixGameError):
            mg.exploitability(RPS, [0.5, 0.5], np.full(3, 1 / 3))


class TestBestPureResponse:
    def test_single_entry(self):
        idx, value = mg.best_pure_response_value(np.array([[2.5]]), [1.0], mg.DEFENDER)
        assert idx == 0 and value == 2.5

    def test_rps_counter(self):
        # column plays rock: the best row is the one beating rock
        idx, value = mg.best_pure_response_value(RPS, [1.0, 0.0, 0.0], mg.DEFENDER)
        assert idx == 1 and value == 1.0

    def test_tie_breaks_low(self):
        idx, value = mg.best_pure_response_value(ASYM, [1 / 3, 2 / 3], mg.DEFENDER)
        assert idx == 0 and value == pytest.approx(5 / 3)

    def test_attacker_sign(self):
        idx, value = mg.best_pure_response_value(ASYM, [1.0, 0.0], mg.ATTACKER)
        # attacker minimizes defender utility: column 1 gives 1 (attacker +(-1))
        assert idx == 1 and value == pytest.approx(-1.0)


class TestCsv:
    def test_round_trip(self, tmp_path):
        u = mg.UtilityMatrix(ASYM, ["u0", "d1"], ["a0", "a1"])
        path = str(tmp_path / "game.csv")
        mg.write_matrix_csv(u, path)
        back = mg.read_matrix_csv(path)
        assert np.allclose(back.values, u.values)
        assert back.row_labels == u.row_labels
        assert back.col_labels == u.col_labels

    def test_malformed_rejected(self, tmp_path):
        path = str(tmp_path / "bad.csv")
        with open(path, "w") as fh:
            fh.write(",a0,a1\nrow0,1.0\n")
        with pytest.raises(mg.MatrixGameError):
            mg.read_matrix_csv(path)
