"""Finite zero-sum matrix games: the maximin linear program, exploitability,
and pure best responses. Entries are defender (row player) utilities.
"""

import csv
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

DEFENDER = +1
ATTACKER = -1


class MatrixGameError(ValueError):
    pass


@dataclass
class UtilityMatrix:
    """Defender utilities U[i, j] for row policy i against column policy j."""
    values: np.ndarray
    row_labels: list = field(default=None)
    col_labels: list = field(default=None)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 2 or min(self.values.shape) < 1:
            raise MatrixGameError("utility matrix must be 2-D and nonempty")
        if self.row_labels is None:
            self.row_labels = ["def_%d" % i for i in range(self.values.shape[0])]
        if self.col_labels is None:
            self.col_labels = ["att_%d" % j for j in range(self.values.shape[1])]
        if len(self.row_labels) != self.values.shape[0] or \
           len(self.col_labels) != self.values.shape[1]:
            raise MatrixGameError("label counts do not match the matrix shape")


def _as_matrix(u):
    if isinstance(u, UtilityMatrix):
        return u.values
    return np.asarray(u, dtype=np.float64)


def _maximin_lp(u):
    """Row player's maximin distribution for matrix u (rows maximize)."""
    k, _ = u.shape
    # variables: x_0..x_{k-1}, v;  maximize v  s.t.  u^T x >= v, sum x = 1
    c = np.zeros(k + 1)
    c[-1] = -1.0
    a_ub = np.hstack([-u.T, np.ones((u.shape[1], 1))])
    b_ub = np.zeros(u.shape[1])
    a_eq = np.ones((1, k + 1))
    a_eq[0, -1] = 0.0
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=[1.0],
                  bounds=[(0, None)] * k + [(None, None)], method="highs")
    if not res.success:
        raise MatrixGameError("linear program failed: %s" % res.message)
    x = np.clip(res.x[:k], 0.0, None)
    return x / x.sum(), res.x[-1]


def solve_zero_sum(u, tol=1e-6):
    """Mixed equilibrium of a zero-sum game via the standard maximin LP.

    :param u: UtilityMatrix or array of defender utilities.
    :param tol: exploitability bound the returned strategies must meet.
    :return: (sigma_def, sigma_att, value) with value = sigma_def' U sigma_att.
    """
    u = _as_matrix(u)
    if not np.isfinite(u).all():
        raise MatrixGameError("utility matrix entries must be finite")
    if tol <= 0:
        raise MatrixGameError("tol must be positive")
    sigma_def, value_def = _maximin_lp(u)
    sigma_att, value_att = _maximin_lp(-u.T)
    if abs(value_def + value_att) > tol:
        raise MatrixGameError("duality gap %.3g exceeds tolerance" % abs(value_def + value_att))
    value = float(sigma_def @ u @ sigma_att)
    gap = exploitability(u, sigma_def, sigma_att)
    if gap > tol:
        raise MatrixGameError("exploitability %.3g exceeds tolerance %.3g" % (gap, tol))
    return sigma_def, sigma_att, value


def exploitability(u, sigma_def, sigma_att):
    """Total utility both players could gain by best pure deviations; zero
    exactly at an equilibrium."""
    u = _as_matrix(u)
    sigma_def = np.asarray(sigma_def, dtype=np.float64)
    sigma_att = np.asarray(sigma_att, dtype=np.float64)
    if sigma_def.shape != (u.shape[0],) or sigma_att.shape != (u.shape[1],):
        raise MatrixGameError("strategy dimensions do not match the matrix")
    value = float(sigma_def @ u @ sigma_att)
    best_row = float((u @ sigma_att).max())
    worst_col = float((sigma_def @ u).min())
    return (best_row - value) + (value - worst_col)


def best_pure_response_value(u, sigma_opponent, player):
    """Best pure strategy of `player` against the opponent's mixed strategy.

    :param player: +1 for the row player (defender), -1 for the column player.
    :return: (index, expected utility for that player); ties go to the lowest index.
    """
    u = _as_matrix(u)
    sigma = np.asarray(sigma_opponent, dtype=np.float64)
    if player == DEFENDER:
        if sigma.shape != (u.shape[1],):
            raise MatrixGameError("opponent strategy does not match the columns")
        payoffs = u @ sigma
    elif player == ATTACKER:
        if sigma.shape != (u.shape[0],):
            raise MatrixGameError("opponent strategy does not match the rows")
        payoffs = -(sigma @ u)
    else:
        raise MatrixGameError("player must be +1 or -1")
    idx = int(np.argmax(payoffs))
    return idx, float(payoffs[idx])


# -- CSV interchange ---------------------------------------------------------------

def write_matrix_csv(u, path):
    """Header row carries column labels; each data row starts with its label."""
    if not isinstance(u, UtilityMatrix):
        u = UtilityMatrix(np.asarray(u, dtype=np.float64))
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([""] + list(u.col_labels))
        for label, row in zip(u.row_labels, u.values):
            writer.writerow([label] + ["%.9g" % v for v in row])


def read_matrix_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if len(rows) < 2 or len(rows[0]) < 2:
        raise MatrixGameError("matrix CSV needs a header row and at least one data row")
    col_labels = rows[0][1:]
    row_labels, values = [], []
    for row in rows[1:]:
        if not row:
            continue
        if len(row) != len(col_labels) + 1:
            raise MatrixGameError("ragged matrix CSV row: %r" % row)
        row_labels.append(row[0])
        try:
            values.append([float(v) for v in row[1:]])
        except ValueError as err:
            raise MatrixGameError("non-numeric matrix entry: %s" % err)
    return UtilityMatrix(np.array(values), row_labels, col_labels)
