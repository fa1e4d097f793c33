#!/usr/bin/env python3
"""
Simplexe primal en arithmétique rationnelle exacte

Résout   max c·y   sous   A y ≤ b,  y ≥ 0
avec la règle de Bland (pas de cyclage). Les lignes du tableau sont des
dictionnaires creux {variable: coefficient}. Si b a des composantes
négatives, une première phase introduit une variable artificielle unique.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from ..errors import InternalError
from ..settings import BudgetClock

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass
class LPResult:
    status: str
    value: Optional[Fraction] = None
    solution: dict = field(default_factory=dict)
    pivots: int = 0


def _axpy(target: dict, row: dict, factor: Fraction):
    """target += factor · row, en retirant les zéros"""
    for j, v in row.items():
        updated = target.get(j, 0) + factor * v
        if updated:
            target[j] = updated
        else:
            target.pop(j, None)


class SparseTableau:
    """
    Tableau du simplexe : ligne i  ⇔  x_basis[i] + Σ_j rows[i][j]·x_j = rhs[i]

    L'objectif s'écrit  z = value + Σ_j objective[j]·x_j  sur les variables
    hors base.
    """

    def __init__(self, rows: list, rhs: list, basis: list, clock: Optional[BudgetClock] = None):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.objective: dict = {}
        self.value = Fraction(0)
        self.clock = clock
        self.pivots = 0

    def pivot(self, r: int, col: int):
        row = self.rows[r]
        piv = row[col]
        if piv != 1:
            row = {j: v / piv for j, v in row.items()}
            self.rows[r] = row
            self.rhs[r] = self.rhs[r] / piv
        b_r = self.rhs[r]
        # la variable sortante devient hors base avec le coefficient 1/piv
        leaving = self.basis[r]
        row[leaving] = Fraction(1) / piv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other.get(col)
            if f:
                _axpy(other, row, -f)
                self.rhs[i] -= f * b_r
        f = self.objective.get(col)
        if f:
            _axpy(self.objective, row, -f)
            self.value += f * b_r
        del row[col]
        self.basis[r] = col
        self.pivots += 1
        if self.clock is not None:
            self.clock.tick()

    def entering(self, excluded=()) -> Optional[int]:
        candidates = [j for j, v in self.objective.items() if v > 0 and j not in excluded]
        return min(candidates) if candidates else None

    def leaving(self, col: int) -> Optional[int]:
        best = None
        for i, row in enumerate(self.rows):
            a = row.get(col)
            if a is not None and a > 0:
                key = (self.rhs[i] / a, self.basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        return None if best is None else best[1]

    def run(self, excluded=()) -> str:
        while True:
            col = self.entering(excluded)
            if col is None:
                return OPTIMAL
            r = self.leaving(col)
            if r is None:
                return UNBOUNDED
            self.pivot(r, col)

    def set_objective(self, costs: Mapping[int, Fraction]):
        """Exprime l'objectif max Σ costs[j]·x_j en fonction des variables hors base"""
        self.objective = {j: Fraction(v) for j, v in costs.items() if v}
        self.value = Fraction(0)
        for i, var in enumerate(self.basis):
            c = self.objective.pop(var, None)
            if c:
                _axpy(self.objective, self.rows[i], -c)
                self.value += c * self.rhs[i]

    def solution(self, n: int) -> dict:
        return {var: self.rhs[i] for i, var in enumerate(self.basis) if var < n and self.rhs[i]}


def maximize(
    n: int,
    objective: Mapping[int, object],
    rows: Sequence[Mapping[int, object]],
    rhs: Sequence[object],
    clock: Optional[BudgetClock] = None,
) -> LPResult:
    """
    Maximise un programme linéaire sous forme d'inégalités

    Args:
        n: Nombre de variables structurelles (indices 0…n−1)
        objective: Coûts {variable: coefficient}
        rows: Lignes de A, creuses
        rhs: Second membre b
        clock: Budget de temps éventuel

    Returns:
        LPResult (statut, valeur optimale, solution creuse)
    """
    m = len(rows)
    tableau_rows = [{j: Fraction(v) for j, v in row.items() if v} for row in rows]
    tableau_rhs = [Fraction(v) for v in rhs]
    basis = [n + i for i in range(m)]
    tableau = SparseTableau(tableau_rows, tableau_rhs, basis, clock)

    if any(b < 0 for b in tableau_rhs):
        artificial = n + m
        for row in tableau.rows:
            row[artificial] = Fraction(-1)
        tableau.set_objective({artificial: -1})
        worst = min(range(m), key=lambda i: (tableau.rhs[i], i))
        tableau.pivot(worst, artificial)
        tableau.run()
        if tableau.value < 0:
            return LPResult(INFEASIBLE, pivots=tableau.pivots)
        if artificial in tableau.basis:
            r = tableau.basis.index(artificial)
            col = min((j for j in tableau.rows[r] if j != artificial), default=None)
            if col is None:
                raise InternalError("variable artificielle impossible à sortir de la base")
            tableau.pivot(r, col)
        for row in tableau.rows:
            row.pop(artificial, None)

    tableau.set_objective({j: v for j, v in objective.items()})
    status = tableau.run(excluded=(n + m,))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tableau.pivots)
    return LPResult(OPTIMAL, tableau.value, tableau.solution(n), tableau.pivots)
