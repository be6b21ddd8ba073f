"""Export of the l1 smoothing problem as an LP with complementarity constraints.

Variables ``x1_j, x2_j >= 0`` (positive and negative parts of x) and a free
``y_i_j`` per edge.  The model is only built, rendered and evaluated here;
solving it is left to external tools.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .graph import Graph

HALF = Fraction(1, 2)


def _x1(j: int) -> str:
    return f"x1_{j}"


def _x2(j: int) -> str:
    return f"x2_{j}"


def _y(i: int, j: int) -> str:
    return f"y_{i}_{j}"


@dataclass(frozen=True)
class LinearConstraint:
    name: str
    coeffs: tuple[tuple[str, int], ...]
    sense: str  # "<=" or "="
    rhs: Fraction

    def lhs(self, values: dict) -> object:
        return sum(c * values[v] for v, c in self.coeffs)


@dataclass(frozen=True)
class ModelCheck:
    feasible: bool
    objective: object
    violations: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class ComplementarityModel:
    n: int
    edges: tuple[tuple[int, int], ...]
    variables: tuple[str, ...]
    objective: tuple[str, ...]
    inequalities: tuple[LinearConstraint, ...]
    equalities: tuple[LinearConstraint, ...]
    complementarity: tuple[tuple[str, str], ...]
    nonnegative: tuple[str, ...]
    free: tuple[str, ...]

    def render(self) -> str:
        return render_model(self)

    def check(self, x1: Sequence, x2: Sequence, y: Sequence | None = None, tol: float = 1e-9) -> ModelCheck:
        """Evaluate feasibility and objective at a point.

        ``y`` is ordered like the edges; when omitted it is set to the
        tightest feasible value ``|x1_i - x2_i - x1_j + x2_j|``.
        """
        if len(x1) != self.n or len(x2) != self.n:
            raise ValueError("x1 and x2 must have one entry per vertex")
        if y is None:
            y = [abs(x1[i] - x2[i] - x1[j] + x2[j]) for i, j in self.edges]
        if len(y) != len(self.edges):
            raise ValueError("y must have one entry per edge")
        values = {}
        for j in range(self.n):
            values[_x1(j)] = x1[j]
            values[_x2(j)] = x2[j]
        for (i, j), yv in zip(self.edges, y):
            values[_y(i, j)] = yv

        bad = []
        for con in self.inequalities:
            if con.lhs(values) > con.rhs + tol:
                bad.append(f"{con.name}: {con.lhs(values)} > {con.rhs}")
        for con in self.equalities:
            if abs(con.lhs(values) - con.rhs) > tol:
                bad.append(f"{con.name}: {con.lhs(values)} != {con.rhs}")
        for a, b in self.complementarity:
            if abs(values[a] * values[b]) > tol:
                bad.append(f"complementarity {a}*{b} = {values[a] * values[b]}")
        for v in self.nonnegative:
            if values[v] < -tol:
                bad.append(f"{v} = {values[v]} < 0")
        objective = sum(values[v] for v in self.objective)
        return ModelCheck(not bad, objective, bad)


def export_complementarity_model(G: Graph) -> ComplementarityModel:
    xs1 = [_x1(j) for j in range(G.n)]
    xs2 = [_x2(j) for j in range(G.n)]
    ys = [_y(i, j) for i, j in G.edges]

    ineqs = []
    for i, j in G.edges:
        y = _y(i, j)
        ineqs.append(
            LinearConstraint(f"up_{i}_{j}", ((_x1(i), 1), (_x2(i), -1), (_x1(j), -1), (_x2(j), 1), (y, -1)), "<=", Fraction(0))
        )
        ineqs.append(
            LinearConstraint(f"dn_{i}_{j}", ((_x1(i), -1), (_x2(i), 1), (_x1(j), 1), (_x2(j), -1), (y, -1)), "<=", Fraction(0))
        )
    eqs = (
        LinearConstraint("sum_x1", tuple((v, 1) for v in xs1), "=", HALF),
        LinearConstraint("sum_x2", tuple((v, 1) for v in xs2), "=", HALF),
    )
    return ComplementarityModel(
        n=G.n,
        edges=G.edges,
        variables=tuple(xs1 + xs2 + ys),
        objective=tuple(ys),
        inequalities=tuple(ineqs),
        equalities=eqs,
        complementarity=tuple(zip(xs1, xs2)),
        nonnegative=tuple(xs1 + xs2),
        free=tuple(ys),
    )


def _linear(coeffs) -> str:
    out = ""
    for v, c in coeffs:
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)} "
        out += f" {sign} {mag}{v}" if out else (f"-{mag}{v}" if c < 0 else f"{mag}{v}")
    return out or "0"


def render_model(model: ComplementarityModel) -> str:
    lines = [f"# l1 graph smoothing model: n={model.n} m={len(model.edges)}", "VARIABLES"]
    lines.extend(model.variables)
    lines.append("MINIMIZE")
    lines.append(_linear((v, 1) for v in model.objective))
    lines.append("SUBJECT_TO")
    for con in model.inequalities + model.equalities:
        lines.append(f"{con.name}: {_linear(con.coeffs)} {con.sense} {con.rhs}")
    lines.append("COMPLEMENTARITY")
    lines.extend(f"{a} * {b} = 0" for a, b in model.complementarity)
    lines.append("BOUNDS")
    lines.extend(f"{v} >= 0" for v in model.nonnegative)
    lines.extend(f"{v} free" for v in model.free)
    lines.append("END")
    return "\n".join(lines) + "\n"


def split_parts(x: Sequence) -> tuple[list, list]:
    """Positive and negative parts ``(x+, x-)`` with ``x = x+ - x-``."""
    zero = x[0] - x[0]
    return [v if v > 0 else zero for v in x], [-v if v < 0 else zero for v in x]
