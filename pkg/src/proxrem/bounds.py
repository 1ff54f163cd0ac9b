"""Machine-checkable catalog of distance-invariant inequalities.

Each catalog entry is data: a hypothesis record plus symbolic left/right
sides over the invariant vocabulary (n, delta, pi, rho, diam, rad, floor,
ceil, rational constants). Evaluation substitutes the exact values from an
InvariantReport, so slack signs are never subject to rounding. The catalog
is printable and diffable; nothing about a bound lives in code paths.

Alongside the 18 expression bounds there is one delegated per-vertex check,
``EPP-ball``, whose left side (the smallest distance-2 ball) is not part of
the expression vocabulary; it is computed by :func:`proxrem.forbidden.check_epp_lemma`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import forbidden
from .graph import Graph, is_connected
from .metrics import InvariantReport, bfs_distances, invariant_report


# ---------------------------------------------------------------------------
# Expression trees
# ---------------------------------------------------------------------------


class Expr:
    """Tiny arithmetic AST evaluated over exact rationals."""

    def evaluate(self, env: dict[str, Fraction]) -> Fraction:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def _prec(self) -> int:
        return 3

    def __add__(self, other):
        return BinOp("+", self, _coerce(other))

    def __radd__(self, other):
        return BinOp("+", _coerce(other), self)

    def __sub__(self, other):
        return BinOp("-", self, _coerce(other))

    def __rsub__(self, other):
        return BinOp("-", _coerce(other), self)

    def __mul__(self, other):
        return BinOp("*", self, _coerce(other))

    def __rmul__(self, other):
        return BinOp("*", _coerce(other), self)

    def __truediv__(self, other):
        return BinOp("/", self, _coerce(other))

    def __rtruediv__(self, other):
        return BinOp("/", _coerce(other), self)

    def __repr__(self) -> str:
        return self.render()


def _coerce(value) -> "Expr":
    if isinstance(value, Expr):
        return value
    return Const(Fraction(value))


@dataclass(frozen=True, repr=False)
class Const(Expr):
    value: Fraction

    def evaluate(self, env):
        return self.value

    def render(self):
        return str(self.value)

    def _prec(self):
        return 3 if self.value.denominator == 1 and self.value >= 0 else 0


@dataclass(frozen=True, repr=False)
class Var(Expr):
    name: str

    def evaluate(self, env):
        return env[self.name]

    def render(self):
        return self.name


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


@dataclass(frozen=True, repr=False)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr

    def evaluate(self, env):
        a = self.left.evaluate(env)
        b = self.right.evaluate(env)
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        return a / b

    def _prec(self):
        return _PREC[self.op]

    def render(self):
        lhs = self.left.render()
        rhs = self.right.render()
        if self.left._prec() < self._prec():
            lhs = f"({lhs})"
        # subtraction and division need parens around same-precedence right sides
        if self.right._prec() < self._prec() or (
            self.right._prec() == self._prec() and self.op in ("-", "/")
        ):
            rhs = f"({rhs})"
        return f"{lhs} {self.op} {rhs}"


@dataclass(frozen=True, repr=False)
class Floor(Expr):
    arg: Expr

    def evaluate(self, env):
        return Fraction(math.floor(self.arg.evaluate(env)))

    def render(self):
        return f"floor({self.arg.render()})"


@dataclass(frozen=True, repr=False)
class Ceil(Expr):
    arg: Expr

    def evaluate(self, env):
        return Fraction(math.ceil(self.arg.evaluate(env)))

    def render(self):
        return f"ceil({self.arg.render()})"


N = Var("n")
DELTA = Var("delta")
PI = Var("pi")
RHO = Var("rho")
DIAM = Var("diam")
RAD = Var("rad")

# delta^2 - 2*floor(delta/2) + 1, the guaranteed distance-2 ball size in a
# C4-free graph; several bounds are phrased in terms of it.
BALL = DELTA * DELTA - 2 * Floor(DELTA / 2) + 1


# ---------------------------------------------------------------------------
# Bound records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundSpec:
    """One inequality with its hypotheses rendered as data.

    ``direction`` orients the claim: "<=" means lhs <= rhs must hold, ">="
    means lhs >= rhs. When ``rhs_even`` is set it replaces ``rhs`` on graphs
    of even order (the parity-split bounds).
    """

    id: str
    description: str
    class_requirement: str  # any | triangle_free | c4_free
    min_n: int
    min_delta: int
    lhs: Expr
    direction: str  # "<=" or ">="
    rhs: Expr
    rhs_even: Expr | None = None
    extra: str | None = None  # extra hypothesis tag, see _extra_hypothesis

    def rhs_for(self, n: int) -> Expr:
        if self.rhs_even is not None and n % 2 == 0:
            return self.rhs_even
        return self.rhs


def _extra_hypothesis(tag: str, report: InvariantReport) -> bool:
    if tag == "delta_below_quarter_order_minus_one":
        return Fraction(report.min_degree) < Fraction(report.order, 4) - 1
    raise ValueError(f"unknown hypothesis tag {tag!r}")


EPP_BALL_ID = "EPP-ball"


def _catalog() -> tuple[BoundSpec, ...]:
    return (
        BoundSpec(
            id="AH-rho-pi",
            description="remoteness minus proximity against order, parity-split",
            class_requirement="any",
            min_n=3,
            min_delta=1,
            lhs=RHO - PI,
            direction="<=",
            rhs=(N - 1) / 4,
            rhs_even=(N - 1) / 4 - 1 / (4 * N - 4),
        ),
        BoundSpec(
            id="AH-diam-pi",
            description="diameter minus proximity against order, tight exactly on paths",
            class_requirement="any",
            min_n=3,
            min_delta=1,
            lhs=DIAM - PI,
            direction="<=",
            rhs=(3 * N - 5) / 4,
            rhs_even=(3 * N - 5) / 4 - 1 / (4 * N - 4),
        ),
        BoundSpec(
            id="AH-rad-pi",
            description="radius minus proximity against order, parity-split",
            class_requirement="any",
            min_n=3,
            min_delta=1,
            lhs=RAD - PI,
            direction="<=",
            rhs=(N - 1) / 4 - 1 / (N - 1),
            rhs_even=(N - 1) / 4 - 1 / (4 * N - 4),
        ),
        BoundSpec(
            id="D-rho-pi",
            description="remoteness minus proximity against order and minimum degree",
            class_requirement="any",
            min_n=2,
            min_delta=2,
            lhs=RHO - PI,
            direction="<=",
            rhs=3 * N / (4 * (DELTA + 1)) + 3,
        ),
        BoundSpec(
            id="D-diam-pi",
            description="diameter minus proximity against order and minimum degree",
            class_requirement="any",
            min_n=20,
            min_delta=2,
            lhs=DIAM - PI,
            direction="<=",
            rhs=9 * N / (4 * (DELTA + 1)) + 3 * DELTA / 4,
        ),
        BoundSpec(
            id="D-rad-pi",
            description="radius minus proximity against order and minimum degree",
            class_requirement="any",
            min_n=2,
            min_delta=1,
            lhs=RAD - PI,
            direction="<=",
            rhs=3 * N / (4 * (DELTA + 1)) + (8 * DELTA + 5) / (4 * (DELTA + 1)),
            extra="delta_below_quarter_order_minus_one",
        ),
        BoundSpec(
            id="TF-rho-pi",
            description="remoteness minus proximity in triangle-free graphs",
            class_requirement="triangle_free",
            min_n=7,
            min_delta=3,
            lhs=RHO - PI,
            direction="<=",
            rhs=(N + 1) / (2 * DELTA) + 4,
        ),
        BoundSpec(
            id="C4-rho-pi",
            description="remoteness minus proximity in C4-free graphs",
            class_requirement="c4_free",
            min_n=6,
            min_delta=3,
            lhs=RHO - PI,
            direction="<=",
            rhs=5 * (N + 1) / (4 * BALL) + Const(Fraction(101, 20)),
        ),
        BoundSpec(
            id="EPP-diam-TF",
            description="diameter of a triangle-free graph against order and minimum degree",
            class_requirement="triangle_free",
            min_n=2,
            min_delta=3,
            lhs=DIAM,
            direction="<=",
            rhs=4 * Ceil((N - DELTA - 1) / (2 * DELTA)),
        ),
        BoundSpec(
            id="EPP-diam-C4",
            description="diameter of a C4-free graph against order and minimum degree",
            class_requirement="c4_free",
            min_n=2,
            min_delta=3,
            lhs=DIAM,
            direction="<=",
            rhs=Floor(5 * N / BALL),
        ),
        BoundSpec(
            id="TF-pi-diam",
            description="proximity of a triangle-free graph from below, given the diameter",
            class_requirement="triangle_free",
            min_n=8,
            min_delta=3,
            lhs=PI,
            direction=">=",
            rhs=DELTA * (DIAM - 4) * (DIAM - 1) / (8 * (N - 1)),
        ),
        BoundSpec(
            id="TF-diam-pi",
            description="diameter minus proximity in triangle-free graphs",
            class_requirement="triangle_free",
            min_n=8,
            min_delta=3,
            lhs=DIAM - PI,
            direction="<=",
            rhs=3 * (N - 1) / (2 * DELTA) + Const(Fraction(5, 2)),
        ),
        BoundSpec(
            id="C4-pi-diam",
            description="proximity of a C4-free graph from below, given the diameter",
            class_requirement="c4_free",
            min_n=8,
            min_delta=3,
            lhs=PI,
            direction=">=",
            rhs=BALL * (DIAM - 4) * (DIAM - 3) / (20 * (N - 1)),
        ),
        BoundSpec(
            id="C4-diam-pi",
            description="diameter minus proximity in C4-free graphs",
            class_requirement="c4_free",
            min_n=6,
            min_delta=3,
            lhs=DIAM - PI,
            direction="<=",
            rhs=15 * N / (4 * BALL) + Const(Fraction(7, 4)),
        ),
        BoundSpec(
            id="TF-pi-rad",
            description="proximity of a triangle-free graph from below, given the radius",
            class_requirement="triangle_free",
            min_n=6,
            min_delta=3,
            lhs=PI,
            direction=">=",
            rhs=DELTA / (2 * (N - 1)) * (RAD * RAD - 7 * RAD + Const(Fraction(47, 8))),
        ),
        BoundSpec(
            id="TF-rad-pi",
            description="radius minus proximity in triangle-free graphs",
            class_requirement="triangle_free",
            min_n=6,
            min_delta=3,
            lhs=RAD - PI,
            direction="<=",
            rhs=(N - 1) / (2 * DELTA) + Const(Fraction(11, 2)),
        ),
        BoundSpec(
            id="C4-pi-rad",
            description="proximity of a C4-free graph from below, given the radius",
            class_requirement="c4_free",
            min_n=16,
            min_delta=3,
            lhs=PI,
            direction=">=",
            rhs=BALL / (5 * (N - 1)) * (RAD * RAD - 8 * RAD + Const(Fraction(127, 8))),
        ),
        BoundSpec(
            id="C4-rad-pi",
            description="radius minus proximity in C4-free graphs",
            class_requirement="c4_free",
            min_n=16,
            min_delta=3,
            lhs=RAD - PI,
            direction="<=",
            rhs=5 * (N - 1) / (4 * BALL) + 4,
        ),
    )


_CATALOG = _catalog()
_BY_ID = {b.id: b for b in _CATALOG}


def catalog() -> tuple[BoundSpec, ...]:
    """The 18 expression bounds, ids stable across releases."""
    return _CATALOG


def all_check_ids() -> tuple[str, ...]:
    """Every checkable id: the catalog plus the delegated EPP-ball check."""
    return tuple(b.id for b in _CATALOG) + (EPP_BALL_ID,)


def bound_by_id(bound_id: str) -> BoundSpec:
    try:
        return _BY_ID[bound_id]
    except KeyError:
        raise KeyError(f"unknown bound id {bound_id!r}; known ids: {', '.join(all_check_ids())}") from None


def format_catalog() -> str:
    """Human-readable table of every checkable bound."""
    rows = []
    for b in _CATALOG:
        hyp = [f"n >= {b.min_n}", f"delta >= {b.min_delta}"]
        if b.extra == "delta_below_quarter_order_minus_one":
            hyp.append("delta < n/4 - 1")
        if b.class_requirement != "any":
            hyp.append(b.class_requirement.replace("_", "-"))
        ineq = f"{b.lhs.render()} {b.direction} {b.rhs.render()}"
        if b.rhs_even is not None:
            ineq += f"   [even n: {b.rhs_even.render()}]"
        rows.append((b.id, "; ".join(hyp), ineq))
    rows.append(
        (
            EPP_BALL_ID,
            "c4-free; per vertex",
            "min_v |ball_2(v)| >= delta^2 - 2*floor(delta/2) + 1",
        )
    )
    id_width = max(len(r[0]) for r in rows)
    hyp_width = max(len(r[1]) for r in rows)
    lines = [f"{'id':<{id_width}}  {'hypotheses':<{hyp_width}}  inequality"]
    lines.append("-" * (id_width + hyp_width + 14))
    for rid, hyp, ineq in rows:
        lines.append(f"{rid:<{id_width}}  {hyp:<{hyp_width}}  {ineq}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one bound on one graph.

    Slack is oriented so that slack >= 0 means the bound holds; tight means
    exact rational equality. Inapplicable results carry no values.
    """

    bound_id: str
    applicable: bool
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    holds: bool | None = None
    slack: Fraction | None = None
    tight: bool | None = None


def _applicable(b: BoundSpec, report: InvariantReport) -> bool:
    in_class = True
    if b.class_requirement == "triangle_free":
        if report.triangle_free is None:
            raise ValueError(f"bound {b.id} needs the triangle_free flag, which is unset")
        in_class = report.triangle_free
    elif b.class_requirement == "c4_free":
        if report.c4_free is None:
            raise ValueError(f"bound {b.id} needs the c4_free flag, which is unset")
        in_class = report.c4_free
    if not in_class:
        return False
    if report.order < b.min_n or report.min_degree < b.min_delta:
        return False
    if b.extra is not None and not _extra_hypothesis(b.extra, report):
        return False
    return True


def evaluate(b: BoundSpec, report: InvariantReport) -> CheckResult:
    """Evaluate one expression bound exactly against a report."""
    if not _applicable(b, report):
        return CheckResult(bound_id=b.id, applicable=False)
    env = {
        "n": Fraction(report.order),
        "delta": Fraction(report.min_degree),
        "pi": report.proximity,
        "rho": report.remoteness,
        "diam": Fraction(report.diameter),
        "rad": Fraction(report.radius),
    }
    lhs = b.lhs.evaluate(env)
    rhs = b.rhs_for(report.order).evaluate(env)
    slack = rhs - lhs if b.direction == "<=" else lhs - rhs
    return CheckResult(
        bound_id=b.id,
        applicable=True,
        lhs=lhs,
        rhs=rhs,
        holds=slack >= 0,
        slack=slack,
        tight=slack == 0,
    )


def _evaluate_epp_ball(g: Graph, report: InvariantReport) -> CheckResult:
    if report.c4_free is None:
        raise ValueError(f"bound {EPP_BALL_ID} needs the c4_free flag, which is unset")
    if not report.c4_free:
        return CheckResult(bound_id=EPP_BALL_ID, applicable=False)
    ball = forbidden.check_epp_lemma(g)
    slack = Fraction(ball.slack)
    return CheckResult(
        bound_id=EPP_BALL_ID,
        applicable=True,
        lhs=Fraction(ball.min_ball),
        rhs=Fraction(ball.bound),
        holds=ball.holds,
        slack=slack,
        tight=slack == 0,
    )


def classify(g: Graph) -> tuple[bool, bool]:
    """(triangle_free, c4_free) flags for a graph."""
    return forbidden.find_triangle(g) is None, forbidden.find_c4(g) is None


def complete_report(g: Graph, threads: int | None = None) -> InvariantReport:
    """Invariant report with the class flags filled in."""
    tf, c4 = classify(g)
    return invariant_report(g, threads=threads).with_class_flags(tf, c4)


def check_graph(
    g: Graph,
    ids: Sequence[str] | None = None,
    report: InvariantReport | None = None,
) -> list[CheckResult]:
    """Evaluate the requested bounds (default: all of them) on one graph.

    The invariant report and class flags are computed once. An applicable
    bound that fails marks a hard anomaly: these inequalities are theorems,
    so a violation means a bug on one side or the other.
    """
    if not is_connected(g):
        # raises DisconnectedGraphError naming an unreachable vertex
        bfs_distances(g, 0)
    if g.order < 2:
        raise ValueError("bound checking needs order >= 2")
    if report is None:
        report = complete_report(g)
    wanted = list(ids) if ids is not None else list(all_check_ids())
    results = []
    for bound_id in wanted:
        if bound_id == EPP_BALL_ID:
            results.append(_evaluate_epp_ball(g, report))
        else:
            results.append(evaluate(bound_by_id(bound_id), report))
    return results
