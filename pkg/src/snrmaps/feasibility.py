"""Exact Fourier-Motzkin feasibility for homogeneous systems with strict rows.

Every constraint has the form ``sum(c_k * v_k) >= 0`` or ``> 0`` over
Fractions. Variables are indexed ``0..nvars-1``; for an (n, r)-system the
order is x_r, ..., x_1, y_1, ..., y_{n-r}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)


@dataclass(frozen=True)
class LinearConstraint:
    coeffs: tuple[Fraction, ...]
    strict: bool = False

    @classmethod
    def of(cls, coeffs: Iterable, strict: bool = False) -> "LinearConstraint":
        return cls(tuple(Fraction(c) for c in coeffs), strict)

    def evaluate(self, values: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.coeffs, values) if c), ZERO)

    def holds(self, values: Sequence[Fraction]) -> bool:
        s = self.evaluate(values)
        return s > 0 if self.strict else s >= 0

    def negated(self) -> "LinearConstraint":
        """not(S >= 0) is -S > 0; not(S > 0) is -S >= 0."""
        return LinearConstraint(tuple(-c for c in self.coeffs), not self.strict)

    def is_trivial(self) -> bool:
        return not any(self.coeffs)

    def normalized(self) -> "LinearConstraint":
        """Positive rescaling making the first nonzero coefficient +-1."""
        lead = next((c for c in self.coeffs if c), None)
        if lead is None:
            return self
        k = abs(lead)
        return LinearConstraint(tuple(c / k for c in self.coeffs), self.strict)

    def __str__(self) -> str:
        terms = [f"{c}*v{k}" for k, c in enumerate(self.coeffs) if c]
        return (" + ".join(terms) or "0") + (" > 0" if self.strict else " >= 0")


class Verdict(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class TraceStep:
    variable: int
    lower: int
    upper: int
    kept: int


@dataclass(frozen=True)
class FeasibilityResult:
    verdict: Verdict
    witness: tuple[Fraction, ...] | None
    trace: tuple[TraceStep, ...]
    order: tuple[int, ...]
    contradiction: tuple[LinearConstraint, LinearConstraint] | None = None

    @property
    def feasible(self) -> bool:
        return self.verdict is Verdict.FEASIBLE

    def __bool__(self) -> bool:
        return self.feasible


@dataclass
class _Row:
    c: LinearConstraint
    ancestors: int  # bitmask of the input rows this one combines


def _dedup(rows: list[_Row]) -> list[_Row]:
    # proportional rows collapse; a strict copy dominates a weak one, and
    # between equally strict copies the one with fewer ancestors is kept
    seen: dict[tuple, int] = {}
    out: list[_Row] = []
    for row in rows:
        norm = _Row(row.c.normalized(), row.ancestors)
        key = norm.c.coeffs
        if key in seen:
            k = seen[key]
            old = out[k]
            if (norm.c.strict, -norm.ancestors.bit_count()) > (old.c.strict, -old.ancestors.bit_count()):
                out[k] = norm
            continue
        seen[key] = len(out)
        out.append(norm)
    return out


def check_witness(constraints: Iterable[LinearConstraint], values: Sequence) -> bool:
    vals = [Fraction(v) for v in values]
    return all(c.holds(vals) for c in constraints)


def feasible(constraints: Sequence[LinearConstraint], nvars: int | None = None,
             order: Sequence[int] | None = None, offset=1) -> FeasibilityResult:
    """Decide feasibility by eliminating variables in ``order`` (default: last first).

    Derived rows built from more than k + 1 input rows after k eliminations
    are dropped (Chernikov's rule); they are nonnegative combinations of
    kept rows, strict ones included, so the projection is unchanged.

    On success the witness comes from back-substitution: midpoint of the
    tightest bounds when both exist, lower + offset or upper - offset when
    only one does, 0 when the variable is free.
    """
    constraints = list(constraints)
    if nvars is None:
        nvars = len(constraints[0].coeffs) if constraints else 0
    if any(len(c.coeffs) != nvars for c in constraints):
        raise ValueError("constraint width does not match nvars")
    order = tuple(reversed(range(nvars))) if order is None else tuple(order)
    if sorted(order) != list(range(nvars)):
        raise ValueError("order must be a permutation of the variables")
    offset = Fraction(offset)

    rows = [_Row(c, 1 << k) for k, c in enumerate(constraints)]
    bad = next((r for r in rows if r.c.is_trivial() and r.c.strict), None)
    if bad is not None:
        return FeasibilityResult(Verdict.INFEASIBLE, None, (), order, (bad.c, bad.c))
    rows = _dedup([r for r in rows if not r.c.is_trivial()])
    stages: list[tuple[int, list[_Row]]] = []
    trace: list[TraceStep] = []
    for step, v in enumerate(order, start=1):
        stages.append((v, rows))
        lower = [r for r in rows if r.c.coeffs[v] > 0]
        upper = [r for r in rows if r.c.coeffs[v] < 0]
        nxt = [r for r in rows if r.c.coeffs[v] == 0]
        for lo in lower:
            a = lo.c.coeffs[v]
            for up in upper:
                b = -up.c.coeffs[v]
                coeffs = tuple(b * x + a * y for x, y in zip(lo.c.coeffs, up.c.coeffs))
                combined = _Row(LinearConstraint(coeffs, lo.c.strict or up.c.strict),
                                lo.ancestors | up.ancestors)
                if combined.c.is_trivial():
                    if combined.c.strict:
                        trace.append(TraceStep(v, len(lower), len(upper), len(nxt)))
                        return FeasibilityResult(Verdict.INFEASIBLE, None, tuple(trace), order,
                                                 (lo.c, up.c))
                    continue
                if combined.ancestors.bit_count() <= step + 1:
                    nxt.append(combined)
        rows = _dedup(nxt)
        trace.append(TraceStep(v, len(lower), len(upper), len(rows)))

    values: list[Fraction | None] = [None] * nvars
    for v, stage_rows in reversed(stages):
        # strictness needs no bookkeeping: FM guarantees lo < up whenever a
        # strict bound is involved, so midpoint and +-offset stay inside
        lo_val, up_val = None, None
        for r in stage_rows:
            a = r.c.coeffs[v]
            if not a:
                continue
            rest = sum((c * values[k] for k, c in enumerate(r.c.coeffs) if c and k != v), ZERO)
            bound = -rest / a
            if a > 0:
                lo_val = bound if lo_val is None else max(lo_val, bound)
            else:
                up_val = bound if up_val is None else min(up_val, bound)
        if lo_val is not None and up_val is not None:
            values[v] = (lo_val + up_val) / 2
        elif lo_val is not None:
            values[v] = lo_val + offset
        elif up_val is not None:
            values[v] = up_val - offset
        else:
            values[v] = ZERO
    witness = tuple(values)
    if not check_witness(constraints, witness):
        raise AssertionError("Fourier-Motzkin witness fails the input constraints")
    return FeasibilityResult(Verdict.FEASIBLE, witness, tuple(trace), order)


def implies(constraints: Sequence[LinearConstraint], c: LinearConstraint, order: Sequence[int] | None = None) -> bool:
    """True iff every solution of ``constraints`` satisfies ``c``."""
    return not feasible(list(constraints) + [c.negated()], len(c.coeffs), order).feasible


# (n, r)-systems


def variable_names(params) -> list[str]:
    return [f"x{i}" for i in range(params.r, 0, -1)] + [f"y{j}" for j in range(1, params.s + 1)]


def variable_of_bit(params, bit: int) -> int:
    """Column of the symbol stored at string bit ``bit``."""
    return params.r - 1 - bit if bit < params.r else bit


def chain_constraints(params) -> list[LinearConstraint]:
    """x_r >= ... >= x_1 >= 0 > y_1 >= ... >= y_{n-r}."""
    n, r = params.n, params.r
    out = []

    def row(pairs, strict=False):
        coeffs = [ZERO] * n
        for k, c in pairs:
            coeffs[k] = Fraction(c)
        out.append(LinearConstraint(tuple(coeffs), strict))

    # x_{i+1} - x_i >= 0: columns r-1-i and r-i
    for i in range(1, r):
        row([(r - 1 - i, 1), (r - i, -1)])
    row([(r - 1, 1)])
    if params.s:
        row([(r, -1)], strict=True)
    for j in range(1, params.s):
        row([(r + j - 1, 1), (r + j, -1)])
    return out


def string_constraint(w, geq: bool) -> LinearConstraint:
    """sum over the symbols of w >= 0 (``geq``) or, negated, -sum > 0."""
    p = w.params
    coeffs = [ZERO] * p.n
    m, bit = w.mask, 0
    while m:
        if m & 1:
            coeffs[variable_of_bit(p, bit)] = Fraction(1 if geq else -1)
        m >>= 1
        bit += 1
    return LinearConstraint(tuple(coeffs), not geq)


def to_linear(system) -> list[LinearConstraint]:
    """Chain constraints followed by one 0/1 row per system row."""
    from .systems import Relation
    out = chain_constraints(system.params)
    for w in system.ordered_strings():
        out.append(string_constraint(w, system.rows[w] is Relation.GEQ0))
    return out
