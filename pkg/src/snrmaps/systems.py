"""(n, r)-systems of subset-sum inequalities and their boolean-map counterparts."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Mapping

from .cores import fundamental_core
from .errors import CapExceeded, Incompatible, InvalidSystem, NotInBnr, NotWeighted, ParseError
from .feasibility import (FeasibilityResult, check_witness, feasible, implies, string_constraint,
                          to_linear, variable_names)
from .maps import MapFamily, PartialMap, Sign, classify, parse_header
from .snr import SnrLattice, SnrParams, SnrString, build_lattice, fixed_strings, format_string, parse_string
from .weights import WeightFunction

GENERATIVE_MAX_N = 12


class Relation(enum.Enum):
    GEQ0 = ">="
    LT0 = "<"

    @property
    def sign(self) -> Sign:
        return Sign.P if self is Relation.GEQ0 else Sign.N

    @classmethod
    def of_sign(cls, s: Sign) -> "Relation":
        return cls.GEQ0 if s == Sign.P else cls.LT0


def is_admissible(w: SnrString) -> bool:
    """Rows may use any string except the empty one and the singletons."""
    return w.mask.bit_count() >= 2


def admissible_strings(params: SnrParams) -> Iterator[SnrString]:
    for m in range(params.size):
        if m.bit_count() >= 2:
            yield SnrString(params, m)


@dataclass(frozen=True)
class NrSystem:
    """Rows keyed by string; the chain x_r >= ... >= x_1 >= 0 > y_1 >= ... is implicit."""

    params: SnrParams
    rows: Mapping[SnrString, Relation] = field(hash=False)

    def __post_init__(self):
        frozen = dict(self.rows)
        for w, rel in frozen.items():
            if w.params != self.params:
                raise InvalidSystem(f"row {w} belongs to S({w.params.n},{w.params.r})")
            if not is_admissible(w):
                raise InvalidSystem(f"row {w} is the empty string or a singleton")
            if not isinstance(rel, Relation):
                raise InvalidSystem(f"row {w} has relation {rel!r}")
        object.__setattr__(self, "rows", frozen)

    @classmethod
    def from_rows(cls, params: SnrParams, rows) -> "NrSystem":
        """Rows as (string-or-text, relation) pairs; a repeated string is rejected."""
        out: dict[SnrString, Relation] = {}
        for w, rel in rows:
            if isinstance(w, str):
                w = parse_string(w, params)
            if isinstance(rel, str):
                rel = Relation(rel)
            if w in out:
                raise InvalidSystem(f"string {w} appears in two rows")
            out[w] = rel
        return cls(params, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, NrSystem) and self.params == other.params and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.params, frozenset(self.rows.items())))

    def __len__(self) -> int:
        return len(self.rows)

    def ordered_strings(self) -> list[SnrString]:
        return sorted(self.rows, key=format_string)

    def with_row(self, w: SnrString, rel: Relation) -> "NrSystem":
        rows = dict(self.rows)
        rows[w] = rel
        return NrSystem(self.params, rows)

    def describe(self) -> str:
        """Human-readable inequalities in x/y variables."""
        lines = [" >= ".join(f"x{i}" for i in range(self.params.r, 0, -1)) + " >= 0"
                 + ("".join(" > y1" if j == 1 else f" >= y{j}" for j in range(1, self.params.s + 1)))]
        for w in self.ordered_strings():
            terms = [f"x{i}" for i in w.left] + [f"y{j}" for j in w.right]
            lines.append(" + ".join(terms) + (" >= 0" if self.rows[w] is Relation.GEQ0 else " < 0"))
        return "\n".join(lines)


@dataclass(frozen=True)
class SystemClass:
    system: NrSystem = field(repr=False)
    total: bool
    weighted_positive: bool
    weighted_negative: bool

    @cached_property
    def compatible(self) -> bool:
        return compatible(self.system).feasible


def _lattice_for(params: SnrParams, lattice: SnrLattice | None) -> SnrLattice:
    if lattice is None:
        return build_lattice(params)
    if lattice.params != params:
        raise ValueError("lattice does not match the system parameters")
    return lattice


def chi(s: NrSystem, lattice: SnrLattice | None = None) -> PartialMap:
    """Rows become signs; xi strings are P and eta strings are N."""
    lattice = _lattice_for(s.params, lattice)
    pos, neg = 0, 0
    for w, rel in s.rows.items():
        if rel is Relation.GEQ0:
            pos |= 1 << w.mask
        else:
            neg |= 1 << w.mask
    xis, etas = fixed_strings(s.params)
    for w in xis:
        pos |= 1 << w.mask
    for w in etas:
        neg |= 1 << w.mask
    return PartialMap(lattice, pos, neg)


def tau(a: PartialMap, require_fixed: bool = False) -> NrSystem:
    """One row per domain string other than the xi and eta strings.

    xi/eta strings present in the domain must carry the fixed signs (P for
    xi, N for eta). Missing ones are tolerated unless ``require_fixed``,
    since the chain constraints already imply their signs; this is what
    lets a core be turned into its subsystem.
    """
    lattice = a.space
    if not isinstance(lattice, SnrLattice):
        raise TypeError("tau needs a map on S(n, r)")
    params = lattice.params
    xis, etas = fixed_strings(params)
    for group, want in ((xis, Sign.P), (etas, Sign.N)):
        for w in group:
            got = a.sign(w.mask)
            if got is None and require_fixed:
                raise NotInBnr(f"{w} is not in the domain")
            if got is not None and got != want:
                raise NotInBnr(f"{w} must be {want}, map says {got}")
    rows = {}
    for x, s in a.items():
        w = lattice.string(x)
        if is_admissible(w):
            rows[w] = Relation.of_sign(s)
    return NrSystem(params, rows)


def subsystem_leq(s: NrSystem, t: NrSystem) -> bool:
    return s.params == t.params and all(t.rows.get(w) is rel for w, rel in s.rows.items())


def classify_system(s: NrSystem) -> SystemClass:
    full = s.params.full_mask
    total = len(s.rows) == s.params.size - (s.params.n + 1)
    rel = s.rows.get(SnrString(s.params, full)) if s.params.n >= 2 else None
    return SystemClass(s, total, rel is Relation.GEQ0, rel is Relation.LT0)


def weight_function_of(params: SnrParams, witness) -> WeightFunction:
    """Read a column-ordered witness (x_r..x_1, y_1..y_{n-r}) as f."""
    r = params.r
    tilde = tuple(witness[r - i] for i in range(1, r + 1))
    bar = tuple(witness[r + j - 1] for j in range(1, params.s + 1))
    return WeightFunction(params, tilde, bar)


def witness_of(f: WeightFunction) -> tuple[Fraction, ...]:
    return tuple(f.tilde[::-1]) + tuple(f.bar)


@dataclass(frozen=True)
class Compatibility:
    result: FeasibilityResult
    solution: WeightFunction | None

    @property
    def feasible(self) -> bool:
        return self.result.feasible

    def __bool__(self) -> bool:
        return self.feasible


def compatible(s: NrSystem, order=None, offset=1) -> Compatibility:
    res = feasible(to_linear(s), s.params.n, order, offset)
    sol = weight_function_of(s.params, res.witness) if res.feasible else None
    return Compatibility(res, sol)


def is_solution_witness(s: NrSystem, f: WeightFunction) -> bool:
    """Check f against the linear form of the system (chain included)."""
    return check_witness(to_linear(s), witness_of(f))


def equivalent(s: NrSystem, t: NrSystem) -> bool:
    """Same solution set: each system implies every row of the other."""
    if s.params != t.params:
        return False
    for sys_ in (s, t):
        if not compatible(sys_):
            raise Incompatible("equivalence is only defined between compatible systems")
    ls, lt = to_linear(s), to_linear(t)
    return all(implies(ls, c) for c in lt) and all(implies(lt, c) for c in ls)


@dataclass(frozen=True)
class Generativity:
    generative: bool
    total: NrSystem | None = None
    witness: SnrString | None = None


def is_generative(s: NrSystem, max_n: int = GENERATIVE_MAX_N) -> Generativity:
    """Does s fix the sign of every admissible string?

    Returns the generated total system, or the first string whose sign s
    leaves open.
    """
    if s.params.n > max_n:
        raise CapExceeded(f"n={s.params.n} exceeds generativity cap {max_n}")
    base = to_linear(s)
    if not feasible(base, s.params.n):
        raise Incompatible("system has no solution")
    rows = dict(s.rows)
    for w in admissible_strings(s.params):
        if w in rows:
            continue
        can_pos = feasible(base + [string_constraint(w, True)], s.params.n).feasible
        can_neg = feasible(base + [string_constraint(w, False)], s.params.n).feasible
        if can_pos and can_neg:
            return Generativity(False, witness=w)
        rows[w] = Relation.GEQ0 if can_pos else Relation.LT0
    return Generativity(True, total=NrSystem(s.params, rows))


@dataclass(frozen=True)
class LocalCriterionReport:
    core: PartialMap
    core_feasible: bool
    total_feasible: bool
    core_solution: WeightFunction | None
    solution_lifts: bool | None

    @property
    def agrees(self) -> bool:
        return self.core_feasible == self.total_feasible


def core_system(a: PartialMap, plus: bool) -> NrSystem:
    """tau of the fundamental core, plus the weighted full-string row.

    The local criteria are about weight functions of a's class, so the
    full-string row (>= 0 for W+, < 0 for W-) is always part of the core
    system even when the full string is not in the core itself.
    """
    core = fundamental_core(a, plus).core
    s = tau(core)
    full = SnrString(s.params, s.params.full_mask)
    if is_admissible(full):
        s = s.with_row(full, Relation.GEQ0 if plus else Relation.LT0)
    return s


def _local_check(a: PartialMap, plus: bool) -> LocalCriterionReport:
    family = MapFamily.W_PLUS_NR if plus else MapFamily.W_MINUS_NR
    if not classify(a, family):
        raise NotWeighted(f"map is not in {family.name}")
    core = fundamental_core(a, plus).core
    s_core, s_total = core_system(a, plus), tau(a)
    c_core = compatible(s_core)
    c_total = compatible(s_total)
    lifts = None
    if c_core.feasible:
        lifts = is_solution_witness(s_total, c_core.solution)
    return LocalCriterionReport(core, c_core.feasible, c_total.feasible, c_core.solution, lifts)


def plc_check(a: PartialMap) -> LocalCriterionReport:
    return _local_check(a, True)


def nlc_check(a: PartialMap) -> LocalCriterionReport:
    return _local_check(a, False)


# text format: "snr n r", then ">= <string>" / "< <string>"


def format_system(s: NrSystem) -> str:
    lines = [f"snr {s.params.n} {s.params.r}"]
    lines += [f"{s.rows[w].value} {format_string(w)}" for w in s.ordered_strings()]
    return "\n".join(lines) + "\n"


def parse_system(text: str) -> NrSystem:
    from .maps import _content_lines
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty system file", 0)
    params = parse_header(lines[0][1], lines[0][0])
    rows = []
    for k, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or parts[0] not in (">=", "<"):
            raise ParseError(f"line {k}: expected '>= <string>' or '< <string>'", 0)
        try:
            rows.append((parse_string(parts[1], params), Relation(parts[0])))
        except ParseError as exc:
            raise ParseError(f"line {k}: {exc}", exc.position) from None
    return NrSystem.from_rows(params, rows)


def assignment_json(params: SnrParams, witness) -> dict[str, str]:
    return {name: str(v) for name, v in zip(variable_names(params), witness)}
