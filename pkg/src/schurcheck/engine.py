"""The ``conjgte`` routine, as a plain port and as an instrumented run.

:func:`conjgte_run` is a line-for-line port of the C function::

    void conjgte (int A[MAX], int B[MAX]) {
      int i, partc = 1, edge = 0;
      while (A[partc] != 0) {
         edge = A[partc];
         do
              partc = partc + 1;
         while (A[partc] == edge);
         for (i = A[partc] + 1; i <= edge; i++)
              B[i] = partc - 1;
      }
    }

:func:`conjgte_instrumented` executes the same statements through a small
interpreter (:data:`CONJGTE`) whose loops carry their variant, invariants and
frame, and reports every annotation that fails instead of raising.

Annotation ids (stable, used in reports and by the CLI):

=========================  =======================================================================
``requires.is_partition``  ``A`` satisfies the partition predicate
``requires.b_zero``        ``B[k] == 0`` for ``1 <= k < max``
``assigns.frame``          each write ``B[i]`` has ``1 <= i <= A[1]``
``outer.variant``          ``max - partc`` non-negative and strictly decreasing
``outer.inv.bounds``       ``1 <= partc < max``
``outer.inv.conjugate``    ``countIfSup(A, max, k, B[k])`` for ``A[partc]+1 <= k <= A[1]``
``state.edge``             ``0 <= edge < max - 1``
``inner.variant``          ``max - partc`` non-negative and strictly decreasing
``inner.inv.ghost``        ``old_partc <= partc``
``inner.inv.flat``         ``A[k] == edge`` for ``old_partc <= k <= partc``
``inner.inv.bound``        ``partc < max - 1``
``assert.countifsup``      ``countIfSup(A, partc, edge, partc - 1)``
``for.variant``            ``edge - i`` non-negative and strictly decreasing
``for.inv.bounds``         ``A[partc]+1 <= i <= edge+1``
``for.inv.conjugate``      ``countIfSup(A, max, k, B[k])`` for ``A[partc]+1 <= k < i``
``for.assigns``            each write ``B[i]`` has ``A[partc]+1 <= i <= edge``
``ensures.is_conjugate``   ``countIfSup(A, max, k, B[k])`` for ``1 <= k < max``
``safety.index``           every array access stays in ``[1, max)``
``safety.overflow``        every arithmetic result fits a 32-bit ``int``
=========================  =======================================================================
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .errors import IndexOutOfRange, MaxMismatch, PreconditionViolated
from .partitions import (
    CountWitness,
    FixedPartitionSequence,
    Partition,
    column_counts,
    count_if_sup_exact,
    count_if_sup_literal,
    is_partition_pred,
)

INT_MIN = -(2**31)
INT_MAX = 2**31 - 1
_COMPARE = {"==": operator.eq, "!=": operator.ne, "<=": operator.le}


def _check_index(arr: FixedPartitionSequence, name: str, idx: int) -> None:
    if not 1 <= idx < arr.max:
        raise IndexOutOfRange(f"{name}[{idx}] outside [1, {arr.max})")


def conjgte_run(a: FixedPartitionSequence, b: FixedPartitionSequence) -> FixedPartitionSequence:
    """Compute the conjugate of ``a`` into a copy of ``b`` and return it.

    Both requires-clauses are enforced: ``a`` must be a partition and ``b``
    must be all zeros on ``1..max-1``.
    """
    if a.max != b.max:
        raise MaxMismatch(f"max {a.max} != {b.max}")
    if not is_partition_pred(a):
        raise PreconditionViolated("requires.is_partition", "A is not a partition")
    if any(b.cells[1:]):
        raise PreconditionViolated("requires.b_zero", "B is not zero-initialised")

    A = a.cells
    out = b.copy()
    B = out.cells
    partc, edge = 1, 0

    _check_index(a, "A", partc)
    while A[partc] != 0:
        edge = A[partc]
        while True:
            partc = partc + 1
            _check_index(a, "A", partc)
            if A[partc] != edge:
                break
        i = A[partc] + 1
        while i <= edge:
            _check_index(out, "B", i)
            B[i] = partc - 1
            i += 1
    return out


def descents(p: Partition) -> list[int]:
    """1-based indices ``i >= 2`` where ``parts[i] < parts[i-1]``."""
    return [i + 1 for i in range(1, len(p)) if p[i] < p[i - 1]]


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class Violation:
    id: str
    point: str
    bindings: dict
    message: str

    def to_dict(self) -> dict:
        return {"id": self.id, "point": self.point, "bindings": dict(self.bindings), "message": self.message}


@dataclass(frozen=True)
class ContractReport:
    """Outcome of one instrumented run.

    ``variant_traces["outer"]`` is a flat list (the outer loop runs once);
    ``"inner"`` and ``"for"`` hold one list per execution of that loop.
    Each recorded value is the variant at the start of an iteration.
    """

    violations: tuple[Violation, ...]
    variant_traces: dict
    writes: frozenset

    @property
    def passed(self) -> bool:
        return not self.violations

    def ids(self) -> set[str]:
        return {v.id for v in self.violations}

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [v.to_dict() for v in self.violations],
            "variants": {
                "outer": list(self.variant_traces["outer"]),
                "inner": [list(t) for t in self.variant_traces["inner"]],
                "for": [list(t) for t in self.variant_traces["for"]],
            },
            "writes": sorted(self.writes),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, d: dict) -> "ContractReport":
        violations = tuple(Violation(v["id"], v["point"], v["bindings"], v["message"]) for v in d["violations"])
        report = cls(violations, {k: d["variants"][k] for k in ("outer", "inner", "for")}, frozenset(d["writes"]))
        if report.passed != d["passed"]:
            raise ValueError("'passed' disagrees with the violation list")
        return report


# ---------------------------------------------------------------------------
# The statement language
#
# Expressions are evaluated against a ConjugateState; every arithmetic result
# is overflow-checked and every array access bounds-checked. A safety failure
# aborts the run with a ``safety.*`` violation.


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Load:
    array: str
    index: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '==', '!=', '<='
    left: "Expr"
    right: "Expr"


Expr = Union[Const, Var, Load, BinOp]


_COMPILED: dict = {}


def _compile(e: Expr) -> Callable[["_Run"], int]:
    """Turn an expression tree into a closure over a run (memoised per node)."""
    hit = _COMPILED.get(id(e))
    if hit is not None and hit[0] is e:
        return hit[1]
    if isinstance(e, Const):
        value = e.value

        def fn(run):
            return value

    elif isinstance(e, Var):
        name = e.name

        def fn(run):
            v = getattr(run.state, name)
            if v is None:
                run.abort("safety.uninitialised", f"read of uninitialised {name}")
            return v

    elif isinstance(e, Load):
        array, index = e.array, _compile(e.index)

        def fn(run):
            arr = getattr(run.state, array)
            idx = index(run)
            if not 1 <= idx < arr.max:
                run.abort("safety.index", f"{array.upper()}[{idx}] outside [1, {arr.max})")
            return arr.cells[idx]

    elif isinstance(e, BinOp):
        op, left, right = e.op, _compile(e.left), _compile(e.right)
        if op in ("+", "-"):
            sign = 1 if op == "+" else -1

            def fn(run):
                lv, rv = left(run), right(run)
                r = lv + sign * rv
                if not INT_MIN <= r <= INT_MAX:
                    run.abort("safety.overflow", f"{lv} {op} {rv} overflows int")
                return r

        elif op in _COMPARE:
            cmp = _COMPARE[op]

            def fn(run):
                return cmp(left(run), right(run))

        else:
            raise ValueError(f"unknown operator {op!r}")
    else:
        raise TypeError(f"not an expression: {e!r}")
    _COMPILED[id(e)] = (e, fn)
    return fn


@dataclass(frozen=True)
class Check:
    """A named annotation; ``fn`` returns None when it holds, else (message, extra bindings)."""

    id: str
    fn: Callable[["_Run"], Optional[tuple[str, dict]]]


@dataclass(frozen=True)
class LoopSpec:
    name: str
    variant: Expr
    invariants: tuple[Check, ...] = ()
    assigns: Optional[Callable[["_Run"], tuple[int, int]]] = None


@dataclass(frozen=True)
class Assign:
    name: str
    value: Expr


@dataclass(frozen=True)
class Store:
    array: str
    index: Expr
    value: Expr


@dataclass(frozen=True)
class Ghost:
    name: str
    value: Expr


@dataclass(frozen=True)
class Assert:
    check: Check


@dataclass(frozen=True)
class While:
    cond: Expr
    body: tuple
    spec: LoopSpec


@dataclass(frozen=True)
class DoWhile:
    body: tuple
    cond: Expr
    spec: LoopSpec


@dataclass(frozen=True)
class For:
    """``for (var = start; cond; var++) body``."""

    var: str
    start: Expr
    cond: Expr
    body: tuple
    spec: LoopSpec

    @property
    def step(self) -> Assign:
        step = self.__dict__.get("_step")
        if step is None:
            step = Assign(self.var, BinOp("+", Var(self.var), Const(1)))
            object.__setattr__(self, "_step", step)
        return step


@dataclass
class ConjugateState:
    a: FixedPartitionSequence
    b: FixedPartitionSequence
    partc: Optional[int] = None
    edge: Optional[int] = None
    i: Optional[int] = None
    old_partc: Optional[int] = None

    @property
    def MAX(self) -> int:
        return self.a.max

    def bindings(self) -> dict:
        return {k: getattr(self, k) for k in ("partc", "edge", "i", "old_partc") if getattr(self, k) is not None}


class _Abort(Exception):
    pass


class _Run:
    """Mutable bookkeeping for one instrumented execution."""

    def __init__(self, state: ConjugateState, literal: bool):
        self.state = state
        self.literal = literal
        self.counts = column_counts(state.a)
        self.a1 = state.a.cells[1]
        self.violations: list[Violation] = []
        self.writes: set[int] = set()
        self.traces = {"outer": [], "inner": [], "for": []}
        self.point = "entry"
        self.frames: list[LoopSpec] = []

    # -- annotation helpers --------------------------------------------------

    def count_matches(self, k: int, z: int) -> bool:
        """``countIfSup(A, max, k, z)`` under the configured semantics."""
        a = self.state.a
        if self.literal:
            return count_if_sup_literal(a, CountWitness(a.max, k, z))
        return 1 <= k < a.max and self.counts[k] == z

    def violate(self, id: str, message: str, extra: Optional[dict] = None) -> None:
        bindings = self.state.bindings()
        if extra:
            bindings.update(extra)
        self.violations.append(Violation(id, self.point, bindings, message))

    def check(self, c: Check) -> None:
        res = c.fn(self)
        if res is not None:
            self.violate(c.id, *res)

    def abort(self, id: str, message: str) -> None:
        self.violate(id, message)
        raise _Abort

    def eval(self, e: Expr):
        return _compile(e)(self)

    def exec_block(self, stmts) -> None:
        _compile_block(stmts)(self)


# Statements compile to closures over a run, like expressions. Loop semantics:
# invariants hold at every loop head, i.e. on entry and whenever the loop is
# about to (re)test its condition. The variant is sampled at the start of each
# iteration and must be >= 0 there and strictly smaller at its end.


def _compile_block(stmts) -> Callable[[_Run], None]:
    hit = _COMPILED.get(id(stmts))
    if hit is not None and hit[0] is stmts:
        return hit[1]
    fns = tuple(_compile_stmt(st) for st in stmts)

    def block(run):
        for f in fns:
            f(run)

    _COMPILED[id(stmts)] = (stmts, block)
    return block


def _compile_stmt(s) -> Callable[[_Run], None]:
    kind = type(s)
    if kind is Assign or kind is Ghost:
        name, value = s.name, _compile(s.value)

        def fn(run):
            setattr(run.state, name, value(run))

    elif kind is Store:
        fn = _compile_store(s)
    elif kind is Assert:
        check = s.check

        def fn(run):
            run.point = "assert"
            run.check(check)

    elif kind in (While, DoWhile, For):
        fn = _compile_loop(s)
    else:
        raise TypeError(f"unknown statement {s!r}")
    return fn


def _compile_store(s: Store) -> Callable[[_Run], None]:
    array, index, value = s.array, _compile(s.index), _compile(s.value)

    def fn(run):
        arr = getattr(run.state, array)
        idx = index(run)
        val = value(run)
        point = run.point
        run.point = f"{run.frames[-1].name}.body" if run.frames else "body"
        if not 1 <= idx < arr.max:
            run.abort("safety.index", f"{array.upper()}[{idx}] outside [1, {arr.max})")
        if not 1 <= idx <= run.a1:
            run.violate("assigns.frame", f"write to B[{idx}] outside B[1..{run.a1}]", {"index": idx})
        for spec in run.frames:
            if spec.assigns is not None:
                lo, hi = spec.assigns(run)
                if not lo <= idx <= hi:
                    run.violate(f"{spec.name}.assigns", f"write to B[{idx}] outside B[{lo}..{hi}]", {"index": idx})
        arr.cells[idx] = val
        run.writes.add(idx)
        run.point = point

    return fn


def _compile_loop(s) -> Callable[[_Run], None]:
    spec = s.spec
    name = spec.name
    head, test = f"{name}.head", f"{name}.test"
    variant = _compile(spec.variant)
    invariants = spec.invariants
    cond = _compile(s.cond)
    body = _compile_block(s.body)
    step = _compile_stmt(s.step) if type(s) is For else None

    def at_head(run):
        run.point = head
        for c in invariants:
            run.check(c)

    def iterate(run, trace):
        before = variant(run)
        trace.append(before)
        if before < 0:
            run.violate(f"{name}.variant", f"variant {before} is negative")
        run.frames.append(spec)
        body(run)
        run.frames.pop()
        if step is not None:
            step(run)
        after = variant(run)
        if not after < before:
            run.violate(f"{name}.variant", f"variant did not decrease: {before} -> {after}")

    if type(s) is While:

        def fn(run):
            trace = run.traces[name]
            while True:
                at_head(run)
                if not cond(run):
                    return
                iterate(run, trace)

    elif type(s) is DoWhile:
        # Heads are the entry and each successful condition test; the state
        # that leaves the loop is not a head (it may have partc == max-1).

        def fn(run):
            trace = []
            run.traces[name].append(trace)
            while True:
                at_head(run)
                iterate(run, trace)
                run.point = test
                if not cond(run):
                    return

    else:
        start, var = _compile(s.start), s.var

        def fn(run):
            trace = []
            run.traces[name].append(trace)
            setattr(run.state, var, start(run))
            while True:
                at_head(run)
                if not cond(run):
                    return
                iterate(run, trace)

    return fn


# ---------------------------------------------------------------------------
# The annotated program


def _outer_bounds(run):
    p = run.state.partc
    if not 1 <= p < run.state.a.max:
        return f"partc={p} outside [1, {run.state.a.max})", {}


def _edge_range(run):
    e = run.state.edge
    if not 0 <= e < run.state.a.max - 1:
        return f"edge={e} outside [0, {run.state.a.max - 1})", {}


def _partial_conjugate(lo_of, hi_of, what):
    def fn(run):
        st = run.state
        lo, hi = lo_of(run), hi_of(run)
        if lo is None or hi is None:
            return None
        for k in range(lo, hi + 1):
            if not 1 <= k < st.b.max:
                return f"{what}: B[{k}] outside [1, {st.b.max})", {"k": k}
            if not run.count_matches(k, st.b.cells[k]):
                return f"{what}: B[{k}]={st.b.cells[k]} is not the column count", {"k": k}
        return None

    return fn


def _a_at(run, idx):
    if idx is None or not 1 <= idx < run.state.a.max:
        return None
    return run.state.a.cells[idx]


def _outer_lo(run):
    v = _a_at(run, run.state.partc)
    return None if v is None else v + 1


def _for_hi(run):
    return run.state.i - 1


def _inner_ghost(run):
    st = run.state
    if not st.old_partc <= st.partc:
        return f"old_partc={st.old_partc} > partc={st.partc}", {}


def _inner_flat(run):
    st = run.state
    for k in range(st.old_partc, st.partc + 1):
        v = _a_at(run, k)
        if v != st.edge:
            return f"A[{k}]={v} differs from edge={st.edge}", {"k": k}


def _inner_bound(run):
    st = run.state
    if not st.partc < st.a.max - 1:
        return f"partc={st.partc} not < {st.a.max - 1}", {}


def _assert_countifsup(run):
    st = run.state
    a = st.a
    j, k, z = st.partc, st.edge, st.partc - 1
    if run.literal:
        ok = count_if_sup_literal(a, CountWitness(j, k, z))
    else:
        ok = 1 <= j <= a.max and 1 <= k < a.max and count_if_sup_exact(a, j, k) == z
    if not ok:
        return f"countIfSup(A, {j}, {k}, {z}) fails", {}


def _for_bounds(run):
    st = run.state
    lo = _outer_lo(run)
    if lo is None or not (st.i >= lo and st.edge + 1 >= st.i):
        return f"i={st.i} outside [A[partc]+1, edge+1]", {}


CONJGTE = (
    Assign("partc", Const(1)),
    Assign("edge", Const(0)),
    While(
        cond=BinOp("!=", Load("a", Var("partc")), Const(0)),
        body=(
            Assign("edge", Load("a", Var("partc"))),
            Ghost("old_partc", Var("partc")),
            DoWhile(
                body=(Assign("partc", BinOp("+", Var("partc"), Const(1))),),
                cond=BinOp("==", Load("a", Var("partc")), Var("edge")),
                spec=LoopSpec(
                    "inner",
                    variant=BinOp("-", Var("MAX"), Var("partc")),
                    invariants=(
                        Check("inner.inv.ghost", _inner_ghost),
                        Check("inner.inv.flat", _inner_flat),
                        Check("inner.inv.bound", _inner_bound),
                    ),
                ),
            ),
            Assert(Check("assert.countifsup", _assert_countifsup)),
            For(
                "i",
                start=BinOp("+", Load("a", Var("partc")), Const(1)),
                cond=BinOp("<=", Var("i"), Var("edge")),
                body=(Store("b", Var("i"), BinOp("-", Var("partc"), Const(1))),),
                spec=LoopSpec(
                    "for",
                    variant=BinOp("-", Var("edge"), Var("i")),
                    invariants=(
                        Check("for.inv.bounds", _for_bounds),
                        Check("for.inv.conjugate", _partial_conjugate(_outer_lo, _for_hi, "partial conjugate")),
                    ),
                    assigns=lambda run: (run.state.a.cells[run.state.partc] + 1, run.state.edge),
                ),
            ),
        ),
        spec=LoopSpec(
            "outer",
            variant=BinOp("-", Var("MAX"), Var("partc")),
            invariants=(
                Check("outer.inv.bounds", _outer_bounds),
                Check("state.edge", _edge_range),
                Check("outer.inv.conjugate", _partial_conjugate(_outer_lo, lambda run: run.a1, "partial conjugate")),
            ),
        ),
    ),
)


def conjgte_instrumented(
    a: FixedPartitionSequence,
    b: FixedPartitionSequence,
    check_precondition: bool = True,
    literal_countifsup: bool = False,
) -> tuple[FixedPartitionSequence, ContractReport]:
    """Run ``conjgte`` on a copy of ``b`` and check every annotation on the way.

    Violations are collected, not raised. A safety failure (out-of-range
    access, overflow) stops execution; anything else lets the run continue so
    later annotations are still evaluated. With ``literal_countifsup`` every
    use of the counting predicate goes through the weaker disjunctive form.
    """
    if a.max != b.max:
        raise MaxMismatch(f"max {a.max} != {b.max}")
    out = b.copy()
    a_before = list(a.cells)
    run = _Run(ConjugateState(a, out), literal_countifsup)

    if check_precondition:
        if not is_partition_pred(a):
            run.violate("requires.is_partition", "A does not satisfy is_partition")
        nonzero = [k for k in range(1, b.max) if b.cells[k] != 0]
        if nonzero:
            run.violate("requires.b_zero", f"B[{nonzero[0]}]={b.cells[nonzero[0]]} is not 0", {"k": nonzero[0]})

    try:
        run.exec_block(CONJGTE)
    except _Abort:
        pass
    else:
        run.point = "exit"
        if not literal_countifsup and not is_partition_pred(a):
            run.violate("ensures.is_conjugate", "A does not satisfy is_partition")
        if literal_countifsup:
            ok = all(run.count_matches(k, out.cells[k]) for k in range(1, out.max))
        else:
            ok = run.counts[1:] == out.cells[1:]
        if not ok:
            bad = next(k for k in range(1, out.max) if not run.count_matches(k, out.cells[k]))
            run.violate("ensures.is_conjugate", f"B[{bad}]={out.cells[bad]} is not the column count", {"k": bad})
    if a.cells != a_before:
        run.violate("assigns.frame", "A was modified")

    report = ContractReport(tuple(run.violations), run.traces, frozenset(run.writes))
    return out, report
