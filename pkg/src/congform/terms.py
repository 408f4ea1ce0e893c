"""Terms, equations, and quasi-equations over an operation signature.

Equational satisfaction is decided by brute force over all assignments
of carrier elements to variables; witnesses report the first failing
assignment in lexicographic scan order.  The axiom lists for the three
supported variety tags (groups, commutative rngs, quandles) live here,
together with the membership predicates used by reflection oracles
(commutativity, reduced-ness, triviality).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import CheckResult, PASSED, UnknownOp, failed


@dataclass(frozen=True)
class Term:
    """Either a variable (``var`` set) or an operation applied to subterms."""

    var: Optional[int] = None
    op: Optional[str] = None
    args: tuple["Term", ...] = ()

    def __post_init__(self):
        if (self.var is None) == (self.op is None):
            raise ValueError("a term is either a variable or an application")
        if self.var is not None and self.var < 0:
            raise ValueError("variable indices are nonnegative")

    def variables(self) -> frozenset[int]:
        if self.var is not None:
            return frozenset((self.var,))
        out: frozenset[int] = frozenset()
        for a in self.args:
            out |= a.variables()
        return out

    def __repr__(self):
        if self.var is not None:
            return f"x{self.var}"
        return f"{self.op}({', '.join(map(repr, self.args))})"


def var(i: int) -> Term:
    return Term(var=i)


def app(op: str, *args: Term) -> Term:
    return Term(op=op, args=tuple(args))


def eval_term(t: Term, assignment, algebra) -> int:
    """Value of ``t`` in ``algebra`` with variable i bound to assignment[i]."""
    if t.var is not None:
        return assignment[t.var]
    return algebra.op(t.op, *(eval_term(a, assignment, algebra) for a in t.args))


def _check_ops_known(terms: Iterable[Term], algebra) -> None:
    known = {name for name, _ in algebra.sig.ops}
    arities = dict(algebra.sig.ops)
    stack = list(terms)
    while stack:
        t = stack.pop()
        if t.op is not None:
            if t.op not in known:
                raise UnknownOp(f"operation {t.op!r} not in signature")
            if arities[t.op] != len(t.args):
                raise UnknownOp(
                    f"operation {t.op!r} applied to {len(t.args)} arguments, "
                    f"arity is {arities[t.op]}"
                )
            stack.extend(t.args)


def _contiguous(vars_: frozenset[int]) -> bool:
    return vars_ == frozenset(range(len(vars_)))


@dataclass(frozen=True)
class Equation:
    """lhs = rhs, universally quantified over all variable assignments."""

    lhs: Term
    rhs: Term
    label: Optional[str] = None

    def __post_init__(self):
        if not _contiguous(self.variables()):
            raise ValueError("variable indices must be contiguous from 0")

    def variables(self) -> frozenset[int]:
        return self.lhs.variables() | self.rhs.variables()

    def __repr__(self):
        return self.label or f"{self.lhs!r} = {self.rhs!r}"


@dataclass(frozen=True)
class QuasiEquation:
    """premises => conclusion, per assignment."""

    premises: tuple[Equation, ...]
    conclusion: Equation
    label: Optional[str] = None

    def __post_init__(self):
        if not _contiguous(self.variables()):
            raise ValueError("variable indices must be contiguous from 0")

    def variables(self) -> frozenset[int]:
        out = self.conclusion.variables()
        for p in self.premises:
            out |= p.variables()
        return out

    def __repr__(self):
        if self.label:
            return self.label
        pre = " & ".join(map(repr, self.premises))
        return f"{pre} => {self.conclusion!r}" if pre else f"=> {self.conclusion!r}"


def _holds(eq: Equation, assignment, algebra) -> bool:
    return eval_term(eq.lhs, assignment, algebra) == eval_term(eq.rhs, assignment, algebra)


def satisfies_equations(algebra, eqs: Iterable[Equation]) -> CheckResult:
    """True iff every assignment satisfies every equation.

    On failure the witness carries the first failing equation and
    assignment in scan order (equations in given order, assignments
    lexicographic).
    """
    eqs = tuple(eqs)
    _check_ops_known([e.lhs for e in eqs] + [e.rhs for e in eqs], algebra)
    n = algebra.size
    for eq in eqs:
        k = len(eq.variables())
        for assignment in itertools.product(range(n), repeat=k):
            if not _holds(eq, assignment, algebra):
                return failed(equation=repr(eq), assignment=list(assignment))
    return PASSED


def satisfies_quasiequations(algebra, qeqs: Iterable[QuasiEquation]) -> CheckResult:
    """Implication semantics per assignment; witness = first failure."""
    qeqs = tuple(qeqs)
    terms = []
    for q in qeqs:
        for p in (*q.premises, q.conclusion):
            terms.extend((p.lhs, p.rhs))
    _check_ops_known(terms, algebra)
    n = algebra.size
    for q in qeqs:
        k = len(q.variables())
        for assignment in itertools.product(range(n), repeat=k):
            if all(_holds(p, assignment, algebra) for p in q.premises):
                if not _holds(q.conclusion, assignment, algebra):
                    return failed(quasiequation=repr(q), assignment=list(assignment))
    return PASSED


# --- JSON form: {"var": i} | {"op": name, "args": [...]} ---------------------

def term_to_json(t: Term) -> dict:
    if t.var is not None:
        return {"var": t.var}
    return {"op": t.op, "args": [term_to_json(a) for a in t.args]}


def term_from_json(doc) -> Term:
    if not isinstance(doc, dict):
        raise ValueError(f"term must be an object, got {type(doc).__name__}")
    if "var" in doc:
        return var(int(doc["var"]))
    if "op" in doc:
        return app(str(doc["op"]), *(term_from_json(a) for a in doc.get("args", [])))
    raise ValueError("term object needs a 'var' or 'op' key")


# --- variety axioms ----------------------------------------------------------

_x, _y, _z = var(0), var(1), var(2)

GROUP_AXIOMS = (
    Equation(app("mul", app("mul", _x, _y), _z),
             app("mul", _x, app("mul", _y, _z)), label="(x·y)·z = x·(y·z)"),
    Equation(app("mul", _x, app("e")), _x, label="x·e = x"),
    Equation(app("mul", app("e"), _x), _x, label="e·x = x"),
    Equation(app("mul", _x, app("inv", _x)), app("e"), label="x·x⁻¹ = e"),
    Equation(app("mul", app("inv", _x), _x), app("e"), label="x⁻¹·x = e"),
)

COMMUTATIVE_RNG_AXIOMS = (
    Equation(app("add", app("add", _x, _y), _z),
             app("add", _x, app("add", _y, _z)), label="(x+y)+z = x+(y+z)"),
    Equation(app("add", _x, _y), app("add", _y, _x), label="x+y = y+x"),
    Equation(app("add", _x, app("zero")), _x, label="x+0 = x"),
    Equation(app("add", _x, app("neg", _x)), app("zero"), label="x+(−x) = 0"),
    Equation(app("mul", app("mul", _x, _y), _z),
             app("mul", _x, app("mul", _y, _z)), label="(x·y)·z = x·(y·z)"),
    Equation(app("mul", _x, _y), app("mul", _y, _x), label="x·y = y·x"),
    Equation(app("mul", _x, app("add", _y, _z)),
             app("add", app("mul", _x, _y), app("mul", _x, _z)),
             label="x·(y+z) = x·y + x·z"),
)

QUANDLE_AXIOMS = (
    Equation(app("lhd", _x, _x), _x, label="a ◁ a = a"),
    Equation(app("lhd_inv", app("lhd", _x, _y), _y), _x, label="(a ◁ b) ◁⁻¹ b = a"),
    Equation(app("lhd", app("lhd_inv", _x, _y), _y), _x, label="(a ◁⁻¹ b) ◁ b = a"),
    Equation(app("lhd", app("lhd", _x, _y), _z),
             app("lhd", app("lhd", _x, _z), app("lhd", _y, _z)),
             label="(a ◁ b) ◁ c = (a ◁ c) ◁ (b ◁ c)"),
)

# membership predicates used by reflection oracles
COMMUTATIVITY = (Equation(app("mul", _x, _y), app("mul", _y, _x), label="x·y = y·x"),)

ELEMENTARY_ABELIAN_2 = COMMUTATIVITY + (
    Equation(app("mul", _x, _x), app("e"), label="x·x = e"),
)

TRIVIAL_QUANDLE = (
    Equation(app("lhd", _x, _y), _x, label="a ◁ b = a"),
    Equation(app("lhd_inv", _x, _y), _x, label="a ◁⁻¹ b = a"),
)

REDUCED_RNG = (
    QuasiEquation(
        premises=(Equation(app("mul", _x, _x), app("zero")), ),
        conclusion=Equation(_x, app("zero")),
        label="x·x = 0 ⇒ x = 0",
    ),
)

ONE_ELEMENT = (Equation(_x, _y, label="x = y"),)
