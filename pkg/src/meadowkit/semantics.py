"""Evaluation of terms in total and punched structures.

A structure is a carrier plus a punching mode.  The total mode realizes
the Komori field (inverse and division totalized through 0).  The three
punched modes make selected applications undefined:

* ``PUNCH_INV0``        -- 0^-1 is undefined;
* ``PUNCH_DIV_ALL0``    -- q/0 is undefined for every q;
* ``PUNCH_DIV_NONZERO0`` -- q/0 is undefined for q != 0 (0/0 stays 0).

Undefinedness propagates strictly: a term with an undefined subterm is
undefined.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .carriers import Carrier, format_element
from .parser import parse_formula, parse_term
from .printer import print_formula, print_term
from .terms import (
    Add,
    And,
    Div,
    Eq,
    Gt,
    Implies,
    Inv,
    Lt,
    Mul,
    Neg,
    Not,
    NumLit,
    One,
    Or,
    Term,
    Var,
    Zero,
    free_vars,
)


class UnboundVariableError(LookupError):
    pass


class Mode(Enum):
    TOTAL = "total"
    PUNCH_INV0 = "punch-inv"
    PUNCH_DIV_ALL0 = "punch-div-all"
    PUNCH_DIV_NONZERO0 = "punch-div-nonzero"


@dataclass(frozen=True)
class StructureSpec:
    carrier: Carrier
    mode: Mode = Mode.TOTAL


class _UndefinedType:
    __slots__ = ()

    def __repr__(self):
        return "UNDEFINED"


#: Out-of-band marker for non-denoting terms; never a carrier element.
UNDEFINED = _UndefinedType()


def _lookup(env, name, carrier):
    try:
        value = env[name]
    except KeyError:
        raise UnboundVariableError(f"unbound variable {name!r}") from None
    return carrier.check(value)


def eval_total(t: Term, env, s: StructureSpec):
    """Evaluate a term in a total structure; never fails on zero."""
    if s.mode is not Mode.TOTAL:
        raise ValueError("eval_total requires a structure with total mode")
    c = s.carrier
    if isinstance(t, Zero):
        return c.from_int(0)
    if isinstance(t, One):
        return c.from_int(1)
    if isinstance(t, NumLit):
        return c.from_int(t.value)
    if isinstance(t, Var):
        return _lookup(env, t.name, c)
    if isinstance(t, Add):
        return c.add(eval_total(t.left, env, s), eval_total(t.right, env, s))
    if isinstance(t, Mul):
        return c.mul(eval_total(t.left, env, s), eval_total(t.right, env, s))
    if isinstance(t, Neg):
        return c.neg(eval_total(t.arg, env, s))
    if isinstance(t, Inv):
        return c.inv_total(eval_total(t.arg, env, s))
    if isinstance(t, Div):
        return c.div_total(eval_total(t.left, env, s), eval_total(t.right, env, s))
    raise TypeError(f"not a term: {t!r}")


def _eval_partial(t: Term, env, s: StructureSpec):
    """Returns (value-or-UNDEFINED, number of punched applications hit)."""
    c = s.carrier
    if isinstance(t, Zero):
        return c.from_int(0), 0
    if isinstance(t, One):
        return c.from_int(1), 0
    if isinstance(t, NumLit):
        return c.from_int(t.value), 0
    if isinstance(t, Var):
        return _lookup(env, t.name, c), 0
    if isinstance(t, (Add, Mul, Div)):
        a, na = _eval_partial(t.left, env, s)
        b, nb = _eval_partial(t.right, env, s)
        n = na + nb
        if a is UNDEFINED or b is UNDEFINED:
            return UNDEFINED, n
        if isinstance(t, Add):
            return c.add(a, b), n
        if isinstance(t, Mul):
            return c.mul(a, b), n
        if b == c.from_int(0):
            if s.mode is Mode.PUNCH_DIV_ALL0:
                return UNDEFINED, n + 1
            if s.mode is Mode.PUNCH_DIV_NONZERO0 and a != c.from_int(0):
                return UNDEFINED, n + 1
        return c.div_total(a, b), n
    if isinstance(t, Neg):
        a, n = _eval_partial(t.arg, env, s)
        if a is UNDEFINED:
            return UNDEFINED, n
        return c.neg(a), n
    if isinstance(t, Inv):
        a, n = _eval_partial(t.arg, env, s)
        if a is UNDEFINED:
            return UNDEFINED, n
        if s.mode is Mode.PUNCH_INV0 and a == c.from_int(0):
            return UNDEFINED, n + 1
        return c.inv_total(a), n
    raise TypeError(f"not a term: {t!r}")


def eval_partial(t: Term, env, s: StructureSpec):
    """Evaluate a term in a punched structure; UNDEFINED on punched hits."""
    return _eval_partial(t, env, s)[0]


def eval_partial_instrumented(t: Term, env, s: StructureSpec):
    """eval_partial plus the count of punched applications encountered."""
    return _eval_partial(t, env, s)


def classical_truth(f, env, s: StructureSpec) -> bool:
    """Two-valued truth of a quantifier-free formula in a total structure."""
    if isinstance(f, Eq):
        return eval_total(f.left, env, s) == eval_total(f.right, env, s)
    if isinstance(f, Gt):
        return eval_total(f.left, env, s) > eval_total(f.right, env, s)
    if isinstance(f, Lt):
        return eval_total(f.left, env, s) < eval_total(f.right, env, s)
    if isinstance(f, Not):
        return not classical_truth(f.arg, env, s)
    if isinstance(f, And):
        return classical_truth(f.left, env, s) and classical_truth(f.right, env, s)
    if isinstance(f, Or):
        return classical_truth(f.left, env, s) or classical_truth(f.right, env, s)
    if isinstance(f, Implies):
        return (not classical_truth(f.left, env, s)) or classical_truth(f.right, env, s)
    raise TypeError(f"not a quantifier-free formula: {f!r}")


@dataclass(frozen=True)
class Exhaustive:
    pass


@dataclass(frozen=True)
class RandomSample:
    count: int = 1000
    seed: int = 0


def random_rational(rng: random.Random) -> Fraction:
    """Uniform numerator and nonzero denominator in [-9999, 9999]."""
    num = rng.randint(-9999, 9999)
    den = 0
    while den == 0:
        den = rng.randint(-9999, 9999)
    return Fraction(num, den)


def _environments(names, s: StructureSpec, strategy):
    names = sorted(names)
    if isinstance(strategy, Exhaustive):
        if not s.carrier.enumerable:
            raise ValueError("exhaustive verification needs an enumerable carrier")
        for combo in itertools.product(s.carrier.elements(), repeat=len(names)):
            yield dict(zip(names, combo))
    elif isinstance(strategy, RandomSample):
        rng = random.Random(strategy.seed)
        for _ in range(strategy.count):
            yield {n: random_rational(rng) for n in names}
    else:
        raise TypeError(f"unknown strategy: {strategy!r}")


@dataclass(frozen=True)
class Check:
    """One equation (or disequation) to verify, optionally guarded."""

    lhs: Term
    rhs: Term
    guard: object = None  # quantifier-free Formula or None
    expect_equal: bool = True

    def describe(self) -> str:
        op = "=" if self.expect_equal else "!="
        eq = f"{print_term(self.lhs)} {op} {print_term(self.rhs)}"
        if self.guard is not None:
            return f"{print_formula(self.guard)} => {eq}"
        return eq


@dataclass(frozen=True)
class AxiomSpec:
    name: str
    checks: tuple

    def describe(self) -> str:
        return " ; ".join(c.describe() for c in self.checks)


@dataclass
class AxiomReport:
    name: str
    equation: str
    passed: bool
    samples: int
    witness: dict | None = None

    def format_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} axiom={self.equation} samples={self.samples}"
        if self.witness is not None:
            bindings = ",".join(
                f"{k}={format_element(v)}" for k, v in sorted(self.witness.items())
            )
            line += f" witness={bindings}"
        return line


def verify_axiom_spec(spec: AxiomSpec, s: StructureSpec, strategy) -> AxiomReport:
    if s.mode is not Mode.TOTAL:
        raise ValueError("axioms are verified in total structures")
    names = set()
    for check in spec.checks:
        names |= free_vars(check.lhs) | free_vars(check.rhs)
        if check.guard is not None:
            names |= free_vars(check.guard)
    samples = 0
    for env in _environments(names, s, strategy):
        samples += 1
        for check in spec.checks:
            if check.guard is not None and not classical_truth(check.guard, env, s):
                continue
            equal = eval_total(check.lhs, env, s) == eval_total(check.rhs, env, s)
            if equal != check.expect_equal:
                return AxiomReport(spec.name, spec.describe(), False, samples, dict(env))
    return AxiomReport(spec.name, spec.describe(), True, samples)


def verify_axiom(lhs: Term, rhs: Term, s: StructureSpec, strategy, guard=None) -> AxiomReport:
    """Verify lhs = rhs (optionally under a classical guard) in a total structure."""
    spec = AxiomSpec("axiom", (Check(lhs, rhs, guard),))
    return verify_axiom_spec(spec, s, strategy)


def _ax(name: str, *checks: str) -> AxiomSpec:
    parsed = []
    for text in checks:
        expect_equal = True
        guard = None
        if "=>" in text:
            guard_text, text = text.split("=>", 1)
            guard = parse_formula(guard_text.strip())
        if "!=" in text:
            lhs_text, rhs_text = text.split("!=")
            expect_equal = False
        else:
            lhs_text, rhs_text = text.split("=")
        parsed.append(
            Check(parse_term(lhs_text.strip()), parse_term(rhs_text.strip()), guard, expect_equal)
        )
    return AxiomSpec(name, tuple(parsed))


def axiom_catalog() -> list[AxiomSpec]:
    """The 15-law catalog: ring, inversive, divisive, separation, general laws."""
    return [
        _ax("add-assoc", "(x + y) + z = x + (y + z)"),
        _ax("add-comm", "x + y = y + x"),
        _ax("add-unit", "x + 0 = x"),
        _ax("add-inverse", "x + (-x) = 0"),
        _ax("mul-assoc", "(x*y)*z = x*(y*z)"),
        _ax("mul-comm", "x*y = y*x"),
        _ax("mul-unit", "x*1 = x"),
        _ax("distributivity", "x*(y + z) = x*y + x*z"),
        _ax("inv-involution", "(x^-1)^-1 = x"),
        _ax("inv-restricted", "x*(x*x^-1) = x"),
        _ax("div-reflection", "1/(1/x) = x"),
        _ax("div-restricted", "(x*x)/x = x"),
        _ax("div-as-inverse", "x/y = x*(1/y)"),
        _ax("separation", "0 != 1"),
        _ax(
            "general-inverse-division-law",
            "x != 0 => x*x^-1 = 1",
            "x != 0 => x/x = 1",
        ),
    ]
