"""ASTs for meadow terms and first-order formulas over them.

Terms cover the inversive notation (with a postfix inverse) and the
divisive notation (with binary division); mixed terms are allowed and
can be translated into either pure notation.
"""

from __future__ import annotations

from dataclasses import dataclass


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class One(Term):
    pass


@dataclass(frozen=True)
class NumLit(Term):
    value: int


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class Inv(Term):
    arg: Term


@dataclass(frozen=True)
class Div(Term):
    left: Term
    right: Term


ZERO = Zero()
ONE = One()


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Gt(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Lt(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


def free_vars(node) -> frozenset:
    """Free variable names of a term or formula."""
    if isinstance(node, (Zero, One, NumLit)):
        return frozenset()
    if isinstance(node, Var):
        return frozenset({node.name})
    if isinstance(node, (Add, Mul, Div)):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, (Neg, Inv, Not)):
        return free_vars(node.arg)
    if isinstance(node, (Eq, Gt, Lt, And, Or, Implies)):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, (Forall, Exists)):
        return free_vars(node.body) - {node.var}
    raise TypeError(f"not a term or formula: {node!r}")


def _contains(t: Term, kind) -> bool:
    if isinstance(t, kind):
        return True
    if isinstance(t, (Add, Mul, Div)):
        return _contains(t.left, kind) or _contains(t.right, kind)
    if isinstance(t, (Neg, Inv)):
        return _contains(t.arg, kind)
    return False


def is_inversive(t: Term) -> bool:
    """True iff the term is in pure inversive notation (no division)."""
    return not _contains(t, Div)


def is_divisive(t: Term) -> bool:
    """True iff the term is in pure divisive notation (no inverse)."""
    return not _contains(t, Inv)


def to_inversive(t: Term) -> Term:
    """Replace every division x/y by x * y^-1."""
    if isinstance(t, Div):
        return Mul(to_inversive(t.left), Inv(to_inversive(t.right)))
    if isinstance(t, Add):
        return Add(to_inversive(t.left), to_inversive(t.right))
    if isinstance(t, Mul):
        return Mul(to_inversive(t.left), to_inversive(t.right))
    if isinstance(t, Neg):
        return Neg(to_inversive(t.arg))
    if isinstance(t, Inv):
        return Inv(to_inversive(t.arg))
    return t


def to_divisive(t: Term) -> Term:
    """Replace every inverse x^-1 by 1/x."""
    if isinstance(t, Inv):
        return Div(ONE, to_divisive(t.arg))
    if isinstance(t, Add):
        return Add(to_divisive(t.left), to_divisive(t.right))
    if isinstance(t, Mul):
        return Mul(to_divisive(t.left), to_divisive(t.right))
    if isinstance(t, Neg):
        return Neg(to_divisive(t.arg))
    if isinstance(t, Div):
        return Div(to_divisive(t.left), to_divisive(t.right))
    return t
