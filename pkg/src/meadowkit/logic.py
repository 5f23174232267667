"""Three-valued evaluation of formulas over partial structures.

The logic is configurable along three independent axes: the equality
kind (weak / strong / existential), the connective family (Bochvar /
Kleene / McCarthy left-sequential / McCarthy right-sequential), and the
quantifier family (Bochvar / Kleene).  The preset ``LPMD`` combines weak
equality, McCarthy's left-sequential connectives and Bochvar's
quantifiers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .semantics import UNDEFINED, StructureSpec, eval_partial
from .terms import (
    And,
    Eq,
    Exists,
    Forall,
    Gt,
    Implies,
    Lt,
    Not,
    Or,
    free_vars,
)


class TruthValue(Enum):
    T = "T"
    F = "F"
    U = "U"

    def __str__(self):
        return self.value


T, F, U = TruthValue.T, TruthValue.F, TruthValue.U


class EqualityKind(Enum):
    WEAK = "weak"
    STRONG = "strong"
    EXISTENTIAL = "existential"


class ConnectiveFamily(Enum):
    BOCHVAR = "bochvar"
    KLEENE = "kleene"
    MCCARTHY_LEFT = "mccarthy-left"
    MCCARTHY_RIGHT = "mccarthy-right"


class QuantifierFamily(Enum):
    BOCHVAR = "bochvar"
    KLEENE = "kleene"


@dataclass(frozen=True)
class LogicConfig:
    equality: EqualityKind
    connectives: ConnectiveFamily
    quantifiers: QuantifierFamily


#: Logic of partial meadows: weak equality, McCarthy connectives,
#: Bochvar quantifiers.
LPMD = LogicConfig(
    EqualityKind.WEAK, ConnectiveFamily.MCCARTHY_LEFT, QuantifierFamily.BOCHVAR
)


def parse_logic_config(text: str) -> LogicConfig:
    """Parse `<equality>,<connectives>,<quantifiers>` or the alias `lpmd`."""
    if text.strip().lower() == "lpmd":
        return LPMD
    parts = [p.strip().lower() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated selectors, got {text!r}")
    return LogicConfig(
        EqualityKind(parts[0]), ConnectiveFamily(parts[1]), QuantifierFamily(parts[2])
    )


def not_tv(a: TruthValue) -> TruthValue:
    if a is T:
        return F
    if a is F:
        return T
    return U


def _classical_or(a, b):
    return T if (a is T or b is T) else F


def _classical_and(a, b):
    return T if (a is T and b is T) else F


_KLEENE_RANK = {F: 0, U: 1, T: 2}
_KLEENE_BY_RANK = {0: F, 1: U, 2: T}


def or_tv(family: ConnectiveFamily, a: TruthValue, b: TruthValue) -> TruthValue:
    if family is ConnectiveFamily.BOCHVAR:
        if a is U or b is U:
            return U
        return _classical_or(a, b)
    if family is ConnectiveFamily.KLEENE:
        return _KLEENE_BY_RANK[max(_KLEENE_RANK[a], _KLEENE_RANK[b])]
    if family is ConnectiveFamily.MCCARTHY_LEFT:
        if a is T:
            return T
        if a is U:
            return U
        return b
    return or_tv(ConnectiveFamily.MCCARTHY_LEFT, b, a)


def and_tv(family: ConnectiveFamily, a: TruthValue, b: TruthValue) -> TruthValue:
    if family is ConnectiveFamily.BOCHVAR:
        if a is U or b is U:
            return U
        return _classical_and(a, b)
    if family is ConnectiveFamily.KLEENE:
        return _KLEENE_BY_RANK[min(_KLEENE_RANK[a], _KLEENE_RANK[b])]
    if family is ConnectiveFamily.MCCARTHY_LEFT:
        if a is F:
            return F
        if a is U:
            return U
        return b
    return and_tv(ConnectiveFamily.MCCARTHY_LEFT, b, a)


def implies_tv(family: ConnectiveFamily, a: TruthValue, b: TruthValue) -> TruthValue:
    # a => b is read as (!a) | b within the family.
    return or_tv(family, not_tv(a), b)


def connective_table(family: ConnectiveFamily) -> dict:
    """Full truth tables of a family: 'not', 'and', 'or', 'implies'."""
    values = (T, F, U)
    return {
        "not": {a: not_tv(a) for a in values},
        "and": {(a, b): and_tv(family, a, b) for a in values for b in values},
        "or": {(a, b): or_tv(family, a, b) for a in values for b in values},
        "implies": {(a, b): implies_tv(family, a, b) for a in values for b in values},
    }


def _nondenoting_verdict(kind: EqualityKind, left_undef: bool, right_undef: bool):
    if kind is EqualityKind.WEAK:
        return U
    if kind is EqualityKind.STRONG:
        return T if (left_undef and right_undef) else F
    return F


def eval_equality(t, u, kind: EqualityKind, env, s: StructureSpec) -> TruthValue:
    """Truth value of t = u under the given equality kind."""
    a = eval_partial(t, env, s)
    b = eval_partial(u, env, s)
    if a is not UNDEFINED and b is not UNDEFINED:
        return T if a == b else F
    return _nondenoting_verdict(kind, a is UNDEFINED, b is UNDEFINED)


def _eval_ordering(f, env, s: StructureSpec, kind: EqualityKind) -> TruthValue:
    a = eval_partial(f.left, env, s)
    b = eval_partial(f.right, env, s)
    if a is UNDEFINED or b is UNDEFINED:
        # Ordering atoms with a non-denoting side follow the equality
        # kind's policy, with strong collapsing to false.
        return U if kind is EqualityKind.WEAK else F
    holds = a > b if isinstance(f, Gt) else a < b
    return T if holds else F


class NonEnumerableCarrierError(ValueError):
    pass


def eval_formula(f, cfg: LogicConfig, env, s: StructureSpec) -> TruthValue:
    if isinstance(f, Eq):
        return eval_equality(f.left, f.right, cfg.equality, env, s)
    if isinstance(f, (Gt, Lt)):
        return _eval_ordering(f, env, s, cfg.equality)
    if isinstance(f, Not):
        return not_tv(eval_formula(f.arg, cfg, env, s))
    if isinstance(f, And):
        return and_tv(
            cfg.connectives,
            eval_formula(f.left, cfg, env, s),
            eval_formula(f.right, cfg, env, s),
        )
    if isinstance(f, Or):
        return or_tv(
            cfg.connectives,
            eval_formula(f.left, cfg, env, s),
            eval_formula(f.right, cfg, env, s),
        )
    if isinstance(f, Implies):
        return implies_tv(
            cfg.connectives,
            eval_formula(f.left, cfg, env, s),
            eval_formula(f.right, cfg, env, s),
        )
    if isinstance(f, (Forall, Exists)):
        if not s.carrier.enumerable:
            raise NonEnumerableCarrierError(
                f"quantifier over non-enumerable carrier {s.carrier}"
            )
        instances = []
        for value in s.carrier.elements():
            inner = dict(env)
            inner[f.var] = value
            instances.append(eval_formula(f.body, cfg, inner, s))
        return _fold_quantifier(cfg.quantifiers, isinstance(f, Forall), instances)
    raise TypeError(f"not a formula: {f!r}")


def _fold_quantifier(family: QuantifierFamily, universal: bool, instances) -> TruthValue:
    if family is QuantifierFamily.BOCHVAR:
        if any(v is U for v in instances):
            return U
        if universal:
            return T if all(v is T for v in instances) else F
        return T if any(v is T for v in instances) else F
    op = and_tv if universal else or_tv
    result = T if universal else F
    for v in instances:
        result = op(ConnectiveFamily.KLEENE, result, v)
    return result


@dataclass(frozen=True)
class SentenceVerdict:
    usable: bool
    value: TruthValue | None

    def __str__(self):
        return f"USABLE({self.value})" if self.usable else "UNUSABLE"


def classify_sentence(f, cfg: LogicConfig, s: StructureSpec) -> SentenceVerdict:
    """Two-valued logic convention: a sentence is unusable when its value is U."""
    if free_vars(f):
        raise ValueError("classify_sentence needs a closed formula")
    tv = eval_formula(f, cfg, {}, s)
    if tv is U:
        return SentenceVerdict(False, None)
    return SentenceVerdict(True, tv)
