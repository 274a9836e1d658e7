"""Two-sorted language of deontic action logic.

Terms come in two sorts: action terms (a lattice/Boolean vocabulary over
basic action symbols) and formula terms (propositional connectives plus the
deontic atoms perm/forb and action equality).  The concrete syntax is
line-oriented and whitespace-insensitive; '#' starts a comment.

Operator precedence, tightest to loosest:

    actions:   ~   *   +   ~>
    formulas:  !   &   |   ->  <->

'->' and '~>' associate to the right, the remaining binary operators to the
left.  ``obl(t)`` is an abbreviation for ``forb(~t)`` and never appears in the
AST.  Under classical variants '->' and '<->' are sugar and are expanded by
the parser; under DAL_IPL / DAL_INT implication is a primitive connective
(and '<->' still expands to a conjunction of implications).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, fields
from enum import Enum


class LogicVariant(Enum):
    DAL = "dal"
    NDAL1 = "ndal1"
    NDAL2 = "ndal2"
    NDAL3 = "ndal3"
    NDAL4 = "ndal4"
    NDAL5 = "ndal5"
    DAL_PROP = "dal_prop"
    DAL_IPL = "dal_ipl"
    DAL_IAL = "dal_ial"
    DAL_INT = "dal_int"

    @property
    def allows_props(self) -> bool:
        return self in _PROP_VARIANTS

    @property
    def primitive_impl(self) -> bool:
        """Formula implication is a primitive connective (not sugar)."""
        return self in (LogicVariant.DAL_IPL, LogicVariant.DAL_INT)

    @property
    def allows_aimpl(self) -> bool:
        """Action implication '~>' is part of the action vocabulary."""
        return self in (LogicVariant.DAL_IAL, LogicVariant.DAL_INT)

    @property
    def requires_alphabet(self) -> bool:
        """Variant needs a declared finite basic-action alphabet."""
        return self in (LogicVariant.NDAL2, LogicVariant.NDAL3,
                        LogicVariant.NDAL4, LogicVariant.NDAL5)

    @property
    def action_boolean(self) -> bool:
        """Action algebras are Boolean (else Heyting)."""
        return self not in (LogicVariant.DAL_IAL, LogicVariant.DAL_INT)

    @property
    def formula_boolean(self) -> bool:
        """Formula algebras are Boolean (else Heyting)."""
        return self not in (LogicVariant.DAL_IPL, LogicVariant.DAL_INT)


_PROP_VARIANTS = (LogicVariant.DAL_PROP, LogicVariant.DAL_IPL,
                  LogicVariant.DAL_IAL, LogicVariant.DAL_INT)

_NDAL_VARIANTS = (LogicVariant.NDAL1, LogicVariant.NDAL2, LogicVariant.NDAL3,
                  LogicVariant.NDAL4, LogicVariant.NDAL5)


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

class ActionTerm:
    """Base class of action-sorted terms."""


class FormulaTerm:
    """Base class of formula-sorted terms."""


@dataclass(frozen=True)
class Basic(ActionTerm):
    name: str


@dataclass(frozen=True)
class Zero(ActionTerm):
    pass


@dataclass(frozen=True)
class One(ActionTerm):
    pass


@dataclass(frozen=True)
class Union(ActionTerm):
    left: ActionTerm
    right: ActionTerm


@dataclass(frozen=True)
class Inter(ActionTerm):
    left: ActionTerm
    right: ActionTerm


@dataclass(frozen=True)
class Compl(ActionTerm):
    arg: ActionTerm


@dataclass(frozen=True)
class AImpl(ActionTerm):
    """Action implication (relative pseudocomplement), written '~>'."""
    left: ActionTerm
    right: ActionTerm


@dataclass(frozen=True)
class AVar(ActionTerm):
    """Action metavariable; only occurs in axiom schemas."""
    name: str


@dataclass(frozen=True)
class Eq(FormulaTerm):
    left: ActionTerm
    right: ActionTerm


@dataclass(frozen=True)
class Perm(FormulaTerm):
    arg: ActionTerm


@dataclass(frozen=True)
class Forb(FormulaTerm):
    arg: ActionTerm


@dataclass(frozen=True)
class Prop(FormulaTerm):
    name: str


@dataclass(frozen=True)
class Or(FormulaTerm):
    left: FormulaTerm
    right: FormulaTerm


@dataclass(frozen=True)
class And(FormulaTerm):
    left: FormulaTerm
    right: FormulaTerm


@dataclass(frozen=True)
class Not(FormulaTerm):
    arg: FormulaTerm


@dataclass(frozen=True)
class Impl(FormulaTerm):
    left: FormulaTerm
    right: FormulaTerm


@dataclass(frozen=True)
class Iff(FormulaTerm):
    left: FormulaTerm
    right: FormulaTerm


@dataclass(frozen=True)
class Bot(FormulaTerm):
    pass


@dataclass(frozen=True)
class Top(FormulaTerm):
    pass


@dataclass(frozen=True)
class FVar(FormulaTerm):
    """Formula metavariable; only occurs in axiom schemas."""
    name: str


Term = ActionTerm | FormulaTerm


@dataclass(frozen=True)
class SymbolSet:
    """Basic-action and proposition symbols of a term, each sorted."""
    actions: tuple[str, ...]
    props: tuple[str, ...]


class ParseError(ValueError):
    """Syntax or variant-gating error, with source position."""

    def __init__(self, message: str, pos: int = -1):
        super().__init__(f"{message} (at position {pos})" if pos >= 0 else message)
        self.pos = pos


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_KEYWORDS = ("perm", "forb", "obl", "true", "false")
_IDENT_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")
_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<comment>#[^\n]*)"
    r"|(?P<op><->|->|~>|==|[~*+!&|()01])"
    r"|(?P<ident>[a-z][a-zA-Z0-9_]*)"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Return (kind, text, pos) triples; kind is 'op', 'ident', 'kw' or 'eof'."""
    out = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        if m.lastgroup == "op":
            out.append(("op", m.group(), i))
        elif m.lastgroup == "ident":
            word = m.group()
            out.append(("kw" if word in _KEYWORDS else "ident", word, i))
        i = m.end()
    out.append(("eof", "", len(text)))
    return out


# ---------------------------------------------------------------------------
# Parser (recursive descent; one token of backtracking for '==' atoms)
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, variant: LogicVariant, alphabet=None):
        self.toks = _tokenize(text)
        self.i = 0
        self.variant = variant
        self.alphabet = None if alphabet is None else frozenset(alphabet)

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str):
        kind, tok, pos = self.next()
        if tok != text:
            raise ParseError(f"expected {text!r}, found {tok or 'end of input'!r}", pos)

    def fail_eof_or(self, what: str):
        kind, tok, pos = self.peek()
        found = "end of input" if kind == "eof" else repr(tok)
        raise ParseError(f"expected {what}, found {found}", pos)

    # -- actions ------------------------------------------------------------

    def action(self) -> ActionTerm:
        left = self.action_union()
        if self.peek()[1] == "~>":
            kind, tok, pos = self.next()
            if not self.variant.allows_aimpl:
                raise ParseError(
                    f"action implication '~>' is not admitted under {self.variant.value}", pos)
            return AImpl(left, self.action())
        return left

    def action_union(self) -> ActionTerm:
        t = self.action_inter()
        while self.peek()[1] == "+":
            self.next()
            t = Union(t, self.action_inter())
        return t

    def action_inter(self) -> ActionTerm:
        t = self.action_compl()
        while self.peek()[1] == "*":
            self.next()
            t = Inter(t, self.action_compl())
        return t

    def action_compl(self) -> ActionTerm:
        if self.peek()[1] == "~":
            self.next()
            return Compl(self.action_compl())
        return self.action_atom()

    def action_atom(self) -> ActionTerm:
        kind, tok, pos = self.peek()
        if tok == "0":
            self.next()
            return Zero()
        if tok == "1":
            self.next()
            return One()
        if tok == "(":
            self.next()
            t = self.action()
            self.expect(")")
            return t
        if kind == "ident":
            self.next()
            if self.alphabet is not None and tok not in self.alphabet:
                raise ParseError(f"basic action {tok!r} is not in the declared alphabet", pos)
            return Basic(tok)
        self.fail_eof_or("an action term")

    # -- formulas -----------------------------------------------------------

    def formula(self) -> FormulaTerm:
        t = self.formula_impl()
        while self.peek()[1] == "<->":
            self.next()
            t = Iff(t, self.formula_impl())
        return t

    def formula_impl(self) -> FormulaTerm:
        left = self.formula_or()
        if self.peek()[1] == "->":
            self.next()
            return Impl(left, self.formula_impl())
        return left

    def formula_or(self) -> FormulaTerm:
        t = self.formula_and()
        while self.peek()[1] == "|":
            self.next()
            t = Or(t, self.formula_and())
        return t

    def formula_and(self) -> FormulaTerm:
        t = self.formula_not()
        while self.peek()[1] == "&":
            self.next()
            t = And(t, self.formula_not())
        return t

    def formula_not(self) -> FormulaTerm:
        if self.peek()[1] == "!":
            self.next()
            return Not(self.formula_not())
        return self.formula_atom()

    def formula_atom(self) -> FormulaTerm:
        kind, tok, pos = self.peek()
        # an equality atom starts with an action term; try that first
        start = self.i
        try:
            lhs = self.action()
            if self.peek()[1] == "==":
                self.next()
                return Eq(lhs, self.action())
            self.i = start
        except ParseError:
            self.i = start
        if tok in ("perm", "forb", "obl"):
            self.next()
            self.expect("(")
            arg = self.action()
            self.expect(")")
            if tok == "perm":
                return Perm(arg)
            if tok == "forb":
                return Forb(arg)
            return Forb(Compl(arg))
        if tok == "true":
            self.next()
            return Top()
        if tok == "false":
            self.next()
            return Bot()
        if tok == "(":
            self.next()
            t = self.formula()
            self.expect(")")
            return t
        if kind == "ident":
            self.next()
            if not self.variant.allows_props:
                raise ParseError(
                    f"proposition symbol {tok!r} is not admitted under {self.variant.value}", pos)
            return Prop(tok)
        self.fail_eof_or("a formula")

    def done(self):
        kind, tok, pos = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected trailing input {tok!r}", pos)


def parse_action(text: str, variant: LogicVariant = LogicVariant.DAL,
                 alphabet=None) -> ActionTerm:
    p = _Parser(text, variant, alphabet)
    t = p.action()
    p.done()
    return t


def parse_formula(text: str, variant: LogicVariant = LogicVariant.DAL,
                  alphabet=None) -> FormulaTerm:
    """Parse and desugar a formula under the given variant's gating rules."""
    p = _Parser(text, variant, alphabet)
    t = p.formula()
    p.done()
    return desugar(t, variant)


# ---------------------------------------------------------------------------
# Desugaring
# ---------------------------------------------------------------------------

def desugar(t: Term, variant: LogicVariant) -> Term:
    """Expand sugar ('<->' always; '->' unless primitive) and check gating.

    Idempotent.  Raises ParseError when the term uses a connective or symbol
    class the variant does not admit.
    """
    if isinstance(t, ActionTerm):
        return _desugar_action(t, variant)
    return _desugar_formula(t, variant)


def _desugar_action(t: ActionTerm, variant: LogicVariant) -> ActionTerm:
    if isinstance(t, (Basic, Zero, One, AVar)):
        return t
    if isinstance(t, Compl):
        return Compl(_desugar_action(t.arg, variant))
    if isinstance(t, AImpl):
        if not variant.allows_aimpl:
            raise ParseError(f"action implication '~>' is not admitted under {variant.value}")
        return AImpl(_desugar_action(t.left, variant), _desugar_action(t.right, variant))
    if isinstance(t, (Union, Inter)):
        return type(t)(_desugar_action(t.left, variant), _desugar_action(t.right, variant))
    raise TypeError(f"not an action term: {t!r}")


def _desugar_formula(t: FormulaTerm, variant: LogicVariant) -> FormulaTerm:
    if isinstance(t, (Bot, Top, FVar)):
        return t
    if isinstance(t, Prop):
        if not variant.allows_props:
            raise ParseError(f"proposition symbol {t.name!r} is not admitted under {variant.value}")
        return t
    if isinstance(t, Eq):
        return Eq(_desugar_action(t.left, variant), _desugar_action(t.right, variant))
    if isinstance(t, (Perm, Forb)):
        return type(t)(_desugar_action(t.arg, variant))
    if isinstance(t, Not):
        return Not(_desugar_formula(t.arg, variant))
    if isinstance(t, (Or, And)):
        return type(t)(_desugar_formula(t.left, variant), _desugar_formula(t.right, variant))
    if isinstance(t, Impl):
        left = _desugar_formula(t.left, variant)
        right = _desugar_formula(t.right, variant)
        if variant.primitive_impl:
            return Impl(left, right)
        return Or(Not(left), right)
    if isinstance(t, Iff):
        fwd = _desugar_formula(Impl(t.left, t.right), variant)
        bwd = _desugar_formula(Impl(t.right, t.left), variant)
        return And(fwd, bwd)
    raise TypeError(f"not a formula term: {t!r}")


# ---------------------------------------------------------------------------
# Printer
# ---------------------------------------------------------------------------

_ACT_LEVEL = {AImpl: 1, Union: 2, Inter: 3, Compl: 4}
_FORM_LEVEL = {Iff: 1, Impl: 2, Or: 3, And: 4, Not: 5}


def _print_act(t: ActionTerm, level: int) -> str:
    if isinstance(t, Basic):
        return t.name
    if isinstance(t, AVar):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Compl):
        return "~" + _print_act(t.arg, 4)
    if isinstance(t, AImpl):
        own = 1
        s = f"{_print_act(t.left, own + 1)} ~> {_print_act(t.right, own)}"
    elif isinstance(t, Union):
        own = 2
        s = f"{_print_act(t.left, own)} + {_print_act(t.right, own + 1)}"
    elif isinstance(t, Inter):
        own = 3
        s = f"{_print_act(t.left, own)} * {_print_act(t.right, own + 1)}"
    else:
        raise TypeError(f"not an action term: {t!r}")
    return f"({s})" if own < level else s


def print_action(t: ActionTerm) -> str:
    return _print_act(t, 0)


def _print_form(t: FormulaTerm, level: int) -> str:
    if isinstance(t, Prop):
        return t.name
    if isinstance(t, FVar):
        return t.name
    if isinstance(t, Top):
        return "true"
    if isinstance(t, Bot):
        return "false"
    if isinstance(t, Perm):
        return f"perm({_print_act(t.arg, 0)})"
    if isinstance(t, Forb):
        return f"forb({_print_act(t.arg, 0)})"
    if isinstance(t, Eq):
        s = f"{_print_act(t.left, 0)} == {_print_act(t.right, 0)}"
        # an equality atom is not self-delimiting; parenthesize except at top
        return f"({s})" if level > 0 else s
    if isinstance(t, Not):
        return "!" + _print_form(t.arg, 5)
    if isinstance(t, Iff):
        own = 1
        s = f"{_print_form(t.left, own)} <-> {_print_form(t.right, own + 1)}"
    elif isinstance(t, Impl):
        own = 2
        s = f"{_print_form(t.left, own + 1)} -> {_print_form(t.right, own)}"
    elif isinstance(t, Or):
        own = 3
        s = f"{_print_form(t.left, own)} | {_print_form(t.right, own + 1)}"
    elif isinstance(t, And):
        own = 4
        s = f"{_print_form(t.left, own)} & {_print_form(t.right, own + 1)}"
    else:
        raise TypeError(f"not a formula term: {t!r}")
    return f"({s})" if own < level else s


def print_formula(t: FormulaTerm) -> str:
    return _print_form(t, 0)


def print_term(t: Term) -> str:
    return print_action(t) if isinstance(t, ActionTerm) else print_formula(t)


# ---------------------------------------------------------------------------
# Symbol collection and substitution instances
# ---------------------------------------------------------------------------

def _walk(t: Term):
    yield t
    for f in fields(t):
        v = getattr(t, f.name)
        if isinstance(v, (ActionTerm, FormulaTerm)):
            yield from _walk(v)


def symbols(t: Term) -> SymbolSet:
    acts, props = set(), set()
    for node in _walk(t):
        if isinstance(node, Basic):
            acts.add(node.name)
        elif isinstance(node, Prop):
            props.add(node.name)
    return SymbolSet(tuple(sorted(acts)), tuple(sorted(props)))


def metavariables(t: Term) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """(action metavars, formula metavars) occurring in a schema pattern."""
    avars, fvars = set(), set()
    for node in _walk(t):
        if isinstance(node, AVar):
            avars.add(node.name)
        elif isinstance(node, FVar):
            fvars.add(node.name)
    return tuple(sorted(avars)), tuple(sorted(fvars))


def is_substitution_instance(psi: Term, phi: Term, alpha: ActionTerm,
                             beta: ActionTerm) -> bool:
    """True iff psi is phi with zero or more occurrences of alpha replaced by beta."""
    def match(res: Term, orig: Term) -> bool:
        if orig == alpha and res == beta:
            return True
        if type(res) is not type(orig):
            return False
        for f in fields(orig):
            a, b = getattr(res, f.name), getattr(orig, f.name)
            if isinstance(b, (ActionTerm, FormulaTerm)):
                if not match(a, b):
                    return False
            elif a != b:
                return False
        return True

    return match(psi, phi)
