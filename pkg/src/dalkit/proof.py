"""Hilbert-style proof checking for every logic variant.

A proof is a sequence of formulas, each justified as an instance of an axiom
schema or by modus ponens from two earlier lines.  Schema matching binds
metavariables (AVar over action terms, FVar over formulas) by one-way
structural unification against the desugared schema pattern; under classical
variants the modus-ponens major premise must have the desugared implication
shape !x | y, under DAL_IPL/DAL_INT the primitive one.

Axiom identifiers:

  A1-A13, LEM     action-lattice equations (formulas with a top-level ==)
  A1'-A13', LEM'  their propositional counterparts (classical variants)
  H1-H12          intuitionistic propositional axioms (DAL_IPL, DAL_INT)
  HA1-HA3         Heyting action equations for ~> (DAL_IAL, DAL_INT);
                  HA1 is a * (a ~> b) == a * b, the sound form of the
                  corresponding Heyting-algebra law
  E1, E2          equality; E2 accepts replacement of any subset of the
                  occurrences of the equated term
  D1-D3           permission/prohibition
  NDAL1-NDAL4     normative-closure extras (NDAL1 ranges over basic actions;
                  NDAL2-4 are closed formulas over the declared alphabet)
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import lru_cache

from . import syntax as S
from .syntax import LogicVariant as V


@dataclass(frozen=True)
class AxiomSchema:
    id: str
    pattern: S.FormulaTerm | None   # None: matched specially (E2)
    variant: V
    basic_vars: frozenset = frozenset()   # metavariables restricted to Basic


@dataclass(frozen=True)
class Axiom:
    id: str


@dataclass(frozen=True)
class MP:
    i: int
    j: int


@dataclass(frozen=True)
class Proof:
    variant: V
    lines: tuple   # of (FormulaTerm, Axiom | MP)
    alphabet: tuple | None = None


@dataclass(frozen=True)
class ProofResult:
    ok: bool
    line: int | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


OK = ProofResult(True)


def _av(n):
    return S.AVar(n)


def _fv(n):
    return S.FVar(n)


def _action_group():
    a, b, c = _av("α"), _av("β"), _av("γ")
    U, I, C = S.Union, S.Inter, S.Compl
    return [
        ("A1", I(a, I(b, c)), I(I(a, b), c)),
        ("A2", I(a, b), I(b, a)),
        ("A3", I(a, a), a),
        ("A4", I(a, U(a, b)), a),
        ("A5", I(a, U(b, c)), U(I(a, b), I(a, c))),
        ("A6", I(a, S.Zero()), S.Zero()),
        ("A7", I(a, C(a)), S.Zero()),
        ("A8", U(a, U(b, c)), U(U(a, b), c)),
        ("A9", U(a, b), U(b, a)),
        ("A10", U(a, a), a),
        ("A11", U(a, I(a, b)), a),
        ("A12", U(a, I(b, c)), I(U(a, b), U(a, c))),
        ("A13", U(a, S.One()), S.One()),
        ("LEM", U(a, C(a)), S.One()),
    ]


def _heyting_action_group():
    a, b, c = _av("α"), _av("β"), _av("γ")
    I, R = S.Inter, S.AImpl
    return [
        ("HA1", I(a, R(a, b)), I(a, b)),
        ("HA2", I(R(I(a, b), a), c), c),
        ("HA3", I(a, R(b, c)), I(a, R(I(a, b), I(a, c)))),
    ]


def _formula_group():
    p, q, r = _fv("φ"), _fv("ψ"), _fv("χ")
    O, A, N = S.Or, S.And, S.Not
    return [
        ("A1'", A(p, A(q, r)), A(A(p, q), r)),
        ("A2'", A(p, q), A(q, p)),
        ("A3'", A(p, p), p),
        ("A4'", A(p, O(p, q)), p),
        ("A5'", A(p, O(q, r)), O(A(p, q), A(p, r))),
        ("A6'", A(p, S.Bot()), S.Bot()),
        ("A7'", A(p, N(p)), S.Bot()),
        ("A8'", O(p, O(q, r)), O(O(p, q), r)),
        ("A9'", O(p, q), O(q, p)),
        ("A10'", O(p, p), p),
        ("A11'", O(p, A(p, q)), p),
        ("A12'", O(p, A(q, r)), A(O(p, q), O(p, r))),
        ("A13'", O(p, S.Top()), S.Top()),
        ("LEM'", O(p, N(p)), S.Top()),
    ]


def _ipl_group():
    p, q, r = _fv("φ"), _fv("ψ"), _fv("χ")
    O, A, N, M = S.Or, S.And, S.Not, S.Impl
    return [
        ("H1", M(p, O(p, q))),
        ("H2", M(p, O(q, p))),
        ("H3", M(A(p, q), p)),
        ("H4", M(A(p, q), q)),
        ("H5", M(M(p, S.Bot()), N(p))),
        ("H6", M(N(p), M(p, S.Bot()))),
        ("H7", M(S.Bot(), p)),
        ("H8", M(p, S.Top())),
        ("H9", M(p, M(q, p))),
        ("H10", M(p, M(q, A(p, q)))),
        ("H11", M(M(p, r), M(M(q, r), M(O(p, q), r)))),
        ("H12", M(M(p, M(q, r)), M(M(p, q), M(p, r)))),
    ]


def _deontic_group():
    a, b = _av("α"), _av("β")
    return [
        ("D1", S.Iff(S.Perm(S.Union(a, b)), S.And(S.Perm(a), S.Perm(b)))),
        ("D2", S.Iff(S.Forb(S.Union(a, b)), S.And(S.Forb(a), S.Forb(b)))),
        ("D3", S.Iff(S.And(S.Perm(a), S.Forb(a)), S.Eq(a, S.Zero()))),
    ]


def _meetc(names):
    t = S.Compl(S.Basic(names[0]))
    for n in names[1:]:
        t = S.Inter(t, S.Compl(S.Basic(n)))
    return t


def _joinb(names):
    t = S.Basic(names[0])
    for n in names[1:]:
        t = S.Union(t, S.Basic(n))
    return t


def _minterms(names):
    out = []
    for bits in range(1 << len(names)):
        t = None
        for i, n in enumerate(names):
            lit = S.Basic(n) if bits >> i & 1 else S.Compl(S.Basic(n))
            t = lit if t is None else S.Inter(t, lit)
        out.append(t)
    return out


def _ndal_extras(variant, alphabet):
    extras = []
    closure = S.Or(S.Forb(_av("α")), S.Perm(_av("α")))
    if variant in (V.NDAL1, V.NDAL2, V.NDAL3, V.NDAL5):
        extras.append(("NDAL1", closure, frozenset({"α"})))
    if variant in (V.NDAL2, V.NDAL3, V.NDAL5):
        m = _meetc(alphabet)
        extras.append(("NDAL2", S.Or(S.Perm(m), S.Forb(m)), frozenset()))
    if variant in (V.NDAL3, V.NDAL5):
        extras.append(("NDAL3", S.Eq(_joinb(alphabet), S.One()), frozenset()))
    if variant in (V.NDAL4, V.NDAL5):
        for m in _minterms(alphabet):
            extras.append(("NDAL4", S.Or(S.Perm(m), S.Forb(m)), frozenset()))
    return extras


@lru_cache(maxsize=None)
def axiom_table(variant: V, alphabet: tuple | None = None):
    """The variant's axiom schemas, desugared, in presentation order."""
    if variant.requires_alphabet and not alphabet:
        raise ValueError(f"{variant.value} needs a declared finite alphabet")
    entries = []

    def eq_schemas(group):
        return [(i, S.Eq(l, r)) for i, l, r in group]

    if variant in (V.DAL_IAL, V.DAL_INT):
        entries += eq_schemas(_action_group()[:-1])   # LEM dropped
        entries += eq_schemas(_heyting_action_group())
    else:
        entries += eq_schemas(_action_group())
    if variant in (V.DAL_IPL, V.DAL_INT):
        entries += [(i, p) for i, p in _ipl_group()]
    else:
        entries += [(i, S.Iff(l, r)) for i, l, r in _formula_group()]
    entries.append(("E1", S.Eq(_av("α"), _av("α"))))
    entries.append(("E2", None))
    entries += _deontic_group()
    basic = {}
    for extra in _ndal_extras(variant, alphabet or ()):
        i, pat, bv = extra
        entries.append((i, pat))
        basic[len(entries) - 1] = bv
    out = []
    for k, (i, pat) in enumerate(entries):
        if pat is not None:
            pat = S.desugar(pat, variant)
        out.append(AxiomSchema(i, pat, variant, basic.get(k, frozenset())))
    return tuple(out)


# ---------------------------------------------------------------------------
# Matching
# ---------------------------------------------------------------------------

def _match_pattern(pat, t, binds):
    if isinstance(pat, S.AVar):
        if not isinstance(t, S.ActionTerm):
            return False
        if pat.name in binds:
            return binds[pat.name] == t
        binds[pat.name] = t
        return True
    if isinstance(pat, S.FVar):
        if not isinstance(t, S.FormulaTerm):
            return False
        if pat.name in binds:
            return binds[pat.name] == t
        binds[pat.name] = t
        return True
    if type(pat) is not type(t):
        return False
    for f in dataclasses.fields(pat):
        pv, tv = getattr(pat, f.name), getattr(t, f.name)
        if isinstance(pv, S.Term):
            if not _match_pattern(pv, tv, binds):
                return False
        elif pv != tv:
            return False
    return True


def _match_e2(phi, variant):
    """(α=β ∧ φ) → ψ with ψ a result of replacing occurrences of α by β."""
    if variant.primitive_impl:
        if not isinstance(phi, S.Impl):
            return False, None
        ante, psi = phi.left, phi.right
    else:
        if not (isinstance(phi, S.Or) and isinstance(phi.left, S.Not)):
            return False, None
        ante, psi = phi.left.arg, phi.right
    if not (isinstance(ante, S.And) and isinstance(ante.left, S.Eq)):
        return False, None
    alpha, beta = ante.left.left, ante.left.right
    body = ante.right
    if S.is_substitution_instance(psi, body, alpha, beta):
        return True, {"α": alpha, "β": beta, "φ": body, "ψ": psi}
    return False, None


def match_schema(phi: S.FormulaTerm, schema: AxiomSchema):
    """(matched, bindings) for a desugared formula against one schema."""
    if schema.id == "E2":
        return _match_e2(phi, schema.variant)
    binds: dict = {}
    if not _match_pattern(schema.pattern, phi, binds):
        return False, None
    for name in schema.basic_vars:
        if not isinstance(binds.get(name), S.Basic):
            return False, None
    return True, binds


def _is_axiom(phi, table):
    for schema in table:
        ok, binds = match_schema(phi, schema)
        if ok:
            return schema.id, binds
    return None, None


def check_proof(p: Proof, variant: V | None = None) -> ProofResult:
    """Validate every line; the first bad line wins."""
    variant = variant or p.variant
    table = axiom_table(variant, p.alphabet)
    lines = list(p.lines)
    for k, (phi, just) in enumerate(lines, start=1):
        if isinstance(just, Axiom):
            # ids may repeat (one closed formula per minterm), so try them all
            candidates = [s for s in table if s.id == just.id]
            if not candidates:
                return ProofResult(False, k, f"unknown axiom {just.id} for {variant.value}")
            if not any(match_schema(phi, s)[0] for s in candidates):
                return ProofResult(False, k, f"not an instance of {just.id}")
        elif isinstance(just, MP):
            if not (1 <= just.i < k and 1 <= just.j < k):
                return ProofResult(False, k, "mp must cite earlier lines")
            minor = lines[just.i - 1][0]
            major = lines[just.j - 1][0]
            if variant.primitive_impl:
                expected = S.Impl(minor, phi)
            else:
                expected = S.Or(S.Not(minor), phi)
            if major != expected:
                return ProofResult(
                    False, k,
                    f"line {just.j} is not (line {just.i}) -> (line {k})")
        else:
            return ProofResult(False, k, f"unknown justification {just!r}")
    return OK
