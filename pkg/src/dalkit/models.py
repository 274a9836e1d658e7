"""Deontic action models: event sets with permitted/forbidden regions.

A model is a triple (E, P, F) with P and F disjoint subsets of E.  A
valuation sends each basic action to a subset of E and extends uniquely to
all action terms over union/intersection/complement (no ~> here).  perm(a)
holds when the extension lands inside P, forb(a) inside F.

Subsets are bitmasks internally; ``taut_oracle`` enumerates every model with
at most ``max_elems`` elements (all disjoint P/F pairs, all valuations over
the occurring symbols) as numpy index arithmetic, so the exhaustive search
over a few tens of thousands of models stays cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import syntax as S
from .algebra import BudgetExceeded


@dataclass(frozen=True)
class DeonticModel:
    elements: tuple
    permitted: frozenset
    forbidden: frozenset

    def __init__(self, elements, permitted=(), forbidden=()):
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "permitted", frozenset(permitted))
        object.__setattr__(self, "forbidden", frozenset(forbidden))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate element names")
        universe = set(self.elements)
        if not self.permitted <= universe or not self.forbidden <= universe:
            raise ValueError("permitted/forbidden must be subsets of the elements")
        if self.permitted & self.forbidden:
            raise ValueError("permitted and forbidden must be disjoint")


@dataclass(frozen=True)
class Valuation:
    map: dict = field(default_factory=dict)

    def __init__(self, map=()):
        object.__setattr__(self, "map", {k: frozenset(v) for k, v in dict(map).items()})


def _bit_index(M: DeonticModel) -> dict:
    return {e: i for i, e in enumerate(M.elements)}


def _mask(idx: dict, subset) -> int:
    m = 0
    for e in subset:
        try:
            m |= 1 << idx[e]
        except KeyError:
            raise ValueError(f"unknown element {e!r}") from None
    return m


def _extend_mask(idx, full, vmasks, t):
    if isinstance(t, S.Basic):
        try:
            return vmasks[t.name]
        except KeyError:
            raise ValueError(f"valuation does not cover basic action {t.name!r}") from None
    if isinstance(t, S.Zero):
        return 0
    if isinstance(t, S.One):
        return full
    if isinstance(t, S.Union):
        return _extend_mask(idx, full, vmasks, t.left) | _extend_mask(idx, full, vmasks, t.right)
    if isinstance(t, S.Inter):
        return _extend_mask(idx, full, vmasks, t.left) & _extend_mask(idx, full, vmasks, t.right)
    if isinstance(t, S.Compl):
        return full & ~_extend_mask(idx, full, vmasks, t.arg)
    if isinstance(t, S.AImpl):
        raise ValueError("~> has no model semantics")
    raise TypeError(f"not an action term: {t!r}")


def extend(M: DeonticModel, v: Valuation, alpha: S.ActionTerm) -> frozenset:
    """The unique extension of v to the action term alpha, as a subset of E."""
    idx = _bit_index(M)
    full = (1 << len(M.elements)) - 1
    vmasks = {name: _mask(idx, s) for name, s in v.map.items()}
    m = _extend_mask(idx, full, vmasks, alpha)
    return frozenset(e for e, i in idx.items() if m >> i & 1)


def sat(M: DeonticModel, v: Valuation, phi: S.FormulaTerm, prop_val=None) -> bool:
    """M, v |= phi.  prop_val maps proposition names to booleans."""
    idx = _bit_index(M)
    full = (1 << len(M.elements)) - 1
    vmasks = {name: _mask(idx, s) for name, s in v.map.items()}
    pmask = _mask(idx, M.permitted)
    fmask = _mask(idx, M.forbidden)

    def form(t):
        if isinstance(t, S.Eq):
            return _extend_mask(idx, full, vmasks, t.left) == _extend_mask(idx, full, vmasks, t.right)
        if isinstance(t, S.Perm):
            return _extend_mask(idx, full, vmasks, t.arg) & ~pmask == 0
        if isinstance(t, S.Forb):
            return _extend_mask(idx, full, vmasks, t.arg) & ~fmask == 0
        if isinstance(t, S.Prop):
            if prop_val is None:
                raise ValueError("propositions need a prop valuation")
            try:
                return bool(prop_val[t.name])
            except KeyError:
                raise ValueError(f"prop valuation does not cover {t.name!r}") from None
        if isinstance(t, S.Or):
            return form(t.left) or form(t.right)
        if isinstance(t, S.And):
            return form(t.left) and form(t.right)
        if isinstance(t, S.Not):
            return not form(t.arg)
        if isinstance(t, S.Impl):
            return (not form(t.left)) or form(t.right)
        if isinstance(t, S.Iff):
            return form(t.left) == form(t.right)
        if isinstance(t, S.Top):
            return True
        if isinstance(t, S.Bot):
            return False
        raise TypeError(f"not a formula term: {t!r}")

    return form(phi)


# ---------------------------------------------------------------------------
# Exhaustive small-model oracle
# ---------------------------------------------------------------------------
#
# A model with n elements and k occurring actions is coded by one state in
# range(3 * 2**k) per element (P/F/neither times the action memberships) plus
# one bit per proposition; all models of one size form a flat index range.

_ORACLE_ROW_CAP = 4_000_000


def _oracle_env(n, acts, props):
    k, m = len(acts), len(props)
    per = 3 << k
    total = per**n << m
    if total > _ORACLE_ROW_CAP:
        raise BudgetExceeded(f"{total} candidate models exceed the oracle budget")
    rows = np.arange(total, dtype=np.int64)
    env = {"full": (1 << n) - 1, "rows": total, "n": n}
    states = [(rows >> m) // per**i % per for i in range(n)]
    pmask = np.zeros(total, dtype=np.int64)
    fmask = np.zeros(total, dtype=np.int64)
    amasks = {a: np.zeros(total, dtype=np.int64) for a in acts}
    for i, s in enumerate(states):
        pf = s % 3
        pmask |= (pf == 1).astype(np.int64) << i
        fmask |= (pf == 2).astype(np.int64) << i
        mem = s // 3
        for j, a in enumerate(acts):
            amasks[a] |= (mem >> j & 1) << i
    env["P"], env["F"], env["acts"] = pmask, fmask, amasks
    env["props"] = {p: (rows >> j & 1).astype(bool) for j, p in enumerate(props)}
    return env


def _act_vec(env, t):
    if isinstance(t, S.Basic):
        return env["acts"][t.name]
    if isinstance(t, S.Zero):
        return 0
    if isinstance(t, S.One):
        return env["full"]
    if isinstance(t, S.Union):
        return _act_vec(env, t.left) | _act_vec(env, t.right)
    if isinstance(t, S.Inter):
        return _act_vec(env, t.left) & _act_vec(env, t.right)
    if isinstance(t, S.Compl):
        return env["full"] & ~_act_vec(env, t.arg)
    if isinstance(t, S.AImpl):
        raise ValueError("~> has no model semantics")
    raise TypeError(f"not an action term: {t!r}")


def _form_vec(env, t):
    if isinstance(t, S.Eq):
        # np.equal, not ==: two constant sides give plain ints, and Python's
        # bool would then break ~ in the Not case
        return np.equal(_act_vec(env, t.left), _act_vec(env, t.right))
    if isinstance(t, S.Perm):
        return _act_vec(env, t.arg) & ~env["P"] == 0
    if isinstance(t, S.Forb):
        return _act_vec(env, t.arg) & ~env["F"] == 0
    if isinstance(t, S.Prop):
        return env["props"][t.name]
    if isinstance(t, S.Or):
        return _form_vec(env, t.left) | _form_vec(env, t.right)
    if isinstance(t, S.And):
        return _form_vec(env, t.left) & _form_vec(env, t.right)
    if isinstance(t, S.Not):
        return ~_form_vec(env, t.arg)
    if isinstance(t, S.Impl):
        return ~_form_vec(env, t.left) | _form_vec(env, t.right)
    if isinstance(t, S.Iff):
        return _form_vec(env, t.left) == _form_vec(env, t.right)
    if isinstance(t, S.Top):
        return np.True_  # numpy scalar: ~ stays boolean, unlike Python's ~True
    if isinstance(t, S.Bot):
        return np.False_
    raise TypeError(f"not a formula term: {t!r}")


def _decode_witness(n, acts, props, row):
    k, m = len(acts), len(props)
    per = 3 << k
    elems = tuple(f"e{i + 1}" for i in range(n))
    permitted, forbidden = set(), set()
    vmap = {a: set() for a in acts}
    for i in range(n):
        s = (row >> m) // per**i % per
        pf, mem = s % 3, s // 3
        if pf == 1:
            permitted.add(elems[i])
        elif pf == 2:
            forbidden.add(elems[i])
        for j, a in enumerate(acts):
            if mem >> j & 1:
                vmap[a].add(elems[i])
    prop_val = {p: bool(row >> j & 1) for j, p in enumerate(props)}
    return DeonticModel(elems, permitted, forbidden), Valuation(vmap), prop_val


def taut_oracle(phi: S.FormulaTerm, max_elems: int = 4, return_witness: bool = False):
    """Exhaustively search all models with up to max_elems elements.

    True means no small countermodel exists.  With return_witness=True the
    result is (bool, witness) where a falsifying witness is the triple
    (DeonticModel, Valuation, prop_val) for the first failure in enumeration
    order (model size, then coded state).
    """
    sym = S.symbols(phi)
    acts, props = sym.actions, sym.props
    if len(acts) > 2:
        raise BudgetExceeded("oracle supports at most 2 basic actions")
    if max_elems > 4:
        raise BudgetExceeded("oracle supports at most 4 elements")
    for n in range(max_elems + 1):
        env = _oracle_env(n, acts, props)
        res = np.broadcast_to(np.asarray(_form_vec(env, phi)), (env["rows"],))
        if not res.all():
            if not return_witness:
                return False
            row = int(np.nonzero(~res)[0][0])
            return False, _decode_witness(n, acts, props, row)
    return (True, None) if return_witness else True
