"""Deciding validity.

Classical variants are decided exactly by enumerating what a model can
observe (a status per Boolean atom over the occurring letters).  The
intuitionistic variants get a bounded refutation search over a catalog of
Heyting algebras: countermodel or Unknown, never a false Valid.
Run: python3 demos/06_decide.py
"""

import dalkit as dk
from dalkit.decide import (Countermodel, Unknown, Valid, countermodel_heyting,
                           decide_classical, fence_scenario_search)
from dalkit.syntax import LogicVariant as V


def show(text, variant=V.DAL, alphabet=None):
    res = decide_classical(dk.parse_formula(text, variant, alphabet),
                           variant, alphabet)
    tag = "valid" if isinstance(res, Valid) else "countermodel"
    extra = ""
    if isinstance(res, Countermodel):
        extra = (f"  (permitted={sorted(res.model.permitted)}, "
                 f"forbidden={sorted(res.model.forbidden)})")
    print(f"  {variant.value:6} {text:34} {tag}{extra}")


print("classical decisions:")
show("perm(a+b) <-> perm(a) & perm(b)")
show("forb(a) | perm(a)")
show("forb(a) <-> !perm(a)")

print("\nthe normative-closure hierarchy changes the logic:")
show("forb(a) | perm(a)", V.NDAL1)
show("perm(~a * ~b) | forb(~a * ~b)", V.NDAL2, ("a", "b"))
show("a + b == 1", V.NDAL3, ("a", "b"))
show("perm(a * ~b) | forb(a * ~b)", V.NDAL4, ("a", "b"))

print("\nbounded refutation for the intuitionistic variants:")
for text, variant in [("perm(a) | !perm(a)", V.DAL_IPL),
                      ("perm(a+b) <-> perm(a) & perm(b)", V.DAL_IPL),
                      ("a + ~a == 1", V.DAL_IAL)]:
    phi = dk.parse_formula(text, variant)
    res = countermodel_heyting(phi, variant, max_points=3)
    if isinstance(res, Unknown):
        print(f"  {variant.value:8} {text:34} unknown: {res.reason}")
    else:
        D = res.algebra
        print(f"  {variant.value:8} {text:34} refuted in {D}")

print("\nthe fence scenario: four prescriptions, one joint witness")
D, h = fence_scenario_search()
print("  found:", D)
for name, x in sorted(h.act.items()):
    print(f"    {name} -> {D.action.element_name(x)}")
