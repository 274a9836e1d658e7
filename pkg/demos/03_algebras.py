"""Finite deontic action algebras: a lattice of actions, a lattice of truth
values, and maps P and F subject to six coherence conditions.

Three shipped scenarios show the range: a Boolean drink/drive example with
crisp truth, a driving-license example over a three-valued chain, and a
closure example where equality itself is graded.
Run: python3 demos/03_algebras.py
"""

from pathlib import Path

import dalkit as dk

DATA = Path(dk.__file__).parent / "data"


def show(name, variant, interp_builder, items):
    af = dk.read_algebra((DATA / name).read_text())
    D = af.algebra
    h = interp_builder(af)
    print(f"-- {name}: flavor {D.flavor}, |actions|={D.action.size}, "
          f"|values|={D.formula.size}, E {'crisp' if D.crisp_equality else 'graded'}")
    for text in items:
        val = dk.evaluate(D, h, dk.parse_formula(text, variant))
        mark = "top" if val == D.formula.top else D.formula.element_name(val)
        print(f"   {text:36} = {mark}")
    print()


base = lambda af: dk.Interpretation(act=dict(af.named_actions))

show("drinking.daa", dk.LogicVariant.DAL,
     lambda af: dk.Interpretation(act={
         "drinking": af.named_actions["a"],
         "driving": af.named_actions["b"],
         "parking": dk.evaluate(af.algebra, base(af), dk.parse_action("~b"))}),
     ["perm(parking)", "forb(driving)", "perm(drinking * parking)",
      "perm(drinking)"])

show("license.daa", dk.LogicVariant.DAL_PROP,
     lambda af: dk.Interpretation(act={"driving": af.algebra.action.top},
                                  prop={"haslicense": 1}),
     ["!haslicense", "!haslicense -> forb(driving)", "!forb(driving)",
      "haslicense"])

show("closure.daa", dk.LogicVariant.DAL,
     lambda af: dk.Interpretation(act={"a": af.algebra.action.index_of("c1")}),
     ["forb(a)", "!forb(a)", "perm(a)", "!forb(a) -> perm(a)",
      "forb(a) | perm(a)"])

print("the last line is the point: one-half or one-half is one-half, so the")
print("closure law forb(a) | perm(a) can fail even where nothing is neutral.")
