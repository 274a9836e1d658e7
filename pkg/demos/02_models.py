"""Deontic action models: a set of possible outcomes split into permitted,
forbidden, and neutral zones, with actions interpreted as outcome sets.

perm(t) holds when every way of doing t lands in the permitted zone;
forb(t) when every way lands in the forbidden zone.
Run: python3 demos/02_models.py
"""

import dalkit as dk

M = dk.DeonticModel(["e1", "e2", "e3"], permitted={"e1"}, forbidden={"e3"})
v = dk.Valuation({"a": {"e1", "e2"}, "b": {"e2", "e3"}})
print("model:")
print(dk.write_model(M, v))

print("extensions:")
for text in ["a * b", "a * ~b", "~(a + b)"]:
    print(f"  [[{text}]] =", sorted(dk.extend(M, v, dk.parse_action(text))) or "{}")

print("\nsatisfaction:")
for text in ["perm(a)", "perm(a * ~b)", "forb(~a)", "a + ~a == 1"]:
    print(f"  {text:16} ->", dk.sat(M, v, dk.parse_formula(text)))

print("\nthe small-model oracle (exhaustive up to 4 outcomes):")
for text in ["perm(a+b) <-> perm(a) & perm(b)", "forb(a) | perm(a)"]:
    ok, witness = dk.taut_oracle(dk.parse_formula(text), return_witness=True)
    print(f"  {text:36} ->", "tautology" if ok else "refuted")
    if witness:
        Mw, vw, props = witness
        print("    witness:", dict(permitted=sorted(Mw.permitted),
                                   forbidden=sorted(Mw.forbidden),
                                   a=sorted(vw.map.get("a", ()))))
