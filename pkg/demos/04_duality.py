"""Models and concrete algebras are two views of the same situation.

to_algebra builds the field of outcome sets a model generates; to_model
reads a model back off a concrete algebra; stoneify replaces any abstract
Boolean-Boolean algebra by an isomorphic field of sets.
Run: python3 demos/04_duality.py
"""

import dalkit as dk

M = dk.DeonticModel(["e1", "e2", "e3"], permitted={"e1"}, forbidden={"e3"})
v = dk.Valuation({"a": {"e1", "e2"}, "b": {"e2", "e3"}})

D, h = dk.to_algebra(M, v)
print("model -> algebra:", D)
print("  a maps to", D.action.element_name(h.act["a"]))

phi = dk.parse_formula("perm(a * ~b)")
print("  sat in model:", dk.sat(M, v, phi),
      "| top in algebra:", dk.evaluate(D, h, phi) == D.formula.top)

M2, v2 = dk.to_model(D, h)
print("algebra -> model: permitted =", sorted(M2.permitted),
      " forbidden =", sorted(M2.forbidden))

rep = dk.round_trip_report(M, v)
print("round trip exact?", rep.ok)

# a region the valuation cannot express is silently lost, and the report says so
M3 = dk.DeonticModel(["e1", "e2"], permitted={"e1"}, forbidden=set())
v3 = dk.Valuation({"a": {"e1", "e2"}})
rep3 = dk.round_trip_report(M3, v3)
print("\ninexpressible permitted zone:")
for d in rep3.details:
    print("  ", d)

# stoneify: abstract -> concrete (permit everything under ~b, forbid under b)
lat, gens = dk.free_boolean(["a", "b"])
D0 = dk.build(lat, dk.two(),
              [1 if lat.leq(x, lat.compl(gens["b"])) else 0 for x in range(lat.size)],
              [1 if lat.leq(x, gens["b"]) else 0 for x in range(lat.size)])
D1, (aiso, fiso) = dk.stoneify(D0)
print("\nstoneify: abstract", D0, "-> concrete", D1)
print("  generator a lands on", D1.action.element_name(int(aiso[gens["a"]])))
