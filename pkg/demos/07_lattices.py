"""The lattice toolkit underneath: catalogs, quotients, and drawings.

Run: python3 demos/07_lattices.py
"""

from pathlib import Path

import dalkit as dk

print("Heyting catalog (all downset algebras of posets up to 3 points):")
for lat in dk.heyting_catalog(3):
    kind = "boolean" if dk.is_boolean(lat) else "heyting"
    print(f"  size {lat.size:2}  {kind:8} elements: {' '.join(lat.names)}")

print("\nquotient by a congruence: collapse a to 0 in the free algebra on a, b")
lat, gens = dk.free_boolean(["a", "b"])
partition = dk.congruence_closure(lat, [(gens["a"], lat.bot)])
q, cls = dk.quotient(lat, partition)
print(f"  16-element algebra collapses to {q.size} elements "
      f"({len(partition)} congruence classes)")

print("\nvalidate catches broken lattice laws:")
problems = dk.validate(dk.chain(4))
print("  chain(4):", problems or "all laws hold")

print("\nDOT export of a deontic algebra (permitted zone tinted):")
from dalkit.cli import dot_export
DATA = Path(dk.__file__).parent / "data"
af = dk.read_algebra((DATA / "drinking.daa").read_text())
dot = dot_export(af.algebra)
print("\n".join("  " + l for l in dot.splitlines()[:8]))
print("  ...")
print("render it with: python3 -m dalkit.cli dot --algebra", DATA / "drinking.daa",
      "| dot -Tpng > lattice.png")
