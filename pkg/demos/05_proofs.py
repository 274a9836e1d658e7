"""Hilbert-style proof checking.

A proof is a numbered list of formulas, each one an instance of an axiom
schema of the chosen logic or obtained by modus ponens from earlier lines.
The checker reports the first bad line and why it is bad.
Run: python3 demos/05_proofs.py
"""

from pathlib import Path

import dalkit as dk

DATA = Path(dk.__file__).parent / "data" / "proofs"

text = (DATA / "d1_perm_union.prf").read_text()
print("a valid proof:")
print("\n".join("  " + l for l in text.splitlines() if l.strip()))
p = dk.read_proof(text)
print("check:", dk.check_proof(p))

print("\na mutant (the binding in the first line is broken):")
bad = (DATA / "bad" / "wrong_binding.prf").read_text()
print("\n".join("  " + l for l in bad.splitlines() if not l.startswith("#")))
res = dk.check_proof(dk.read_proof(bad))
print(f"check: line {res.line}: {res.reason}")

print("\nthe axiom tables grow along the normative-closure hierarchy:")
from dalkit.proof import axiom_table
from dalkit.syntax import LogicVariant as V
for variant in (V.DAL, V.NDAL1, V.NDAL2, V.NDAL3, V.NDAL4, V.NDAL5,
                V.DAL_IPL, V.DAL_IAL, V.DAL_INT):
    alpha = ("a", "b") if variant.requires_alphabet else None
    print(f"  {variant.value:8} {len(axiom_table(variant, alpha))} schemas")

print("\nmodus ponens is variant-aware: classical logics read the major")
print("premise as !minor | conclusion, intuitionistic ones need a real ->.")
