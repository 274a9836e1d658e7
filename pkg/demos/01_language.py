"""The two-sorted language: action terms and formulas.

Actions are built from basic action letters with + (free choice), *
(joint execution), ~ (complement / refraining), and the constants 0
(the impossible action) and 1 (the universal action).  Formulas talk
ABOUT actions: a == b, perm(a), forb(a), obl(a), and the usual
connectives.  Run: python3 demos/01_language.py
"""

import dalkit as dk
from dalkit.syntax import LogicVariant as V

print("== parsing and printing ==")
for text in ["a * (b + ~c)", "perm(a + b) & !forb(~a)", "obl(a) -> perm(a)"]:
    try:
        t = dk.parse_formula(text)
    except dk.ParseError:
        t = dk.parse_action(text)
    print(f"  {text:32} -> {dk.print_term(t)}")

print("\n== obligation is refraining being forbidden ==")
print("  obl(a)  desugars to ", dk.print_term(dk.parse_formula("obl(a)")))

print("\n== classical variants rewrite -> and <-> at parse time ==")
print("  dal     :", dk.print_term(dk.parse_formula("perm(a) -> forb(b)", V.DAL)))
print("  dal_ipl :", dk.print_term(dk.parse_formula("perm(a) -> forb(b)", V.DAL_IPL)),
      "(kept primitive)")

print("\n== variants gate the symbols they support ==")
cases = [(V.DAL, dk.parse_formula, "p | !p"),
         (V.DAL_PROP, dk.parse_formula, "p | !p"),
         (V.DAL, dk.parse_action, "a ~> b"),
         (V.DAL_IAL, dk.parse_action, "a ~> b")]
for variant, parse, text in cases:
    try:
        parse(text, variant)
        status = "accepted"
    except dk.ParseError as e:
        status = f"rejected ({e})"
    print(f"  {variant.value:8} {text:12} {status}")

print("\n== concrete truth constants ==")
print("  ", dk.print_term(dk.parse_formula("(perm(a) | !perm(a)) <-> true")))
