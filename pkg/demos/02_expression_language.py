# The expression language: four parse modes, canonical printing, and
# the print -> parse round trip.  Run with: python demos/02_expression_language.py

from hyperq import exprlang as E

print("== germ mode ==")
for text in ("(2*w^2+3)/(w^2-w)", "w + 1", "-w^2", "0.25*w", "2/3"):
    ast = E.parse(text, "germ")
    print(f"{text:22s} -> {E.format(ast)}")

print()
print("== set mode: intervals, singletons, predicates ==")
for text in ("[0,1/3] | (1/2,1]", "{1/3}", "limited & ~inf", "monad(1/2)"):
    ast = E.parse(text, "set")
    print(f"{text:22s} -> {E.format(ast)}")

print()
print("== ext mode: neutrix literals ==")
for text in ("3 + M0", "(2 + N(-2))*(1 + M0)", "w + G0"):
    ast = E.parse(text, "ext")
    print(f"{text:22s} -> {E.format(ast)}")

print()
print("== family mode allows the index k ==")
print(E.format(E.parse("k/(k+1) + 1/w", "family")))

print()
print("== errors carry positions ==")
for bad in ("1/0", "w + ", "k + 1"):
    try:
        E.parse(bad, "germ")
    except E.ParseError as exc:
        print(f"{bad!r:12s} -> {exc}")

print()
print("== round trip: parse(format(t)) == t ==")
ast = E.parse("(w + 1)*w - 2/3", "germ")
printed = E.format(ast)
print("printed:", printed)
print("reparsed equals original:", E.parse(printed, "germ") == ast)
