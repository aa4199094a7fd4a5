"""Self-dual codes of length up to 5: counts, classes and the mass identity."""

from qgf4.catalog import format_code
from qgf4.selfdual import classify_selfdual, mass, mass_formula_rhs

for n in range(1, 6):
    classes, total = classify_selfdual(n)
    indec = [c for c in classes if c.indecomposable]
    print(f"n={n}: {total} codes, {len(classes)} classes, {len(indec)} indecomposable, "
          f"mass {mass(classes)} = {mass_formula_rhs(n)}")

classes, _ = classify_selfdual(5)
for c in classes:
    if c.indecomposable:
        print()
        print(format_code(c.representative, [f"|Aut|={c.aut_order} d={c.d}"]), end="")
