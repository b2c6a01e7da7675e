"""Where accessibility and dominance part ways in sp_8.

Dominance puts [6,2] directly below [8]. No cocharacter limit gets there:
[6,2] is distinguished, so its stabiliser holds no non-central torus to
fix a limit point. This script prints both Hasse diagrams and then
explains every dominance cover that accessibility drops.
"""

from nilaccess import ACCESSIBILITY, DOMINANCE, SP, AlgebraKind, compare, hasse_diagram
from nilaccess.render import to_text

kind = AlgebraKind(SP, 8)

print(to_text(kind, DOMINANCE))
print()
print(to_text(kind, ACCESSIBILITY))
print()

acc = set(hasse_diagram(kind, ACCESSIBILITY))
for a, b in hasse_diagram(kind, DOMINANCE):
    if (a, b) in acc:
        continue
    r = compare(kind, a, b)
    print(f"{a} -> {b}: dominated, accessible={r.accessible}, obstruction={r.obstruction.value if r.obstruction else None}")
