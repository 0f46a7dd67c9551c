"""Tour of the hyperfield instances and the axiom-verification engine.

Multivalued addition returns exact value sets: finite sets, down-closed rays
with stray points, or unions of open arcs on the rational circle.  Axiom
checks are exhaustive on finite carriers and run on probe grids otherwise.
"""

from fractions import Fraction as F

from hyperalg.hypercore import (
    GAMMA_Z2LEX,
    KRASNER,
    PHASE,
    PHASE_ZERO,
    SIGNS,
    TROPICAL,
    check_doubly_distributive,
    check_hyperfield,
    hyperadd,
)

print("== single hypersums ==")
print("K:  1 + 1          ->", KRASNER.set_to_json(hyperadd(KRASNER, 1, 1)))
print("S:  1 + (-1)       ->", SIGNS.set_to_json(hyperadd(SIGNS, 1, -1)))
print("T:  3 + 3          ->", TROPICAL.set_to_json(hyperadd(TROPICAL, F(3), F(3))))
print("T:  3 + 1          ->", TROPICAL.set_to_json(hyperadd(TROPICAL, F(3), F(1))))
print("P:  1 + i          ->", PHASE.set_to_json(hyperadd(PHASE, F(0), F(1, 4))))
print("P:  1 + (-1)       ->", PHASE.set_to_json(hyperadd(PHASE, F(0), F(1, 2))))
print("Z2: (0,1) + (0,1)  ->", GAMMA_Z2LEX.set_to_json(hyperadd(GAMMA_Z2LEX, (0, 1), (0, 1))))

print()
print("== hyperfield axiom reports ==")
for s in (KRASNER, SIGNS, TROPICAL, GAMMA_Z2LEX, PHASE):
    rep = check_hyperfield(s)
    print(f"{s.name:10s} {'pass' if rep.passed else 'FAIL'}  [{rep.scope}]")

print()
print("== double distributivity ==")
for s in (KRASNER, SIGNS):
    print(f"{s.name}: {'holds' if check_doubly_distributive(s).passed else 'fails'} (exhaustive)")
rep = check_doubly_distributive(TROPICAL, probe=[F(-1), F(0), F(2)])
print(f"T: {'holds' if rep.passed else 'fails'} (probe grid)")

# the phase hyperfield genuinely fails: (a+b)(c+d) is strictly smaller than
# the four-term sum for quarter-turn inputs
rep = check_doubly_distributive(PHASE, probe=[PHASE_ZERO, F(0), F(1, 4), F(1, 2), F(3, 4)])
failure = rep.failures()[0]
print(f"P: {'holds' if rep.passed else 'fails'} -- {failure.detail}")
print("   counterexample quadruple:", [PHASE.value_str(v) for v in failure.counterexample])
