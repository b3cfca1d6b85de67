"""Print closures, axis traces and box ideals for the hand-checked ideals."""

from dataclasses import dataclass

from ratliffrush import MonomialIdeal
from ratliffrush.boxes import box_ideal
from ratliffrush.closure import axis_ideals, rr_closure
from ratliffrush.goodness import classify
from ratliffrush.parsing import default_variables, format_ideal, format_monomial


@dataclass(frozen=True)
class Worked:
    name: str
    generators: tuple


IDEALS = (
    Worked("d=29", ((29, 0, 0), (0, 29, 0), (0, 0, 29), (28, 8, 8), (8, 28, 8), (8, 8, 28))),
    Worked("four variables", (
        (53, 0, 0, 0), (0, 56, 0, 0), (0, 0, 59, 0), (0, 0, 0, 61),
        (50, 18, 20, 25), (15, 54, 22, 24), (18, 20, 56, 22), (16, 19, 23, 60),
    )),
    Worked("d=41", ((41, 0, 0), (0, 41, 0), (0, 0, 41), (40, 5, 5), (5, 40, 5), (5, 5, 40))),
)


def show(w: Worked) -> None:
    I = MonomialIdeal(list(w.generators))
    v = default_variables(I.n)
    r = classify(I)
    print(f"== {w.name}: {r.verdict.value} ({r.rule.value}), K = {list(r.k_bounds)}")
    for a in axis_ideals(I):
        steps = " -> ".join(", ".join(format_monomial(g, v) for g in F) for F in a.trace[1:-1])
        print(f"  axis {v[a.axis]}: q = {a.q}, {len(a.ideal)} generators; new: {steps or '(none)'}")
    R = rr_closure(I)
    added = [format_monomial(g, v) for g in R.gens if g not in set(I.gens)]
    print(f"  closure adds: {', '.join(added) or '(nothing)'}")


def main() -> None:
    for w in IDEALS:
        show(w)
    I = MonomialIdeal([(5, 0), (0, 5), (1, 4), (4, 1)])
    print("== box ideals of", format_ideal(I, "xy"))
    for a in [(0, 0), (1, 0), (0, 1), (1, 1)]:
        print(f"  I_{a}: {format_ideal(box_ideal(I, a), 'xy')}")


if __name__ == "__main__":
    main()
