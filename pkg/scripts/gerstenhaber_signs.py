"""Which sign conventions survive on the cohomology of the dual numbers.

For each candidate exponent the script counts class pairs/triples whose
defect fails to be a coboundary.  A convention is only confirmed when the
competing ones fail somewhere, so the check is not vacuous.
"""

import itertools

from homga import fixtures as fx
from homga.cohomology import HochschildComplex, induced_bracket, induced_cup

CAP = 8


def sign(e):
    return -1 if e % 2 else 1


def main():
    cx = HochschildComplex(fx.fixture("dual"))
    classes = cx.cohomology_basis(2) + cx.cohomology_basis(3)

    commutativity = {
        "deg x * deg y": lambda x, y: sign(x.degree * y.degree),
        "(deg x-1)(deg y-1)": lambda x, y: sign((x.degree - 1) * (y.degree - 1)),
        "unsigned": lambda x, y: 1,
    }
    for label, s in commutativity.items():
        bad = 0
        for x, y in itertools.product(classes, repeat=2):
            defect = induced_cup(x, y).representative - s(x, y) * induced_cup(y, x).representative
            bad += not cx.is_coboundary(defect)
        print(f"graded commutativity  {label:<20} failures={bad}")

    leibniz = {
        "(deg x-1) deg y": lambda x, y: sign((x.degree - 1) * y.degree),
        "deg x * deg y": lambda x, y: sign(x.degree * y.degree),
        "unsigned": lambda x, y: 1,
    }
    for label, s in leibniz.items():
        bad = 0
        for x, y, z in itertools.product(classes, repeat=3):
            if x.degree + y.degree + z.degree - 1 > CAP:
                continue
            defect = (induced_bracket(x, induced_cup(y, z)).representative
                      - induced_cup(induced_bracket(x, y), z).representative
                      - s(x, y) * induced_cup(y, induced_bracket(x, z)).representative)
            bad += not cx.is_coboundary(defect)
        print(f"Leibniz rule          {label:<20} failures={bad}")


if __name__ == "__main__":
    main()
