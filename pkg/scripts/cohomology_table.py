"""Twisted cohomology dimensions of every shipped fixture, as TSV.

    python3 scripts/cohomology_table.py [--top 4]
"""

import argparse

from homga import fixtures as fx
from homga.cohomology import complex_for


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--top", type=int, default=4, help="highest degree (dialgebras stop at 3)")
    args = p.parse_args()
    print("fixture\tkind\tdim\tZ^1\t" + "\t".join(f"H^{n}" for n in range(2, args.top + 1)))
    for name in fx.VALID:
        A = fx.fixture(name)
        cx = complex_for(A)
        dialg = name in fx.HOM_DIALGEBRA
        top = min(args.top, 3) if dialg else args.top
        dims = [str(cx.cohomology_dimension(n)) if n <= top else "-" for n in range(2, args.top + 1)]
        kind = "dialg" if dialg else "assoc"
        print(f"{name}\t{kind}\t{A.dim}\t{cx.cocycle_dimension(1)}\t" + "\t".join(dims))


if __name__ == "__main__":
    main()
