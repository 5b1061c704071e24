"""Per-degree sign s_n with d = s_n * delta_alpha, for every fixture.

0 means both maps vanish in that degree, so any sign fits.
"""

from homga import fixtures as fx
from homga.cohomology import complex_for


def main():
    for name in fx.VALID:
        cx = complex_for(fx.fixture(name))
        top = 3 if name in fx.HOM_DIALGEBRA else 4
        signs = [cx.sign_relation(n) for n in range(1, top + 1)]
        print(f"{name:<16} " + " ".join({1: "+1", -1: "-1", 0: " 0", None: " ?"}[s] for s in signs))


if __name__ == "__main__":
    main()
