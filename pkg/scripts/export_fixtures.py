"""Write every built-in fixture to src/homga/data/<name>.json."""

from pathlib import Path

from homga import algfile
from homga import fixtures as fx

OUT = Path(__file__).resolve().parents[1] / "src" / "homga" / "data"


def main():
    OUT.mkdir(exist_ok=True)
    for name in fx.VALID + fx.INVALID:
        algfile.save(fx.fixture(name), OUT / f"{name}.json")
        print(OUT / f"{name}.json")


if __name__ == "__main__":
    main()
