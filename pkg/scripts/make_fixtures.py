#!/usr/bin/env python3
"""Regenerate the fixture JSON files under fixtures/ from the registry."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from stringcone import fixtures as fx  # noqa: E402
from stringcone import serialize as ser  # noqa: E402


def main() -> int:
    target = pathlib.Path(__file__).resolve().parents[1] / "fixtures"
    target.mkdir(exist_ok=True)
    for name in fx.polytope_names():
        path = target / f"{name}.json"
        path.write_text(ser.dump_polytope(fx.polytope(name)) + "\n")
        print(path)
    for name in fx.fan_names():
        path = target / f"fan_{name}.json"
        path.write_text(ser.dump_fan(fx.fan(name)) + "\n")
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
