"""Write step plots of f_2 on [2,4), [2,10) and [4,5), plus f_3 on [2,3), into a directory."""

import argparse
from pathlib import Path

from floorlab.partition import partition
from floorlab.svg import render_svg

FIGURES = [
    ("f2_2_4.svg", 2, 2, 4),
    ("f2_2_10.svg", 2, 2, 10),
    ("f2_4_5.svg", 2, 4, 5),
    ("f3_2_3.svg", 3, 2, 3),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?", default="figures")
    args = parser.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, n, a, b in FIGURES:
        (out / name).write_text(render_svg(partition(n, a, b)))
        print(out / name)


if __name__ == "__main__":
    main()
