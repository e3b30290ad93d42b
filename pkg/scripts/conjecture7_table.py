"""Tabulate predicted vs computed jumps of f_3 on [k, k+1).

    python scripts/conjecture7_table.py --kmax 20 [--json out.json]
"""

import argparse
import json

from floorlab.rational import format_rational
from floorlab.verify import compare_conjecture7


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kmax", type=int, default=12)
    parser.add_argument("--json", help="also dump the full comparison rows here")
    args = parser.parse_args()

    rows = [compare_conjecture7(k) for k in range(1, args.kmax + 1)]
    print(f"{'k':>3} {'predicted':>9} {'computed':>8} {'missed':>6} {'spurious':>8} {'bad limits':>10}  match")
    for r in rows:
        print(f"{r['k']:>3} {r['predicted']:>9} {r['computed']:>8} {len(r['not_predicted']):>6} "
              f"{len(r['not_a_jump']):>8} {len(r['wrong_limits']):>10}  {'yes' if r['match'] else 'no'}")
    first = next((r for r in rows if not r["match"]), None)
    if first is not None:
        print(f"\nfirst failure at k={first['k']}:")
        for item in first["wrong_limits"][:5]:
            print("  wrong limits  ", format_rational(item["at"]), item)
        for item in first["not_predicted"][:5]:
            print("  not predicted ", format_rational(item["at"]), item["left"], item["right"])
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True,
                      default=lambda x: format_rational(x))


if __name__ == "__main__":
    main()
