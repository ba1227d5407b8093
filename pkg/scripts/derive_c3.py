#!/usr/bin/env python3
"""Run the full degree-3 isogeny derivation and print every intermediate.

Usage: python3 scripts/derive_c3.py [--json]
"""

import argparse
import json

from heiscurve.elliptic import derive_isogenous_curves, three_torsion


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    report = derive_isogenous_curves()
    if args.json:
        print(json.dumps(report.to_json_dict(), sort_keys=True, indent=2))
        return

    print("Base curve:", report.base_curve)
    torsion = three_torsion(report.base_curve)
    print(f"Field-rational 3-torsion ({torsion.count_with_identity()} points "
          "with the identity):")
    for p in torsion.points:
        print("  ", p)
    print()
    print(report.to_text())
    print()
    print("Pairwise classification of the codomains:")
    for (i, j), cls in report.pair_classifications:
        extra = f" (scale {cls.scale})" if cls.scale is not None else ""
        print(f"  rows {i + 1},{j + 1}: {cls.kind}{extra}")
    print()
    print("Selected curve:", report.selected)


if __name__ == "__main__":
    main()
