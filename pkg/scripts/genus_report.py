#!/usr/bin/env python3
"""Print the genus table and signature audit for a range of moduli.

Usage: python3 scripts/genus_report.py [--n-max N]
"""

import argparse

from heiscurve.covers import (
    audit_signature_claims,
    b3,
    b4,
    cover_ramification,
    fermat_genus,
    heisenberg_genus,
    m_bound,
    modular_aut_order,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=12)
    args = parser.parse_args()

    print(f"{'n':>3} {'g_F':>5} {'g_C':>6} {'aut order':>10}  ramification")
    for n in range(2, args.n_max + 1):
        order = modular_aut_order(n)[0] if n >= 3 else "-"
        print(
            f"{n:>3} {fermat_genus(n):>5} {heisenberg_genus(n):>6} "
            f"{order:>10}  {cover_ramification(n).describe()}"
        )

    print("\nArea bounds (even n):")
    for n in range(4, args.n_max + 1, 2):
        print(f"  n={n}: m_bound={m_bound(n)}  b3={b3(n)}  b4={b4(n)}")

    print("\nSignature audit:")
    for v in audit_signature_claims(args.n_max):
        mark = "ok " if v.consistent else "BAD"
        print(
            f"  [{mark}] signature={v.signature} order={v.order} "
            f"expected={v.expected_genus} computed={v.computed_genus}  {v.claim}"
        )


if __name__ == "__main__":
    main()
