"""Tabulate Bloch-group data over small prime fields.

Usage: python3 scripts/blochfq_survey.py [--max-p N]
"""

import argparse

from dilogeq.blochfq import (
    check_c_facts,
    modified_bloch,
    pre_bloch,
    relations_matrix,
    wedge_square_order,
)
def primes_up_to(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[:2] = b"\x00\x00"
    for n in range(2, int(bound**0.5) + 1):
        if sieve[n]:
            sieve[n * n :: n] = bytearray(len(sieve[n * n :: n]))
    return [n for n in range(bound + 1) if sieve[n]]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-p", type=int, default=31)
    args = ap.parse_args()

    header = f"{'p':>4} {'gens':>5} {'wedge^2':>8} {'pre(five)':>10} {'pre':>8} {'modified':>9}  c-facts"
    print(header)
    print("-" * len(header))
    for p in primes_up_to(args.max_p):
        if p < 5:
            continue
        pres = relations_matrix(p)
        _, d = wedge_square_order(p)
        wedge = f"Z/{d}" if d > 1 else "0"
        facts = check_c_facts(p)
        ok = "yes" if facts.all_pass else "NO"
        print(
            f"{p:>4} {len(pres.generators):>5} {wedge:>8} "
            f"{str(pre_bloch(p, include_inversion=False)):>10} "
            f"{str(pre_bloch(p)):>8} {str(modified_bloch(p)):>9}  {ok}"
        )


if __name__ == "__main__":
    main()
