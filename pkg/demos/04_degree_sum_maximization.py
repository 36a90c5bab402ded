"""Degree-sum maximization behind the even-order dichotomy.

Given half-order n, maximum degree Delta, repeated-degree bound beta, and a
common-neighborhood size |B|, the largest possible degree sum over the
split neighborhood has a three-case closed form.  This script evaluates it
on the full admissible grid and confirms it against exhaustive search.
"""

from collections import Counter

from degpath import domain_grid, lambda_bruteforce, lambda_closed


def main():
    insts = domain_grid([6, 7, 8])
    cases = Counter(inst.case for inst in insts)
    print(f"{len(insts)} instances on the grid; case split {dict(cases)}")

    mismatches = [inst for inst in insts
                  if lambda_closed(inst) != lambda_bruteforce(inst)]
    print(f"closed form vs brute force: {len(mismatches)} mismatches")

    print("\nsample rows (n=6, Delta=9):")
    print("  beta  |B|  case  value")
    for inst in insts:
        if inst.n == 6 and inst.delta == 9 and inst.b_size in (5, 6, 7):
            print(f"  {inst.beta:4d} {inst.b_size:4d} {inst.case:5d} "
                  f"{lambda_closed(inst):6d}")


if __name__ == "__main__":
    main()
