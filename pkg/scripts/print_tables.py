"""Print the first terms of the main sequences side by side.

    python3 scripts/print_tables.py --r-max 4 --n-max 10
"""

import argparse

from rderange import sequences as seq


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=10)
    args = ap.parse_args()
    for r in range(args.r_max + 1):
        print(f"r = {r}")
        print(f"{'n':>3} {'D_r(n)':>14} {'even':>14} {'odd':>14} {'C_r(n)':>14}")
        for n in range(args.n_max + 1):
            even, odd = (seq.d_r_parity_recurrence(n, r, i) for i in (0, 1))
            print(f"{n:>3} {seq.d_r(n, r):>14} {even:>14} {odd:>14} {seq.c_r(n, r):>14}")
        print()


if __name__ == "__main__":
    main()
