#!/usr/bin/env python3
"""Watch a 4n+1 generator set blow up into a 6n+3^n Groebner basis.

H(n) couples each block (x_i, y_i, z_i) through z_i = x_i*y_i + x_i + y_i
and adds the single product z_1*...*z_n on top of the field polynomials.
Its inputs stay tiny (degrees <= max(2, n), text size growing roughly
linearly) while the reduced total-degree basis grows like 3^n.

Usage: python demos/blowup_growth.py [n_max]   (default 5)
"""

import sys
import time

from boolgb import (
    buchberger,
    input_bitsize,
    interreduce,
    make_H,
    max_degree,
    predicted_gb_size,
)


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 5

    print(f"{'n':>2} {'|H(n)|':>7} {'bits':>6} {'maxdeg':>6} "
          f"{'|GB|':>6} {'6n+3^n':>7} {'seconds':>8}")
    for n in range(1, n_max + 1):
        H = make_H(n)
        start = time.perf_counter()
        raw, stats = buchberger(H)
        basis = interreduce(raw)
        elapsed = time.perf_counter() - start
        predicted = predicted_gb_size(n)
        marker = "" if len(basis) == predicted else "   <- n=1: G(n) is not reduced"
        print(f"{n:>2} {len(H):>7} {input_bitsize(H):>6} {max_degree(H):>6} "
              f"{len(basis):>6} {predicted:>7} {elapsed:>8.2f}{marker}")

    print()
    print("The input column grows linearly in n, the basis column like 3^n:")
    print("no polynomial in the input size can bound the output size.")


if __name__ == "__main__":
    main()
