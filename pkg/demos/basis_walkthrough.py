#!/usr/bin/env python3
"""A guided tour of the three facts behind the blowup, at n = 2.

1. H(2) and G(2) cut out the same points of F2^6, so they generate the
   same (radical) ideal.
2. G(2) is itself the reduced Groebner basis of that ideal, for any
   total-degree order: running Buchberger on the 9 generators of H(2)
   must therefore reproduce all 21 elements of G(2) exactly.
3. Counting standard monomials ties the basis to the solution count:
   both equal 4^n - 3^n.
"""

from boolgb import (
    DEGLEX,
    DEGREVLEX,
    buchberger,
    count_standard_monomials,
    enumerate_solutions,
    format_poly,
    interreduce,
    is_groebner_basis,
    is_reduced_basis,
    make_G,
    make_H,
    solution_sets_equal,
)

N = 2


def main():
    H = make_H(N)
    G = make_G(N)
    print(f"H({N}): {len(H)} generators")
    for f in H:
        print("   ", format_poly(f))
    print(f"G({N}): {len(G)} generators (S + L + T + P)")

    print("\n-- same solutions ------------------------------------------")
    sols = enumerate_solutions(H)
    print(f"Sol(H) over F2^{3*N} has {len(sols)} points; "
          f"Sol(H) == Sol(G): {solution_sets_equal(H, G)}")
    print("each point fixes z_i = x_i*y_i + x_i + y_i and zeroes some block:")
    for p in sols.points():
        print("   ", p)

    print("\n-- G is the reduced basis ----------------------------------")
    print(f"is_groebner_basis(G): {is_groebner_basis(list(G.polynomials), DEGLEX)}")
    print(f"is_reduced_basis(G):  {is_reduced_basis(list(G.polynomials), DEGLEX)}")
    for order in (DEGLEX, DEGREVLEX):
        raw, stats = buchberger(make_H(N, order=order))
        basis = interreduce(raw)
        same = basis.as_set() == frozenset(make_G(N, order=order).polynomials)
        print(f"{order.scheme:>10}: |GB(H)| = {len(basis)}, equals G as a set: {same} "
              f"({stats.pairs_generated} pairs, "
              f"{stats.pairs_skipped_by_criteria} skipped by criteria)")

    print("\n-- dimension count -----------------------------------------")
    basis = interreduce(buchberger(H)[0])
    std = count_standard_monomials(basis)
    print(f"standard monomials: {std}, solutions: {len(sols)}, "
          f"4^{N}-3^{N} = {4**N - 3**N}")


if __name__ == "__main__":
    main()
