#!/usr/bin/env python3
"""Deciding ideal membership two ways: normal forms vs. brute force.

With a Groebner basis in hand, f lies in the ideal iff its normal form
is zero.  Because H(n) contains every field polynomial, the same
question can be settled by evaluating f on the enumerated solution set.
The two answers must always agree; the normal form additionally shows
the canonical remainder when they do not vanish.
"""

from boolgb import (
    buchberger,
    format_poly,
    ideal_membership,
    interreduce,
    make_H,
    membership_by_evaluation,
    normal_form,
    parse_poly,
)

N = 3
QUERIES = [
    "x1*z1 + x1",        # a T-family element: in the ideal
    "z1*z2*z3",          # the z product itself
    "z1*z2",             # NOT in: a solution may zero only block 3
    "x1",                # not in: some solution has x1 = 1
    "x1*y1 + x1 + y1",   # equals z1 on solutions, not in the ideal
    "1",                 # the ideal is proper
]


def main():
    H = make_H(N)
    basis = interreduce(buchberger(H)[0])
    print(f"reduced basis of H({N}): {len(basis)} elements\n")

    for text in QUERIES:
        f = parse_poly(text, N)
        nf = normal_form(f, basis)
        member = ideal_membership(f, basis)
        by_eval = membership_by_evaluation(f, H)
        flag = "OK " if member == by_eval else "BUG"
        print(f"[{flag}] f = {text}")
        print(f"      normal form = {format_poly(nf, basis.order)}")
        print(f"      member (algebra) = {member}, member (evaluation) = {by_eval}\n")


if __name__ == "__main__":
    main()
