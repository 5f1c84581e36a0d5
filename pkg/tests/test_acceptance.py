"""Acceptance suite: one test per gating criterion, exact tolerances.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS/FAIL
line per criterion.  The n=6 stretch target is not gating and runs only
when BOOLGB_STRETCH=1 is set.
"""

import os
import random
from contextlib import contextmanager

import pytest

from boolgb import (
    BOOLEAN,
    DEGLEX,
    FULL,
    GeneratorSet,
    GroebnerBasis,
    buchberger,
    count_standard_monomials,
    enumerate_solutions,
    format_poly,
    ideal_membership,
    interreduce,
    is_groebner_basis,
    is_reduced_basis,
    make_G,
    make_H,
    make_S,
    membership_by_evaluation,
    normal_form,
    parse_poly,
    poly_add,
    poly_mul,
    solution_sets_equal,
    to_full,
)
from boolgb.cli import main as cli_main
from test_polyring import random_poly


@contextmanager
def report(name):
    try:
        yield
    except BaseException:
        print(f"[ACCEPTANCE] {name}: FAIL")
        raise
    print(f"[ACCEPTANCE] {name}: PASS")


def test_blowup_reproduction(reduced_h):
    """Reduced deglex basis of H(n) has exactly 6n+3^n elements, n=2..5."""
    with report("blowup 4n+1 -> 6n+3^n, n=2..5, exact"):
        for n, expected in ((2, 21), (3, 45), (4, 105), (5, 273)):
            basis, elapsed = reduced_h(n)
            assert len(basis) == expected, (n, len(basis))
            limit = 120.0 if n == 5 else 10.0
            assert elapsed < limit, f"n={n} took {elapsed:.1f}s (limit {limit}s)"


@pytest.mark.skipif(os.environ.get("BOOLGB_STRETCH") != "1",
                    reason="stretch target; set BOOLGB_STRETCH=1 to run")
def test_blowup_stretch_n6(reduced_h):
    with report("stretch n=6 -> 765 elements under 15 min"):
        basis, elapsed = reduced_h(6)
        assert len(basis) == 765
        assert elapsed < 900.0


def test_basis_identity(reduced_h):
    """interreduce(buchberger(H(n))) equals G(n) as a set, both orders, n=2..4."""
    with report("basis identity GB(H)=G for n=2..4, deglex and degrevlex"):
        for n in (2, 3, 4):
            for scheme in ("deglex", "degrevlex"):
                basis, _ = reduced_h(n, scheme)
                expected = frozenset(make_G(n).polynomials)
                assert basis.as_set() == expected, (n, scheme)
                # same check through canonical serializations
                got = sorted(format_poly(f, basis.order) for f in basis)
                want = sorted(format_poly(f, basis.order)
                              for f in make_G(n).polynomials)
                assert got == want


def test_solution_set_identity():
    """Sol(H(n)) == Sol(G(n)) by exhaustive enumeration, n=1..4."""
    with report("solution-set identity Sol(H)=Sol(G), n=1..4"):
        for n in (1, 2, 3, 4):
            assert solution_sets_equal(make_H(n), make_G(n)), n


def test_counting_identities(reduced_h):
    """|Sol(H(n))| = 4^n-3^n (n=1..5); standard monomials likewise (n=2..5)."""
    with report("counting: solutions and standard monomials = 4^n-3^n"):
        for n in (1, 2, 3, 4, 5):
            assert len(enumerate_solutions(make_H(n))) == 4 ** n - 3 ** n, n
        for n in (2, 3, 4, 5):
            basis, _ = reduced_h(n)
            assert count_standard_monomials(basis) == 4 ** n - 3 ** n, n


def test_reducedness_boundary():
    """G(n) reduced for n=2..5 but not n=1; Groebner for n=2..4 exhaustively."""
    with report("reducedness boundary: reduced iff n>1; exhaustive closure n=2..4"):
        assert not is_reduced_basis(list(make_G(1).polynomials), DEGLEX)
        for n in (2, 3, 4, 5):
            assert is_reduced_basis(list(make_G(n).polynomials), DEGLEX), n
        for n in (2, 3, 4):
            assert is_groebner_basis(list(make_G(n).polynomials), DEGLEX,
                                     use_criteria=False), n


def test_growth_table(tmp_path, capsys):
    """cmd_bench rows for n=2..5: inputCount=4n+1, gbCount=6n+3^n, bitsize<=c*n^2."""
    with report("growth table via bench, n=2..5"):
        out = tmp_path / "growth.csv"
        rc = cli_main(["bench", "--n", "2", "--n-max", "5", "--out", str(out)])
        capsys.readouterr()
        assert rc == 0
        lines = out.read_text().splitlines()
        rows = [dict(zip(lines[0].split(","), line.split(",")))
                for line in lines[1:]]
        assert len(rows) == 4
        for row in rows:
            n = int(row["n"])
            assert int(row["inputCount"]) == 4 * n + 1
            assert row["gbCount"] != "", f"n={n} row incomplete"
            assert int(row["gbCount"]) - int(row["predictedGbCount"]) == 0
            assert int(row["predictedGbCount"]) == 6 * n + 3 ** n
        c = int(rows[0]["inputBitsize"]) / 4  # fixed by the n=2 measurement
        for row in rows:
            n = int(row["n"])
            assert int(row["inputBitsize"]) <= c * n * n


def test_oracle_algebra_equivalence(reduced_h):
    """Membership via reduced basis == membership by evaluation, 200 random
    polynomials per n for n=1..3, 100% agreement."""
    with report("oracle/algebra equivalence, 200 random polys per n=1..3"):
        rng = random.Random(101)
        for n in (1, 2, 3):
            H = make_H(n)
            basis, _ = reduced_h(n)
            agree = 0
            for _ in range(200):
                f = random_poly(rng, n, FULL, max_terms=6)
                alg = ideal_membership(f, basis)
                ora = membership_by_evaluation(f, H)
                agree += alg == ora
            assert agree == 200, (n, agree)


def _via_boolean_engine(F_bool, n, order):
    raw, _ = buchberger(F_bool)
    red = interreduce(raw)
    lifted = [to_full(g) for g in red.elements] + list(make_S(n))
    return interreduce(GroebnerBasis(lifted, order, reduced=False))


def test_engine_cross_validation(reduced_h):
    """Boolean-engine bases, lifted and joined with the field polynomials,
    match full-engine bases: H(n) for n=2..4 and 50 random systems."""
    with report("engine cross-validation: H n=2..4 plus 50 random systems"):
        for n in (2, 3, 4):
            full_basis, _ = reduced_h(n)
            via_bool = _via_boolean_engine(make_H(n, mode=BOOLEAN), n, DEGLEX)
            assert via_bool.as_set() == full_basis.as_set(), n

        rng = random.Random(103)
        checked = 0
        while checked < 50:
            n = 3  # 9 variables
            gens = [random_poly(rng, n, BOOLEAN, max_terms=4)
                    for _ in range(rng.randint(1, 5))]
            gens = [g for g in gens if not g.is_zero and g.degree() <= 3]
            if not gens:
                continue
            F_bool = GeneratorSet(gens, DEGLEX)
            F_full = GeneratorSet([to_full(g) for g in gens] + list(make_S(n)),
                                  DEGLEX)
            full_red = interreduce(buchberger(F_full)[0])
            assert _via_boolean_engine(F_bool, n, DEGLEX).as_set() == full_red.as_set()
            checked += 1


def test_property_suites(reduced_h):
    """Ring axioms, boolean idempotence, normal-form laws, text round-trip:
    at least 1000 randomized cases each, zero failures."""
    with report("property suites, >=1000 randomized cases each"):
        rng = random.Random(107)

        for _ in range(1000):  # ring axioms
            mode = rng.choice((FULL, BOOLEAN))
            n = rng.randint(1, 3)
            f = random_poly(rng, n, mode)
            g = random_poly(rng, n, mode)
            h = random_poly(rng, n, mode)
            assert poly_add(f, g) == poly_add(g, f)
            assert poly_add(poly_add(f, g), h) == poly_add(f, poly_add(g, h))
            assert poly_add(poly_add(f, g), g) == f
            assert poly_mul(f, poly_add(g, h)) == poly_add(poly_mul(f, g),
                                                           poly_mul(f, h))

        for _ in range(1000):  # boolean idempotence
            f = random_poly(rng, rng.randint(1, 4), BOOLEAN)
            assert poly_mul(f, f) == f

        basis, _ = reduced_h(2)
        for _ in range(1000):  # normal-form idempotence and congruence
            f = random_poly(rng, 2, FULL, max_terms=6)
            r = normal_form(f, basis)
            assert normal_form(r, basis) == r
            assert normal_form(poly_add(f, r), basis).is_zero

        from boolgb import DEGREVLEX
        for _ in range(1000):  # parse/format round-trip
            mode = rng.choice((FULL, BOOLEAN))
            n = rng.randint(1, 4)
            f = random_poly(rng, n, mode)
            order = rng.choice((DEGLEX, DEGREVLEX))
            assert parse_poly(format_poly(f, order), n, mode) == f
