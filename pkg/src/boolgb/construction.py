"""Generator families over F2 and their size/degree metrics.

The families live in 3n variables x_i, y_i, z_i (blocks i = 1..n):

  S(n)  field polynomials c^2 + c, one per variable        (3n elements)
  L(n)  x_i*y_i + x_i + y_i + z_i                          (n elements)
  T(n)  x_i*z_i + x_i  and  y_i*z_i + y_i                  (2n elements)
  P(n)  all products c_1*...*c_n with c_i in {x_i,y_i,z_i} (3^n elements)

  H(n) = S + L + {z_1*...*z_n}      (4n+1 elements)
  G(n) = S + L + T + P              (6n+3^n elements)

H(n) generates the same ideal as G(n), and for n > 1 the set G(n) is the
reduced total-degree Groebner basis of that ideal, so the input of size
4n+1 blows up to a basis of size 6n+3^n.
"""

import itertools
from dataclasses import dataclass
from typing import Optional

from .groebner import GeneratorSet, GroebnerBasis, ResourceLimitError
from .polyring import (
    DEGLEX,
    FULL,
    MonomialOrder,
    Polynomial,
    format_poly,
    mono_divides,
    mono_support,
    mono_var,
    num_vars,
    parse_poly,
    var_flat,
)

# P(n) has 3^n elements; refuse to materialize beyond this block count.
DEFAULT_MAX_N = 12


class NotZeroDimensionalError(ValueError):
    """Standard-monomial counting needs a pure-power leading monomial per variable."""


@dataclass(frozen=True)
class InstanceParams:
    """Parameters of one generator-family instance."""

    n: int
    mode: str = FULL
    order: MonomialOrder = DEGLEX


@dataclass
class GrowthRecord:
    """One row of the growth table (bench output)."""

    n: int
    input_count: int
    input_bitsize: int
    input_max_degree: int
    gb_count: Optional[int]
    predicted_gb_count: int
    solution_count: Optional[int]
    predicted_solution_count: int
    wall_time: float

    CSV_HEADER = ("n,inputCount,inputBitsize,inputMaxDegree,gbCount,"
                  "predictedGbCount,solutionCount,predictedSolutionCount,wallTimeMs")

    def csv_row(self) -> str:
        gb = "" if self.gb_count is None else str(self.gb_count)
        sol = "" if self.solution_count is None else str(self.solution_count)
        return (f"{self.n},{self.input_count},{self.input_bitsize},"
                f"{self.input_max_degree},{gb},{self.predicted_gb_count},"
                f"{sol},{self.predicted_solution_count},{int(self.wall_time * 1000)}")


def _check_n(n: int):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def make_S(n: int):
    """Field polynomials c^2 + c in flat variable order (full mode only)."""
    _check_n(n)
    nv = num_vars(n)
    return [Polynomial((mono_var(v, nv, 2), mono_var(v, nv)), nv, FULL)
            for v in range(nv)]


def make_L(n: int, mode: str = FULL):
    """The n polynomials x_i*y_i + x_i + y_i + z_i."""
    _check_n(n)
    nv = num_vars(n)
    out = []
    for i in range(1, n + 1):
        x, y, z = var_flat("x", i), var_flat("y", i), var_flat("z", i)
        xy = [0] * nv
        xy[x] = 1
        xy[y] = 1
        out.append(Polynomial(
            (tuple(xy), mono_var(x, nv), mono_var(y, nv), mono_var(z, nv)), nv, mode))
    return out


def make_T(n: int, mode: str = FULL):
    """The 2n polynomials x_i*z_i + x_i and y_i*z_i + y_i."""
    _check_n(n)
    nv = num_vars(n)
    out = []
    for kind in ("x", "y"):
        for i in range(1, n + 1):
            c, z = var_flat(kind, i), var_flat("z", i)
            cz = [0] * nv
            cz[c] = 1
            cz[z] = 1
            out.append(Polynomial((tuple(cz), mono_var(c, nv)), nv, mode))
    return out


def make_P(n: int, mode: str = FULL, max_n: int = DEFAULT_MAX_N):
    """All 3^n products c_1*...*c_n, c_i in {x_i, y_i, z_i}, enumerated in
    lexicographic choice order (x before y before z in each block)."""
    _check_n(n)
    if n > max_n:
        raise ResourceLimitError(f"P({n}) has 3^{n} elements; cap is n <= {max_n}")
    nv = num_vars(n)
    out = []
    choices = [(var_flat("x", i), var_flat("y", i), var_flat("z", i))
               for i in range(1, n + 1)]
    for pick in itertools.product(*choices):
        m = [0] * nv
        for v in pick:
            m[v] = 1
        out.append(Polynomial((tuple(m),), nv, mode))
    return out


def z_product(n: int, mode: str = FULL) -> Polynomial:
    """The single monomial z_1*z_2*...*z_n."""
    _check_n(n)
    nv = num_vars(n)
    m = [0] * nv
    for i in range(1, n + 1):
        m[var_flat("z", i)] = 1
    return Polynomial((tuple(m),), nv, mode)


def make_H(n: int, mode: str = FULL, order: MonomialOrder = DEGLEX) -> GeneratorSet:
    """H(n) = S + L + {z_1*...*z_n}; 4n+1 generators in full mode.

    In boolean mode the field polynomials vanish (c^2 + c = c + c = 0),
    leaving the n+1 generators that present the same quotient ideal.
    """
    polys = []
    if mode == FULL:
        polys.extend(make_S(n))
    polys.extend(make_L(n, mode))
    polys.append(z_product(n, mode))
    return GeneratorSet(polys, order)


def make_G(n: int, mode: str = FULL, order: MonomialOrder = DEGLEX,
           max_n: int = DEFAULT_MAX_N) -> GeneratorSet:
    """G(n) = S + L + T + P; 6n+3^n generators in full mode."""
    polys = []
    if mode == FULL:
        polys.extend(make_S(n))
    polys.extend(make_L(n, mode))
    polys.extend(make_T(n, mode))
    polys.extend(make_P(n, mode, max_n=max_n))
    return GeneratorSet(polys, order)


FAMILIES = {
    "S": lambda n, mode: make_S(n),
    "L": make_L,
    "T": make_T,
    "P": make_P,
}


def make_family(name: str, n: int, mode: str = FULL,
                order: MonomialOrder = DEGLEX) -> GeneratorSet:
    """Build any of the named families H, G, S, L, T, P as a GeneratorSet."""
    if name == "H":
        return make_H(n, mode, order)
    if name == "G":
        return make_G(n, mode, order)
    if name in FAMILIES:
        return GeneratorSet(FAMILIES[name](n, mode), order)
    raise ValueError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# metrics and predictions

def _poly_list(F):
    if isinstance(F, GeneratorSet):
        return F.polynomials, F.order
    return list(F), DEGLEX


def generators_text(F) -> str:
    """Canonical text of a generator set: one polynomial per line, terms
    descending under the set's order, '+' only.  Accepts a GeneratorSet
    or a plain iterable of polynomials (then deglex ordering)."""
    polys, order = _poly_list(F)
    lines = [format_poly(f, order) for f in polys]
    return "\n".join(lines) + "\n" if lines else ""


def input_bitsize(F) -> int:
    """8 x byte length of the canonical text serialization."""
    return 8 * len(generators_text(F).encode("ascii"))


def max_degree(F) -> int:
    """Largest total degree of any term of any generator."""
    polys, _ = _poly_list(F)
    return max((f.degree() for f in polys), default=0)


def predicted_gb_size(n: int) -> int:
    """6n + 3^n, the size of the reduced basis for n > 1."""
    _check_n(n)
    return 6 * n + 3 ** n


def predicted_solution_count(n: int) -> int:
    """4^n - 3^n, the number of F2 points cut out by H(n)."""
    _check_n(n)
    return 4 ** n - 3 ** n


def count_standard_monomials(G: GroebnerBasis, n: Optional[int] = None) -> int:
    """Number of monomials divisible by no leading monomial of G.

    Requires a pure-power leading monomial c^k for every variable (the
    ideal is zero-dimensional with per-variable bound k); candidates are
    enumerated inside the resulting exponent box.  For the H and G
    families every bound is 2, giving 2^(3n) squarefree candidates.
    """
    nvars = G.nvars
    lms = G.leading_monomials()
    if any(not any(lm) for lm in lms):
        return 0  # the ideal is the whole ring; nothing is standard
    bounds = [None] * nvars
    for lm in lms:
        support = [v for v, e in enumerate(lm) if e]
        if len(support) == 1:
            v = support[0]
            if bounds[v] is None or lm[v] < bounds[v]:
                bounds[v] = lm[v]
    missing = [v for v, b in enumerate(bounds) if b is None]
    if missing:
        raise NotZeroDimensionalError(
            f"no pure-power leading monomial for variable(s) {missing}; "
            f"cannot bound the quotient")
    lm_data = [(mono_support(lm), lm) for lm in lms]
    count = 0
    for cand in itertools.product(*(range(b) for b in bounds)):
        csup = mono_support(cand)
        for mask, lm in lm_data:
            if mask & csup == mask and mono_divides(lm, cand):
                break
        else:
            count += 1
    return count


# ---------------------------------------------------------------------------
# generator-set files

def save_generators(F: GeneratorSet, path: str):
    """Write the canonical generator-set file: header plus one polynomial
    per line ('#' starts a comment)."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_generator_file(F))


def format_generator_file(F: GeneratorSet) -> str:
    return f"# n={F.n} mode={F.mode}\n" + generators_text(F)


def parse_generator_file(text: str, order: MonomialOrder = DEGLEX) -> GeneratorSet:
    """Read a generator-set file produced by save_generators."""
    n = None
    mode = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            fields = dict(
                part.split("=", 1) for part in stripped[1:].split() if "=" in part)
            if "n" in fields:
                n = int(fields["n"])
            if "mode" in fields:
                mode = fields["mode"]
            continue
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if n is None or mode is None:
            raise ValueError(
                f"line {lineno}: polynomial before '# n=<n> mode=<mode>' header")
        polys.append(parse_poly(body, n, mode))
    if not polys:
        raise ValueError("generator file contains no polynomials")
    return GeneratorSet(polys, order)


def load_generators(path: str, order: MonomialOrder = DEGLEX) -> GeneratorSet:
    with open(path, "r", encoding="ascii") as fh:
        return parse_generator_file(fh.read(), order)
