"""Brute-force ground truth over F2^(3n).

Points are encoded as integers: bit i carries the value of the flat
variable i.  Enumeration scans all 2^(3n) points, so it is the
independent oracle against which the algebraic engine is checked, valid
whenever the generator set contains (or, in boolean mode, implies) every
field polynomial — then all solutions over the algebraic closure are
already F2-valued and exhaustive scan sees the whole solution set.
"""

from .groebner import GeneratorSet
from .polyring import BOOLEAN, FULL, Polynomial, mono_support, mono_var

DEFAULT_MAX_BITS = 24  # enumeration cap: 3n <= 24, i.e. up to 2^24 points


class TooManyVariablesError(ValueError):
    """Enumeration request beyond the configured point cap."""


class ArityMismatchError(ValueError):
    """Point length does not match the polynomial's variable count."""


class FieldPolysMissingError(ValueError):
    """Evaluation-based membership is unsound without all field polynomials."""


class SolutionSet:
    """A set of F2^(3n) points stored as bit-encoded integers."""

    __slots__ = ("masks", "n")

    def __init__(self, masks, n: int):
        self.masks = frozenset(masks)
        self.n = n

    def points(self):
        """Decode to 0/1 tuples of length 3n, sorted by encoding."""
        nv = 3 * self.n
        return [tuple((p >> i) & 1 for i in range(nv)) for p in sorted(self.masks)]

    def __len__(self):
        return len(self.masks)

    def __eq__(self, other):
        return (isinstance(other, SolutionSet)
                and self.n == other.n and self.masks == other.masks)

    def __hash__(self):
        return hash((self.masks, self.n))

    def __contains__(self, point):
        return _point_mask(point, 3 * self.n) in self.masks

    def __repr__(self):
        return f"SolutionSet({len(self.masks)} points, n={self.n})"


def _point_mask(point, nvars: int) -> int:
    if isinstance(point, int):
        return point
    if len(point) != nvars:
        raise ArityMismatchError(
            f"point has {len(point)} coordinates, ring has {nvars}")
    mask = 0
    for i, v in enumerate(point):
        if v:
            mask |= 1 << i
    return mask


def evaluate(f: Polynomial, point) -> int:
    """Value of f at a point of F2^(3n) (0 or 1).

    The point is a 0/1 sequence indexed by flat variable id, or an
    already-encoded integer mask.  Exponents are irrelevant on {0,1}: a
    term evaluates to 1 iff all its variables are set.
    """
    p = _point_mask(point, f.nvars)
    value = 0
    for m in f.terms:
        tm = mono_support(m)
        if p & tm == tm:
            value ^= 1
    return value


def enumerate_solutions(F: GeneratorSet, max_bits: int = DEFAULT_MAX_BITS) -> SolutionSet:
    """All points of F2^(3n) where every generator vanishes.

    This equals the solution set over the algebraic closure exactly when
    F contains (or implies) all field polynomials; the caller asserts
    that.  Generators are tested smallest-support-first with early exit.
    """
    nvars = F.nvars
    if nvars > max_bits:
        raise TooManyVariablesError(
            f"{nvars} variables exceed the {max_bits}-bit enumeration cap")
    gens = []
    for f in F.polynomials:
        term_masks = tuple(mono_support(m) for m in f.terms)
        support = 0
        for tm in term_masks:
            support |= tm
        gens.append((support.bit_count(), term_masks))
    gens.sort(key=lambda g: g[0])
    term_lists = [tm for _, tm in gens]

    hits = []
    for p in range(1 << nvars):
        ok = True
        for term_masks in term_lists:
            value = 0
            for tm in term_masks:
                if p & tm == tm:
                    value ^= 1
            if value:
                ok = False
                break
        if ok:
            hits.append(p)
    return SolutionSet(hits, F.n)


def solution_sets_equal(F1: GeneratorSet, F2: GeneratorSet,
                        max_bits: int = DEFAULT_MAX_BITS) -> bool:
    """Exhaustive comparison of two solution sets over F2^(3n)."""
    if F1.nvars != F2.nvars:
        raise ValueError("generator sets live in different rings")
    return enumerate_solutions(F1, max_bits) == enumerate_solutions(F2, max_bits)


def has_all_field_polys(F: GeneratorSet) -> bool:
    """Structural check: c^2 + c present for every variable (full mode);
    boolean mode carries the field relations in the ring itself."""
    if F.mode == BOOLEAN:
        return True
    nv = F.nvars
    want = {
        Polynomial((mono_var(v, nv, 2), mono_var(v, nv)), nv, FULL)
        for v in range(nv)
    }
    return want <= set(F.polynomials)


def membership_by_evaluation(f: Polynomial, F: GeneratorSet,
                             max_bits: int = DEFAULT_MAX_BITS) -> bool:
    """True iff f vanishes on every enumerated solution of F.

    Equivalent to ideal membership when F contains all field polynomials
    (the ideal is then radical with all solutions in F2^(3n)); raises
    FieldPolysMissingError otherwise since the equivalence would be
    unsound.
    """
    if not has_all_field_polys(F):
        raise FieldPolysMissingError(
            "generator set lacks field polynomials; evaluation does not "
            "decide membership")
    term_masks = tuple(mono_support(m) for m in f.terms)
    for p in sorted(enumerate_solutions(F, max_bits).masks):
        value = 0
        for tm in term_masks:
            if p & tm == tm:
                value ^= 1
        if value:
            return False
    return True


def dump_solutions(S: SolutionSet) -> str:
    """Text dump: header '# n=<n> count=<k>' then sorted hex masks."""
    lines = [f"# n={S.n} count={len(S.masks)}"]
    lines.extend(format(p, "x") for p in sorted(S.masks))
    return "\n".join(lines) + "\n"


def load_solutions(text: str) -> SolutionSet:
    n = None
    masks = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            fields = dict(
                part.split("=", 1) for part in stripped[1:].split() if "=" in part)
            if "n" in fields:
                n = int(fields["n"])
            continue
        masks.append(int(stripped, 16))
    if n is None:
        raise ValueError("solution dump lacks '# n=<n>' header")
    return SolutionSet(masks, n)
