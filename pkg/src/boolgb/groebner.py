"""Buchberger's algorithm over F2, normal forms, and basis predicates.

The engine runs in either ring mode.  In boolean mode the field
relations v*v = v are part of the arithmetic, so on top of the ordinary
S-pairs the algorithm processes one extra task per basis element f and
variable v in the support of lm(f): the normal form of v*f.  Without
those tasks the implicit field equations are not covered and the output
can fail to be a basis of the quotient ideal.

Pair selection is the normal strategy (smallest lcm degree, ties broken
by the monomial order on the lcm, then by pair index).  The update step
is Gebauer-Moeller style: it applies the product criterion (coprime
leading monomials) and the chain criterion.  Reduction is deterministic:
always the largest reducible monomial, divided by the first divisor in
list order.
"""

import heapq
import json
import time
from dataclasses import dataclass

from .polyring import (
    BOOLEAN,
    DEGLEX,
    FULL,
    ModeMismatchError,
    MonomialOrder,
    Polynomial,
    ZeroPolynomialError,
    get_order,
    mono_divides,
    mono_lcm,
    mono_support,
)


DEFAULT_MAX_PAIRS = 10 ** 6
DEFAULT_MAX_BASIS = 10 ** 5


class ResourceLimitError(RuntimeError):
    """A configured pair or basis cap was exceeded; stats are attached."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats


class NotAGroebnerBasisError(ValueError):
    """Strict interreduction found an element that does not reduce to zero."""


@dataclass
class ReductionStats:
    """Counters for one engine run."""

    pairs_generated: int = 0
    pairs_skipped_by_criteria: int = 0
    reductions_to_zero: int = 0
    wall_time: float = 0.0

    def as_block(self, basis_size=None) -> str:
        """Flat key=value block (one entry per line)."""
        lines = [
            f"pairsGenerated={self.pairs_generated}",
            f"pairsSkippedByCriteria={self.pairs_skipped_by_criteria}",
            f"reductionsToZero={self.reductions_to_zero}",
            f"wallTimeMs={int(self.wall_time * 1000)}",
        ]
        if basis_size is not None:
            lines.append(f"basisSize={basis_size}")
        return "\n".join(lines)


class GeneratorSet:
    """A finite set of nonzero generators in one ring mode, with an order.

    Zero polynomials are dropped and duplicates removed (first occurrence
    wins), so len(polynomials) is the true generator count.
    """

    __slots__ = ("polynomials", "order", "mode", "nvars", "n")

    def __init__(self, polynomials, order: MonomialOrder = DEGLEX):
        polys = []
        seen = set()
        for f in polynomials:
            if f.is_zero or f in seen:
                continue
            seen.add(f)
            polys.append(f)
        if not polys:
            raise ValueError("generator set needs at least one nonzero polynomial")
        mode = polys[0].mode
        nvars = polys[0].nvars
        for f in polys:
            if f.mode != mode or f.nvars != nvars:
                raise ValueError("generators must share one mode and variable count")
        self.polynomials = tuple(polys)
        self.order = order
        self.mode = mode
        self.nvars = nvars
        self.n = nvars // 3

    def __len__(self):
        return len(self.polynomials)

    def __iter__(self):
        return iter(self.polynomials)

    def __repr__(self):
        return (f"GeneratorSet({len(self.polynomials)} polynomials, "
                f"n={self.n}, mode={self.mode!r}, order={self.order.scheme})")


class GroebnerBasis:
    """A list of basis elements sorted ascending by leading monomial.

    The `reduced` flag is a cache, never a proof; verification predicates
    recompute the property.
    """

    __slots__ = ("elements", "order", "mode", "nvars", "n", "reduced")

    def __init__(self, elements, order: MonomialOrder, reduced: bool = False):
        elements = list(elements)
        if not elements:
            raise ValueError("basis needs at least one element")
        if any(f.is_zero for f in elements):
            raise ZeroPolynomialError("basis elements must be nonzero")
        mode = elements[0].mode
        nvars = elements[0].nvars
        for f in elements:
            if f.mode != mode or f.nvars != nvars:
                raise ModeMismatchError(
                    "basis elements must share one mode and variable count")
        elements.sort(key=lambda f: order.key(max(f.terms, key=order.key)))
        self.elements = tuple(elements)
        self.order = order
        self.mode = mode
        self.nvars = nvars
        self.n = nvars // 3
        self.reduced = reduced

    def leading_monomials(self):
        return [max(f.terms, key=self.order.key) for f in self.elements]

    def as_set(self):
        return frozenset(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return (f"GroebnerBasis({len(self.elements)} elements, n={self.n}, "
                f"mode={self.mode!r}, order={self.order.scheme}, reduced={self.reduced})")


# ---------------------------------------------------------------------------
# reduction

class _Reducer:
    """Working view of a reducer list with a divisor cache."""

    __slots__ = ("order", "mode", "lms", "masks", "tails", "hits", "misses")

    def __init__(self, order, mode):
        self.order = order
        self.mode = mode
        self.lms = []
        self.masks = []
        self.tails = []
        self.hits = {}    # monomial -> index of first divisor (stable: appends only)
        self.misses = {}  # currently irreducible monomial -> its support mask

    def append(self, terms):
        lm = max(terms, key=self.order.key)
        mask = mono_support(lm)
        self.lms.append(lm)
        self.masks.append(mask)
        self.tails.append(tuple(terms - {lm}))
        if self.misses:
            self.misses = {
                m: mk for m, mk in self.misses.items()
                if mask & mk != mask or not mono_divides(lm, m)
            }

    def find_divisor(self, m, msup):
        if m in self.misses:
            return -1
        idx = self.hits.get(m)
        if idx is not None:
            return idx
        lms = self.lms
        masks = self.masks
        for i in range(len(lms)):
            if masks[i] & msup == masks[i] and mono_divides(lms[i], m):
                self.hits[m] = i
                return i
        self.misses[m] = msup
        return -1


def _reduce_terms(terms, red: _Reducer):
    """Full normal form of a term set against the reducers.

    Processes monomials largest-first via a heap; every replacement
    monomial is strictly smaller than the one it replaces, so a single
    descending pass is complete.  Duplicate heap entries cancel in pairs
    (coefficients are mod 2).
    """
    order = red.order
    negkey = order.negkey
    boolean = red.mode == BOOLEAN
    heap = [(negkey(m), m) for m in terms]
    heapq.heapify(heap)
    out = []
    while heap:
        _, m = heapq.heappop(heap)
        count = 1
        while heap and heap[0][1] == m:
            heapq.heappop(heap)
            count += 1
        if count % 2 == 0:
            continue
        msup = mono_support(m)
        i = red.find_divisor(m, msup)
        if i < 0:
            out.append(m)
            continue
        q = tuple(a - b for a, b in zip(m, red.lms[i]))
        for t in red.tails[i]:
            if boolean:
                prod = tuple(map(max, q, t))
            else:
                prod = tuple(a + b for a, b in zip(q, t))
            heapq.heappush(heap, (negkey(prod), prod))
    return frozenset(out)


def _make_reducer(polys, order, mode):
    red = _Reducer(order, mode)
    for g in polys:
        red.append(g.terms)
    return red


def normal_form(f: Polynomial, G, order: MonomialOrder = DEGLEX) -> Polynomial:
    """Remainder of f under multivariate division by the list G.

    No monomial of the result is divisible by any leading monomial of G,
    and the result is congruent to f modulo the ideal (G).  G may be a
    GroebnerBasis or any list of nonzero polynomials; the zero input is
    allowed and maps to zero.
    """
    if isinstance(G, GroebnerBasis):
        order = G.order
        G = G.elements
    G = list(G)
    if not G or f.is_zero:
        return f
    for g in G:
        if g.is_zero:
            raise ZeroPolynomialError("reducers must be nonzero")
        if g.mode != f.mode or g.nvars != f.nvars:
            raise ModeMismatchError(
                "reducers must match the mode and variable count of f")
    red = _make_reducer(G, order, f.mode)
    return Polynomial(_reduce_terms(f.terms, red), f.nvars, f.mode)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGLEX) -> Polynomial:
    """S-polynomial (lcm/lm(f))*f + (lcm/lm(g))*g; signs vanish over F2."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("s_polynomial requires nonzero operands")
    if f.mode != g.mode or f.nvars != g.nvars:
        raise ModeMismatchError("operands must share one mode and variable count")
    lmf = max(f.terms, key=order.key)
    lmg = max(g.terms, key=order.key)
    lcm = mono_lcm(lmf, lmg)
    qf = tuple(a - b for a, b in zip(lcm, lmf))
    qg = tuple(a - b for a, b in zip(lcm, lmg))
    boolean = f.mode == BOOLEAN
    acc = set()
    for src, q in ((f.terms, qf), (g.terms, qg)):
        for t in src:
            if boolean:
                m = tuple(map(max, q, t))
            else:
                m = tuple(a + b for a, b in zip(q, t))
            if m in acc:
                acc.discard(m)
            else:
                acc.add(m)
    return Polynomial(acc, f.nvars, f.mode)


# ---------------------------------------------------------------------------
# Buchberger

def _spoly_terms(red: _Reducer, i: int, j: int, full_terms):
    """Term set of the S-polynomial of working elements i and j."""
    lmi, lmj = red.lms[i], red.lms[j]
    lcm = mono_lcm(lmi, lmj)
    boolean = red.mode == BOOLEAN
    acc = set()
    for idx, lm in ((i, lmi), (j, lmj)):
        q = tuple(a - b for a, b in zip(lcm, lm))
        for t in full_terms[idx]:
            if boolean:
                m = tuple(map(max, q, t))
            else:
                m = tuple(a + b for a, b in zip(q, t))
            if m in acc:
                acc.discard(m)
            else:
                acc.add(m)
    return acc


def buchberger(F: GeneratorSet, max_pairs: int = DEFAULT_MAX_PAIRS,
               max_basis: int = DEFAULT_MAX_BASIS):
    """Compute a (not yet reduced) Groebner basis of (F).

    Returns (GroebnerBasis with reduced=False, ReductionStats).  Raises
    ResourceLimitError, with the stats so far attached, when more than
    max_pairs candidate pairs are generated or the working basis exceeds
    max_basis elements.
    """
    order = F.order
    mode = F.mode
    keyf = order.key
    t0 = time.perf_counter()
    stats = ReductionStats()

    red = _Reducer(order, mode)
    full_terms = []   # term sets of working elements
    live = {}         # live ordinary pairs: (i, j) -> (lcm_mask, lcm)
    heap = []         # (selection key, kind, i, j); pruned pairs skipped at pop

    def push_pair(i, j, lcm):
        live[(i, j)] = (mono_support(lcm), lcm)
        heapq.heappush(heap, ((sum(lcm), keyf(lcm), 0, i, j), 0, i, j))

    def update(new_terms):
        """Gebauer-Moeller insertion of a new element."""
        t = len(full_terms)
        if t + 1 > max_basis:
            stats.wall_time = time.perf_counter() - t0
            raise ResourceLimitError(f"basis cap exceeded ({max_basis})", stats)
        lmf = max(new_terms, key=keyf)
        maskf = mono_support(lmf)
        lms = red.lms
        masks = red.masks

        stats.pairs_generated += t
        # chain criterion: prune existing pairs made redundant by the new lm
        for (i, j), (lcm_mask, lcm_ij) in list(live.items()):
            if maskf & lcm_mask != maskf or not mono_divides(lmf, lcm_ij):
                continue
            if mono_lcm(lms[i], lmf) != lcm_ij and mono_lcm(lms[j], lmf) != lcm_ij:
                del live[(i, j)]
                stats.pairs_skipped_by_criteria += 1

        # group candidate pairs by lcm, keep one representative per minimal lcm
        groups = {}
        for i in range(t):
            groups.setdefault(mono_lcm(lms[i], lmf), []).append(i)
        minimal = []
        for lcm in sorted(groups, key=lambda L: (sum(L), keyf(L))):
            if any(mono_divides(prev, lcm) for prev in minimal):
                stats.pairs_skipped_by_criteria += len(groups[lcm])
                continue
            minimal.append(lcm)
            members = groups[lcm]
            # product criterion: coprime leading monomials reduce to zero
            if any(masks[i] & maskf == 0 for i in members):
                stats.pairs_skipped_by_criteria += len(members)
            else:
                push_pair(min(members), t, lcm)
                stats.pairs_skipped_by_criteria += len(members) - 1

        full_terms.append(frozenset(new_terms))
        red.append(full_terms[-1])
        if mode == BOOLEAN:
            for v, e in enumerate(lmf):
                if e:
                    stats.pairs_generated += 1
                    heapq.heappush(
                        heap, ((sum(lmf), keyf(lmf), 1, t, v), 1, t, v))
        if stats.pairs_generated > max_pairs:
            stats.wall_time = time.perf_counter() - t0
            raise ResourceLimitError(f"pair cap exceeded ({max_pairs})", stats)

    for f in F.polynomials:
        update(f.terms)

    while heap:
        _, kind, i, j = heapq.heappop(heap)
        if kind == 0:
            if (i, j) not in live:
                continue  # pruned by the chain criterion after being queued
            del live[(i, j)]
            if len(full_terms[i]) == 1 and len(full_terms[j]) == 1:
                # S-polynomial of two monomials is identically zero over F2
                stats.reductions_to_zero += 1
                continue
            s_terms = _spoly_terms(red, i, j, full_terms)
        else:
            v = j
            s_terms = set()
            for t in full_terms[i]:
                m = list(t)
                m[v] = 1
                m = tuple(m)
                if m in s_terms:
                    s_terms.discard(m)
                else:
                    s_terms.add(m)
        r = _reduce_terms(s_terms, red) if s_terms else frozenset()
        if r:
            update(r)
        else:
            stats.reductions_to_zero += 1

    stats.wall_time = time.perf_counter() - t0
    basis = GroebnerBasis(
        [Polynomial(t, F.nvars, mode) for t in full_terms], order, reduced=False)
    return basis, stats


# ---------------------------------------------------------------------------
# interreduction and predicates

def interreduce(G: GroebnerBasis, strict: bool = False) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal of G (same order).

    Keeps only elements whose leading monomial is divisible by no other
    kept leading monomial, then fully normal-forms every tail.  Over F2
    everything is monic already.  With strict=True, every discarded
    element is checked to reduce to zero against the result
    (NotAGroebnerBasisError otherwise).
    """
    order = G.order
    keyf = order.key
    elems = sorted(G.elements, key=lambda f: keyf(max(f.terms, key=keyf)))
    kept = []
    kept_lms = []
    removed = []
    for f in elems:
        lmf = max(f.terms, key=keyf)
        if any(mono_divides(lm, lmf) for lm in kept_lms):
            removed.append(f)
        else:
            kept.append(f)
            kept_lms.append(lmf)
    for i in range(len(kept)):
        others = kept[:i] + kept[i + 1:]
        if others:
            kept[i] = normal_form(kept[i], others, order)
    result = GroebnerBasis(kept, order, reduced=True)
    if strict:
        for f in removed:
            if not normal_form(f, result).is_zero:
                raise NotAGroebnerBasisError(
                    "discarded element does not reduce to zero; "
                    "input was not a Groebner basis")
    return result


def _pairs_to_check(polys, order, use_criteria):
    """Index pairs whose S-polynomials must reduce to zero."""
    lms = [max(f.terms, key=order.key) for f in polys]
    masks = [mono_support(lm) for lm in lms]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if use_criteria and masks[i] & masks[j] == 0:
                continue  # product criterion: provably reduces to zero
            yield i, j


def is_groebner_basis(polys, order: MonomialOrder = DEGLEX,
                      use_criteria: bool = True) -> bool:
    """True iff every S-polynomial of a pair reduces to zero against the list.

    With use_criteria=False the check is fully exhaustive (no pair is
    skipped).  In boolean mode the implicit field tasks v*f are checked
    as well.
    """
    polys = list(polys)
    if isinstance(order, str):
        order = get_order(order)
    red = _make_reducer(polys, order, polys[0].mode)
    full_terms = [f.terms for f in polys]
    for i, j in _pairs_to_check(polys, order, use_criteria):
        if len(full_terms[i]) == 1 and len(full_terms[j]) == 1:
            continue  # monomial pair: S-polynomial is zero over F2
        s_terms = _spoly_terms(red, i, j, full_terms)
        if s_terms and _reduce_terms(s_terms, red):
            return False
    if polys[0].mode == BOOLEAN:
        for i, f in enumerate(polys):
            for v, e in enumerate(red.lms[i]):
                if not e:
                    continue
                acc = set()
                for t in full_terms[i]:
                    m = list(t)
                    m[v] = 1
                    m = tuple(m)
                    acc.symmetric_difference_update((m,))
                if acc and _reduce_terms(acc, red):
                    return False
    return True


def is_reduced_basis(polys, order: MonomialOrder = DEGLEX) -> bool:
    """True iff leading monomials are pairwise non-divisible and all tails
    are reduced (no monomial of any element divisible by another's lm)."""
    polys = list(polys)
    lms = [max(f.terms, key=order.key) for f in polys]
    masks = [mono_support(lm) for lm in lms]
    for i in range(len(polys)):
        for j in range(len(polys)):
            if i == j:
                continue
            for m in polys[i].terms:
                msup = mono_support(m)
                if masks[j] & msup == masks[j] and mono_divides(lms[j], m):
                    return False
    return True


def ideal_membership(f: Polynomial, G: GroebnerBasis) -> bool:
    """True iff f lies in the ideal of the Groebner basis G (normal form 0)."""
    return normal_form(f, G).is_zero


def groebner_basis(F: GeneratorSet, max_pairs: int = DEFAULT_MAX_PAIRS,
                   max_basis: int = DEFAULT_MAX_BASIS, strict: bool = False):
    """Reduced Groebner basis of (F): buchberger followed by interreduce."""
    raw, stats = buchberger(F, max_pairs=max_pairs, max_basis=max_basis)
    return interreduce(raw, strict=strict), stats


# ---------------------------------------------------------------------------
# basis dump format

def dump_basis(G: GroebnerBasis) -> str:
    """JSON text: {n, mode, order, elements}; elements ascending by leading
    monomial, monomials within an element descending (leading first),
    each monomial a sparse [[varFlat, exp], ...] list."""
    keyf = G.order.key
    elements = []
    for f in G.elements:
        monos = sorted(f.terms, key=keyf, reverse=True)
        elements.append([[[i, e] for i, e in enumerate(m) if e] for m in monos])
    payload = {
        "n": G.n,
        "mode": G.mode,
        "order": G.order.scheme,
        "elements": elements,
    }
    return json.dumps(payload)


def load_basis(text: str) -> GroebnerBasis:
    """Parse a dump_basis document.  The reduced flag is not part of the
    schema and is restored as False (flags are caches, never proofs)."""
    payload = json.loads(text)
    n = payload["n"]
    mode = payload["mode"]
    if mode not in (FULL, BOOLEAN):
        raise ValueError(f"unknown mode in basis dump: {mode!r}")
    order = get_order(payload["order"])
    nvars = 3 * n
    polys = []
    for element in payload["elements"]:
        terms = set()
        for sparse in element:
            m = [0] * nvars
            for flat, exp in sparse:
                m[flat] = exp
            terms.add(tuple(m))
        polys.append(Polynomial(terms, nvars, mode))
    return GroebnerBasis(polys, order, reduced=False)
