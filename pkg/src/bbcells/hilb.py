"""Cells of the Hilbert scheme of points on the plane.

Torus-fixed points are monomial ideals, indexed by partitions via their
staircases.  The bigraded tangent character at a fixed point is computed
two independent ways: degreewise linear algebra on homomorphisms out of the
ideal, and the arm/leg combinatorics of the Young diagram.  Cell and
cell-intersection dimensions are half-space counts on that character.

Convention: the box diagram of a partition (p_1 >= p_2 >= ...) has row j
(the exponent of y) of length p_{j+1}; the single-box partition has tangent
character {(1,0), (0,1)}.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonGenericWeight


@dataclass(frozen=True)
class MonomialIdealPlane:
    partition: tuple  # weakly decreasing positive parts
    minimal_generators: tuple  # staircase corners (a, b), a increasing


def partitions(d):
    """All partitions of d in reverse lexicographic order: (d) first."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d == 0:
        return [()]
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(d, d, [])
    return out


def transpose(partition):
    if not partition:
        return ()
    return tuple(
        sum(1 for p in partition if p > i) for i in range(partition[0])
    )


def ideal_from_partition(partition):
    """Monomial ideal whose standard monomials x^a y^b fill the diagram:
    row b holds the exponents a < partition[b]."""
    partition = tuple(partition)
    if any(p < 1 for p in partition) or any(
        a < b for a, b in zip(partition, partition[1:])
    ):
        raise ValueError("parts must be positive and weakly decreasing")
    rows = len(partition)
    # corners: y^rows, and (partition[b], b) at each strict drop of the staircase
    gens = [(0, rows)]
    for b in range(rows):
        if b == 0 or partition[b] < partition[b - 1]:
            gens.append((partition[b], b))
    gens = sorted(gens)
    return MonomialIdealPlane(partition=partition, minimal_generators=tuple(gens))


def standard_exponents(partition):
    """Boxes of the diagram as (a, b) pairs: a column index, b row index."""
    return [
        (a, b) for b, width in enumerate(partition) for a in range(width)
    ]


def _is_standard(partition, a, b):
    return a >= 0 and b >= 0 and b < len(partition) and a < partition[b]


def tangent_character_armleg(ideal):
    """Tangent character from the diagram: each box c contributes the weights
    (arm(c)+1, -leg(c)) and (-arm(c), leg(c)+1)."""
    partition = ideal.partition
    tr = transpose(partition)
    entries = {}
    for a, b in standard_exponents(partition):
        arm = partition[b] - 1 - a
        leg = tr[a] - 1 - b
        for w in ((arm + 1, -leg), (-arm, leg + 1)):
            entries[w] = entries.get(w, 0) + 1
    return entries


def tangent_character_linalg(ideal):
    """Tangent character by degreewise linear algebra on Hom(M, S/M).

    A homomorphism is pinned down by the images of the staircase generators,
    constrained by the syzygy between each consecutive pair.  In a fixed
    bidegree each generator image lands in a space of dimension 0 or 1
    (spanned by a standard monomial), so the solution space is the kernel of
    a small rational matrix.
    """
    partition = ideal.partition
    gens = ideal.minimal_generators
    d = sum(partition)
    width = partition[0] if partition else 0
    height = len(partition)
    entries = {}
    for d1 in range(-(d + width), d + width + 1):
        for d2 in range(-(d + height), d + height + 1):
            mult = _hom_dimension(partition, gens, (d1, d2))
            if mult:
                # sign convention: the single box must yield {(1,0),(0,1)}
                entries[(-d1, -d2)] = mult
    return entries


def _hom_dimension(partition, gens, delta):
    d1, d2 = delta
    # free coordinates: generators whose shifted image is a standard monomial
    live = [
        t
        for t, (a, b) in enumerate(gens)
        if _is_standard(partition, a + d1, b + d2)
    ]
    if not live:
        return 0
    index = {t: i for i, t in enumerate(live)}
    rows = []
    for t in range(len(gens) - 1):
        (a1, b1), (a2, b2) = gens[t], gens[t + 1]
        lcm = (a2, b1)  # a's increase, b's decrease along the staircase
        lhs = _is_standard(partition, lcm[0] + d1, lcm[1] + d2)
        coeff_l = Fraction(1) if (t in index and lhs) else Fraction(0)
        coeff_r = Fraction(1) if (t + 1 in index and lhs) else Fraction(0)
        row = [Fraction(0)] * len(live)
        if t in index:
            row[index[t]] = coeff_l
        if t + 1 in index:
            row[index[t + 1]] -= coeff_r
        if any(row):
            rows.append(row)
    return len(live) - _rank(rows)


def _rank(rows):
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [x / pivot for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def is_generic(ideal, w):
    """Whether no tangent weight at this ideal pairs to zero with w."""
    return all(
        w[0] * t1 + w[1] * t2 != 0 for t1, t2 in tangent_character_armleg(ideal)
    )


def cell_dimension(ideal, w):
    """Dimension of the cell at this fixed point for the one-parameter flow w:
    the tangent weights pairing nonnegatively with w, counted with multiplicity."""
    return sum(
        mult
        for (t1, t2), mult in tangent_character_armleg(ideal).items()
        if w[0] * t1 + w[1] * t2 >= 0
    )


def intersection_dimension(ideal, w1, w2):
    """Dimension of the intersection of the two cells at this fixed point:
    tangent weights pairing nonnegatively with both flows."""
    return sum(
        mult
        for (t1, t2), mult in tangent_character_armleg(ideal).items()
        if w1[0] * t1 + w1[1] * t2 >= 0 and w2[0] * t1 + w2[1] * t2 >= 0
    )


def default_generic_weight(d):
    """(1, d+1) pairs to zero only with the zero weight, which never occurs:
    tangent weights at colength-d ideals have both coordinates in [-d, d]."""
    return (1, d + 1)


def poincare_histogram(d, w):
    """Histogram {cell dimension: number of fixed points} over partitions of d.

    Raises NonGenericWeight if w pairs to zero with some tangent weight.
    """
    counts = {}
    for partition in partitions(d):
        ideal = ideal_from_partition(partition)
        for t1, t2 in tangent_character_armleg(ideal):
            if w[0] * t1 + w[1] * t2 == 0:
                raise NonGenericWeight(partition, w, (t1, t2))
        dim = cell_dimension(ideal, w)
        counts[dim] = counts.get(dim, 0) + 1
    return dict(sorted(counts.items()))
