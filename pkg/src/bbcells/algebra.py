"""Finitely presented multigraded algebras and their limit subschemes.

A presentation is a polynomial ring with Z^n variable weights modulo
homogeneous relations.  The two geometric operations, taking the subscheme
of points flowing to a limit and taking the fixed locus, both act by
substituting zero for a set of variables and canonicalizing what is left.

Dimension counts for truncations live on monomial quotients, where graded
components have standard-monomial bases and all counting is exact.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import lattice
from .errors import (
    InfiniteDimension,
    InhomogeneousError,
    MonoidHasUnits,
    NotMinimalPresentation,
    RankMismatch,
    WeightOutsideMonoid,
)

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class VariableWeighting:
    torus_rank: int
    variables: tuple  # tuple of (name, weight tuple)

    def __post_init__(self):
        names = [name for name, _ in self.variables]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for name, weight in self.variables:
            if not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
            if len(weight) != self.torus_rank:
                raise RankMismatch(
                    f"weight of {name} has length {len(weight)}, expected {self.torus_rank}"
                )

    @property
    def names(self):
        return [name for name, _ in self.variables]

    @property
    def weights(self):
        return [weight for _, weight in self.variables]


@dataclass(frozen=True)
class GradedPolynomial:
    """Terms (coefficient, exponent tuple), canonically ordered.

    Canonical form: like terms merged, zero coefficients dropped, terms in
    descending lexicographic order on exponent vectors.
    """

    terms: tuple

    @property
    def is_zero(self):
        return not self.terms

    def sort_key(self):
        return tuple((t[1], (t[0].numerator, t[0].denominator)) for t in self.terms)


def make_polynomial(terms):
    """Canonical GradedPolynomial from an arbitrary (coeff, exponents) list."""
    merged = {}
    for coeff, exps in terms:
        exps = tuple(int(e) for e in exps)
        merged[exps] = merged.get(exps, Fraction(0)) + Fraction(coeff)
    out = [(c, e) for e, c in merged.items() if c != 0]
    out.sort(key=lambda t: t[1], reverse=True)
    return GradedPolynomial(terms=tuple(out))


def monic(poly):
    if poly.is_zero:
        return poly
    lead = poly.terms[0][0]
    return GradedPolynomial(terms=tuple((c / lead, e) for c, e in poly.terms))


@dataclass(frozen=True)
class GradedPresentation:
    weighting: VariableWeighting
    relations: tuple  # tuple of GradedPolynomial


@dataclass(frozen=True)
class MonomialQuotient:
    """Polynomial ring modulo a monomial ideal, given by minimal generators."""

    weighting: VariableWeighting
    minimal_generators: tuple  # tuple of exponent tuples, an antichain

    def __post_init__(self):
        gens = minimalize_monomials(self.minimal_generators)
        object.__setattr__(self, "minimal_generators", gens)

    def is_standard(self, exps):
        return not any(_divides(g, exps) for g in self.minimal_generators)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimalize_monomials(monomials):
    """Reduce a monomial set to the divisibility antichain of its minima."""
    mons = sorted({tuple(int(e) for e in m) for m in monomials})
    kept = []
    for m in mons:
        if not any(_divides(k, m) for k in kept):
            kept = [k for k in kept if not _divides(m, k)]
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class StabilizationReport:
    weight: tuple
    n_lambda: int
    dimensions: tuple  # dim (A_n)_lambda for n = 0..n_max
    stable: bool
    limit_dimension: int  # dim A_lambda, counted directly


def weight_of(exps, weighting):
    if len(exps) != len(weighting.variables):
        raise RankMismatch(
            f"monomial has {len(exps)} exponents, weighting has "
            f"{len(weighting.variables)} variables"
        )
    total = [0] * weighting.torus_rank
    for e, (_, w) in zip(exps, weighting.variables):
        for i in range(weighting.torus_rank):
            total[i] += e * w[i]
    return tuple(total)


def check_homogeneous(poly, weighting):
    """Common weight of all terms; raises InhomogeneousError on a mismatch."""
    if poly.is_zero:
        return (0,) * weighting.torus_rank
    first = weight_of(poly.terms[0][1], weighting)
    for _, exps in poly.terms[1:]:
        w = weight_of(exps, weighting)
        if w != first:
            raise InhomogeneousError(first, w)
    return first


def outsider_variables(presentation, monoid):
    """Variables whose weight lies outside the saturation of the monoid."""
    w = presentation.weighting
    if monoid.rank != w.torus_rank:
        raise RankMismatch(
            f"monoid rank {monoid.rank} != torus rank {w.torus_rank}"
        )
    return [
        name for name, weight in w.variables if not lattice.contains(monoid, weight)
    ]


def _substitute_zero(presentation, removed_names):
    """Set the named variables to zero and canonicalize the presentation."""
    w = presentation.weighting
    keep = [i for i, (name, _) in enumerate(w.variables) if name not in removed_names]
    new_weighting = VariableWeighting(
        torus_rank=w.torus_rank,
        variables=tuple(w.variables[i] for i in keep),
    )
    removed_idx = [i for i in range(len(w.variables)) if i not in keep]
    relations = []
    for rel in presentation.relations:
        kept_terms = [
            (c, tuple(e[i] for i in keep))
            for c, e in rel.terms
            if all(e[i] == 0 for i in removed_idx)
        ]
        poly = monic(make_polynomial(kept_terms))
        if not poly.is_zero:
            relations.append(poly)
    relations = sorted(set(relations), key=GradedPolynomial.sort_key)
    return GradedPresentation(weighting=new_weighting, relations=tuple(relations))


def bb_plus(presentation, monoid):
    """Presentation of the subscheme of points with a limit under the monoid.

    The ideal of that subscheme is generated by the outsider variables: a
    monomial in insider variables has insider weight (the monoid's saturation
    is closed under addition), so every outsider monomial has an outsider
    variable as a divisor.
    """
    if not lattice.has_zero(monoid):
        raise MonoidHasUnits(
            "monoid has nontrivial units; apply reduce_to_zero first"
        )
    for rel in presentation.relations:
        check_homogeneous(rel, presentation.weighting)
    return _substitute_zero(presentation, set(outsider_variables(presentation, monoid)))


def fixed_locus(presentation):
    """Presentation of the fixed subscheme: every nonzero-weight variable dies."""
    for rel in presentation.relations:
        check_homogeneous(rel, presentation.weighting)
    zero = (0,) * presentation.weighting.torus_rank
    removed = {
        name for name, weight in presentation.weighting.variables if weight != zero
    }
    return _substitute_zero(presentation, removed)


def open_immersion_check(presentation, monoid):
    """Whether the limit subscheme is an open neighbourhood of the origin.

    Requires a presentation minimal at the origin (relations in the square of
    the irrelevant ideal), so the variable weights read off the cotangent
    space there; the check is that none of them is outsider.
    """
    if not lattice.has_zero(monoid):
        raise MonoidHasUnits(
            "monoid has nontrivial units; apply reduce_to_zero first"
        )
    for rel in presentation.relations:
        check_homogeneous(rel, presentation.weighting)
        for _, exps in rel.terms:
            if sum(exps) < 2:
                raise NotMinimalPresentation(
                    "relation has a term of degree < 2; minimize the "
                    "presentation at the origin first"
                )
    return not outsider_variables(presentation, monoid)


def _split_variables(quotient, monoid):
    """Indices of zero-weight and nonzero-weight variables, with checks."""
    w = quotient.weighting
    if monoid.rank != w.torus_rank:
        raise RankMismatch(
            f"monoid rank {monoid.rank} != torus rank {w.torus_rank}"
        )
    zero = (0,) * w.torus_rank
    zero_idx, pos_idx = [], []
    for i, (name, weight) in enumerate(w.variables):
        if not lattice.contains(monoid, weight):
            raise WeightOutsideMonoid(
                f"variable {name} has weight {weight} outside the monoid"
            )
        (zero_idx if weight == zero else pos_idx).append(i)
    return zero_idx, pos_idx


def _zero_weight_bounds(quotient, zero_idx):
    """Exponent bounds for zero-weight variables from pure-power generators.

    Without a pure power x_i^e in the ideal, the weight-graded components are
    infinite dimensional and no count exists.
    """
    bounds = {}
    for i in zero_idx:
        best = None
        for g in quotient.minimal_generators:
            if g[i] > 0 and all(g[j] == 0 for j in range(len(g)) if j != i):
                best = g[i] if best is None else min(best, g[i])
        if best is None:
            name = quotient.weighting.variables[i][0]
            raise InfiniteDimension(
                f"zero-weight variable {name} has no pure power in the ideal; "
                "graded components are infinite dimensional"
            )
        bounds[i] = best
    return bounds


def _standard_monomials_by_order(quotient, monoid, n):
    """Standard monomials of the quotient with at most n factors from
    nonzero-weight variables, as (exponents, weight) pairs."""
    zero_idx, pos_idx = _split_variables(quotient, monoid)
    bounds = _zero_weight_bounds(quotient, zero_idx)
    nvars = len(quotient.weighting.variables)

    def assignments(idx, budget):
        if not idx:
            yield {}
            return
        head, tail = idx[0], idx[1:]
        for e in range(budget + 1):
            for rest in assignments(tail, budget - e):
                rest[head] = e
                yield rest

    out = []
    zero_ranges = [range(bounds[i]) for i in zero_idx]
    for pos_assign in assignments(pos_idx, n):
        for zero_exps in product(*zero_ranges):
            exps = [0] * nvars
            for i, e in pos_assign.items():
                exps[i] = e
            for i, e in zip(zero_idx, zero_exps):
                exps[i] = e
            exps = tuple(exps)
            if quotient.is_standard(exps):
                out.append((exps, weight_of(exps, quotient.weighting)))
    return out


def truncate(quotient, monoid, n):
    """Graded dimensions of the n-th truncation A / (M + J^(n+1)), where J is
    the ideal of nonzero-weight variables.

    Returns {weight: dimension} over all weights realized at this level.
    """
    if not lattice.has_zero(monoid):
        raise MonoidHasUnits(
            "monoid has nontrivial units; apply reduce_to_zero first"
        )
    if n < 0:
        raise ValueError("truncation level must be nonnegative")
    dims = {}
    for _, w in _standard_monomials_by_order(quotient, monoid, n):
        dims[w] = dims.get(w, 0) + 1
    return dims


def graded_dimension(quotient, monoid, weight):
    """dim A_weight of the full quotient, by direct standard-monomial count.

    Finite because every nonzero-weight variable has positive pairing with
    the Kempf vector, bounding exponents by the Kempf degree of the weight.
    """
    kempf = lattice.kempf_vector(monoid).w
    zero_idx, pos_idx = _split_variables(quotient, monoid)
    bounds = _zero_weight_bounds(quotient, zero_idx)
    w = quotient.weighting
    degree = sum(a * b for a, b in zip(kempf, weight))
    if degree < 0:
        return 0
    var_degrees = {
        i: sum(a * b for a, b in zip(kempf, w.variables[i][1])) for i in pos_idx
    }
    nvars = len(w.variables)

    def assignments(idx, budget):
        if not idx:
            if budget == 0:
                yield {}
            return
        head, tail = idx[0], idx[1:]
        d = var_degrees[head]
        for e in range(budget // d + 1):
            for rest in assignments(tail, budget - e * d):
                rest[head] = e
                yield rest

    count = 0
    zero_ranges = [range(bounds[i]) for i in zero_idx]
    for pos_assign in assignments(pos_idx, degree):
        for zero_exps in product(*zero_ranges):
            exps = [0] * nvars
            for i, e in pos_assign.items():
                exps[i] = e
            for i, e in zip(zero_idx, zero_exps):
                exps[i] = e
            exps = tuple(exps)
            if weight_of(exps, w) == weight and quotient.is_standard(exps):
                count += 1
    return count


def stabilization_check(quotient, monoid, weight, n_max):
    """Dimension sequence of truncations in one weight, with its stability bound.

    For a torus the isotypic component of a weight is the single character, so
    the bound is its Kempf degree n_lambda = <kempf vector, weight>.
    """
    kempf = lattice.kempf_vector(monoid).w
    weight = tuple(weight)
    if len(weight) != monoid.rank:
        raise RankMismatch(
            f"weight has length {len(weight)}, monoid has rank {monoid.rank}"
        )
    n_lambda = sum(a * b for a, b in zip(kempf, weight))
    n_lambda = max(n_lambda, 0)
    dims = tuple(
        truncate(quotient, monoid, n).get(weight, 0) for n in range(n_max + 1)
    )
    tail = dims[min(n_lambda, n_max):]
    stable = all(d == tail[0] for d in tail) if tail else True
    return StabilizationReport(
        weight=weight,
        n_lambda=n_lambda,
        dimensions=dims,
        stable=stable,
        limit_dimension=graded_dimension(quotient, monoid, weight),
    )


def algebraize_check(quotient, monoid, weight_bound):
    """Whether truncations at level n_lambda recover every graded component of
    Kempf degree at most weight_bound."""
    kempf = lattice.kempf_vector(monoid).w
    if weight_bound < 0:
        raise ValueError("weight bound must be nonnegative")
    # every weight of Kempf degree <= bound is realized by monomials of
    # J-order <= bound, so one truncation pass collects all candidates
    seen = set()
    for _, w in _standard_monomials_by_order(quotient, monoid, weight_bound):
        seen.add(w)
    for w in sorted(seen):
        degree = sum(a * b for a, b in zip(kempf, w))
        if degree > weight_bound:
            continue
        truncated = truncate(quotient, monoid, degree).get(w, 0)
        if truncated != graded_dimension(quotient, monoid, w):
            return False
    return True
