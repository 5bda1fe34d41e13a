"""Fourier-Motzkin elimination over exact rationals for homogeneous cones.

A constraint is (coeffs, strict): coeffs . x >= 0, or > 0 when strict.
Coefficients are Python ints; combinations are cleared back to primitive
integer vectors, so no rational arithmetic ever leaks out.
"""

from math import gcd

from .intlinalg import primitive


def _canon(coeffs, strict):
    c = primitive(coeffs)
    return tuple(c), strict


def eliminate_variable(constraints, var):
    """Project the homogeneous system onto the coordinates other than var.

    Returns constraints in the same ambient dimension with coefficient 0 at
    var.  Standard Fourier-Motzkin: pair each positive-coefficient constraint
    with each negative-coefficient one.
    """
    zero, pos, neg = [], [], []
    for coeffs, strict in constraints:
        c = coeffs[var]
        if c == 0:
            zero.append((coeffs, strict))
        elif c > 0:
            pos.append((coeffs, strict))
        else:
            neg.append((coeffs, strict))
    out = {_canon(list(c), s) for c, s in zero}
    for pc, ps in pos:
        for nc, ns in neg:
            a, b = pc[var], -nc[var]
            combined = [b * x + a * y for x, y in zip(pc, nc)]
            out.add(_canon(combined, ps or ns))
    # drop tautologies 0 >= 0
    return [
        (c, s)
        for c, s in sorted(out)
        if s or any(x != 0 for x in c)
    ]


def is_feasible(constraints, dim):
    """Whether the homogeneous system has a rational solution.

    Without strict constraints the answer is trivially yes (x = 0); strict
    constraints are where elimination earns its keep.
    """
    cur = [(tuple(c), s) for c, s in constraints]
    for var in range(dim):
        cur = eliminate_variable(cur, var)
    # only all-zero coefficient rows remain: 0 >= 0 holds, 0 > 0 does not
    return not any(s for _, s in cur)


def implies(constraints, target, dim):
    """Whether every solution of `constraints` satisfies target . x >= 0."""
    negated = [tuple(-t for t in target)]
    system = list(constraints) + [(tuple(negated[0]), True)]
    return not is_feasible(system, dim)


def cone_inequalities(generators, dim):
    """Irredundant inequality description of cone(generators) in Q^dim.

    The cone {sum lambda_i g_i : lambda >= 0} is the projection of
    {(x, lambda) : x = G lambda, lambda >= 0} onto x; the equalities are fed
    to Fourier-Motzkin as inequality pairs.  Returns primitive integer normal
    vectors a with a . x >= 0 on the cone; for non-full-dimensional cones the
    list contains opposite pairs cutting out the linear span.
    """
    k = len(generators)
    constraints = []
    # coordinates: x_0..x_{dim-1}, lambda_0..lambda_{k-1}
    for i in range(dim):
        row = [0] * (dim + k)
        row[i] = 1
        for j, g in enumerate(generators):
            row[dim + j] = -g[i]
        constraints.append((tuple(row), False))
        constraints.append((tuple(-c for c in row), False))
    for j in range(k):
        row = [0] * (dim + k)
        row[dim + j] = 1
        constraints.append((tuple(row), False))
    for var in range(dim, dim + k):
        constraints = eliminate_variable(constraints, var)
    normals = sorted({tuple(primitive(list(c[:dim]))) for c, _ in constraints
                      if any(x != 0 for x in c[:dim])})
    return _drop_redundant(normals, dim)


def _drop_redundant(normals, dim):
    kept = list(normals)
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            rest = [(kept[j], False) for j in range(len(kept)) if j != i]
            if implies(rest, kept[i], dim):
                del kept[i]
                changed = True
                break
    return kept
