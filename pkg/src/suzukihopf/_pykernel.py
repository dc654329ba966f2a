"""Pure-Python backtracking kernel for the ansatz search.

Works on the flat integer problem built by ``search.compile_problem``:

    values       flat list of ints; a term's contribution for grid indices
                 (g1[, g2]) is the length-``deg`` slice at
                 offset + (g1 [* ngrid + g2]) * deg
    level_checks for level k, the constraint indices completed at that level
    con_terms    per constraint, (kind, level1, level2, offset) tuples;
                 kind 0 constant, 1 linear, 2 quadratic

Returns (solutions, nodes): grid-index tuples (one entry per level) whose
every constraint sums to the zero vector, and the number of visited nodes.
"""


def _satisfied(terms, values, assign, ngrid, deg):
    acc = [0] * deg
    for kind, l1, l2, off in terms:
        if kind == 1:
            off += assign[l1] * deg
        elif kind == 2:
            off += (assign[l1] * ngrid + assign[l2]) * deg
        for j in range(deg):
            acc[j] += values[off + j]
    return not any(acc)


def search(nlevels, ngrid, deg, values, level_checks, con_terms):
    solutions = []
    assign = [0] * nlevels
    nodes = 0

    def visit(level):
        nonlocal nodes
        checks = [con_terms[c] for c in level_checks[level]]
        for g in range(ngrid):
            nodes += 1
            assign[level] = g
            if all(_satisfied(t, values, assign, ngrid, deg) for t in checks):
                if level + 1 == nlevels:
                    solutions.append(tuple(assign))
                else:
                    visit(level + 1)

    if nlevels:
        visit(0)
    return solutions, nodes
