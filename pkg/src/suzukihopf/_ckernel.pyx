# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backtracking kernel for the ansatz search; same contract as _pykernel.search."""

from libc.stdlib cimport malloc, free


def search(int nlevels, int ngrid, int deg, values, level_checks, con_terms):
    cdef Py_ssize_t nvals = len(values)
    cdef long long *vals = <long long *> malloc(max(nvals, 1) * sizeof(long long))
    cdef int ncons = len(con_terms)
    cdef int *tstart = <int *> malloc((ncons + 1) * sizeof(int))
    cdef Py_ssize_t nterms = sum(len(t) for t in con_terms)
    cdef int *tkind = <int *> malloc(max(nterms, 1) * sizeof(int))
    cdef int *tl1 = <int *> malloc(max(nterms, 1) * sizeof(int))
    cdef int *tl2 = <int *> malloc(max(nterms, 1) * sizeof(int))
    cdef long long *toff = <long long *> malloc(max(nterms, 1) * sizeof(long long))
    cdef int *cstart = <int *> malloc((nlevels + 1) * sizeof(int))
    cdef Py_ssize_t nchecks = sum(len(c) for c in level_checks)
    cdef int *clist = <int *> malloc(max(nchecks, 1) * sizeof(int))
    cdef int *assign = <int *> malloc(max(nlevels, 1) * sizeof(int))
    cdef long long *acc = <long long *> malloc(max(deg, 1) * sizeof(long long))
    cdef Py_ssize_t i, k, j, c, t
    cdef long long off
    cdef long long nodes = 0
    cdef int level, ok
    solutions = []
    try:
        for i in range(nvals):
            vals[i] = values[i]
        k = 0
        for c in range(ncons):
            tstart[c] = k
            for kind, l1, l2, o in con_terms[c]:
                tkind[k] = kind
                tl1[k] = l1
                tl2[k] = l2
                toff[k] = o
                k += 1
        tstart[ncons] = k
        k = 0
        for level in range(nlevels):
            cstart[level] = k
            for c in level_checks[level]:
                clist[k] = c
                k += 1
        cstart[nlevels] = k
        if nlevels == 0:
            return solutions, 0

        # iterative DFS: assign[level] is the next grid index to try
        level = 0
        assign[0] = -1
        while level >= 0:
            assign[level] += 1
            if assign[level] >= ngrid:
                level -= 1
                continue
            nodes += 1
            ok = 1
            for i in range(cstart[level], cstart[level + 1]):
                c = clist[i]
                for j in range(deg):
                    acc[j] = 0
                for t in range(tstart[c], tstart[c + 1]):
                    off = toff[t]
                    if tkind[t] == 1:
                        off += assign[tl1[t]] * deg
                    elif tkind[t] == 2:
                        off += (assign[tl1[t]] * ngrid + assign[tl2[t]]) * deg
                    for j in range(deg):
                        acc[j] += vals[off + j]
                for j in range(deg):
                    if acc[j] != 0:
                        ok = 0
                        break
                if not ok:
                    break
            if not ok:
                continue
            if level + 1 == nlevels:
                solutions.append(tuple([assign[j] for j in range(nlevels)]))
            else:
                level += 1
                assign[level] = -1
        return solutions, nodes
    finally:
        free(vals); free(tstart); free(tkind); free(tl1); free(tl2); free(toff)
        free(cstart); free(clist); free(assign); free(acc)
