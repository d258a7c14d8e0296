# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of :mod:`formring._pykernels`.

Entries stay Python integers (arbitrary precision); the speedup comes from
typed loop indices and list access without interpreter dispatch.
"""


cpdef object eval_poly(list terms, list point):
    cdef object total = 0
    cdef object t
    cdef Py_ssize_t i, npt = len(point)
    cdef tuple e
    cdef long k
    for e, c in terms:
        t = c
        for i in range(npt):
            k = e[i]
            if k:
                t = t * point[i] ** k
        total = total + t
    return total


cpdef list eval_poly_table(list polys, list point):
    return [eval_poly(p, point) for p in polys]


cpdef list matmul_int(list A, list B):
    cdef Py_ssize_t inner = len(B)
    cdef Py_ssize_t cols = len(B[0]) if inner else 0
    cdef Py_ssize_t k, j
    cdef list out = [], new, row, bk
    cdef object a
    for row in A:
        new = [0] * cols
        for k in range(inner):
            a = row[k]
            if a:
                bk = B[k]
                for j in range(cols):
                    new[j] = new[j] + a * bk[j]
        out.append(new)
    return out


cpdef list assoc_defects_int(list c, Py_ssize_t n):
    cdef list bad = [], ci, cij, cjk
    cdef Py_ssize_t i, j, k, t, l
    cdef object lhs, rhs, a, b
    for i in range(n):
        ci = c[i]
        for j in range(n):
            cij = ci[j]
            for k in range(n):
                cjk = c[j][k]
                for t in range(n):
                    lhs = 0
                    rhs = 0
                    for l in range(n):
                        a = cij[l]
                        if a:
                            lhs = lhs + a * c[l][k][t]
                        b = cjk[l]
                        if b:
                            rhs = rhs + b * ci[l][t]
                    if lhs != rhs:
                        bad.append((i, j, k))
                        break
    return bad


cpdef list module_defects_int(list c, list d, Py_ssize_t n, Py_ssize_t m):
    cdef list bad = [], cij, djb
    cdef Py_ssize_t i, j, b, a, l
    cdef object lhs, rhs, x, y
    for i in range(n):
        for j in range(n):
            cij = c[i][j]
            for b in range(m):
                djb = d[j][b]
                for a in range(m):
                    lhs = 0
                    rhs = 0
                    for l in range(n):
                        x = cij[l]
                        if x:
                            lhs = lhs + x * d[l][b][a]
                    for l in range(m):
                        y = djb[l]
                        if y:
                            rhs = rhs + y * d[i][l][a]
                    if lhs != rhs:
                        bad.append((i, j, b))
                        break
    return bad
