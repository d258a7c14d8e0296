"""Pure-Python exact kernels.  ``_ckernels.pyx`` mirrors these one to one."""


def eval_poly(terms, point):
    """Evaluate ``[(exponents, coeff), ...]`` at an integer point."""
    total = 0
    for e, c in terms:
        t = c
        for v, k in zip(point, e):
            if k:
                t *= v**k
        total += t
    return total


def eval_poly_table(polys, point):
    return [eval_poly(p, point) for p in polys]


def matmul_int(A, B):
    inner = len(B)
    cols = len(B[0]) if inner else 0
    out = []
    for row in A:
        new = [0] * cols
        for k in range(inner):
            a = row[k]
            if a:
                bk = B[k]
                for j in range(cols):
                    new[j] += a * bk[j]
        out.append(new)
    return out


def assoc_defects_int(c, n):
    """Triples (i, j, k) where (z_i z_j) z_k != z_i (z_j z_k) for an
    integer multiplication table ``c[i][j][l]``."""
    bad = []
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
                            lhs += a * c[l][k][t]
                        b = cjk[l]
                        if b:
                            rhs += b * ci[l][t]
                    if lhs != rhs:
                        bad.append((i, j, k))
                        break
    return bad


def module_defects_int(c, d, n, m):
    """Pairs (i, j, b) where (z_i z_j) e_b != z_i (z_j e_b) for an integer
    action table ``d[i][b][a]`` (coefficient of e_a in z_i e_b)."""
    bad = []
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
                            lhs += x * d[l][b][a]
                    for l in range(m):
                        y = djb[l]
                        if y:
                            rhs += y * d[i][l][a]
                    if lhs != rhs:
                        bad.append((i, j, b))
                        break
    return bad
