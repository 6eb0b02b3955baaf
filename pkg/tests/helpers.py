"""Small builders shared by several test modules."""

from lsb.superalg import LieSuperAlgebra, from_brackets


def build(field, even, odd, rels):
    """rels: (a, b, {name: coef}) triples; mirrored brackets are derived."""
    names = list(even) + list(odd)
    brackets = {}
    for a, b, out in rels:
        v = [0] * len(names)
        for nm, c in out.items():
            v[names.index(nm)] = c
        brackets[(names.index(a), names.index(b))] = v
    return from_brackets(field, even, odd, brackets)


def mutate(L, i, j, k, value):
    """Copy of L with the single entry c[i][j][k] replaced, skipping all checks but shape."""
    sc = [[list(v) for v in row] for row in L.sc]
    sc[i][j][k] = L.field(value)
    return LieSuperAlgebra(L.field, L.dims, tuple(tuple(tuple(v) for v in row) for row in sc), L.names)


def vec(L, **coords):
    v = [0] * L.n
    for nm, c in coords.items():
        v[L.index(nm)] = c
    return L.element(v)


# Independent modular linear algebra, used as an oracle against the package's own.

def rank_mod_p(rows, p):
    m = [[int(x) % p for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def nullspace_mod_p(rows, n, p):
    """Basis of {v : rows . v = 0} by elimination on the augmented system."""
    m = [[int(x) % p for x in r] for r in rows]
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][free] % p
        basis.append(v)
    return basis


def all_vectors(n, p):
    import itertools
    import numpy as np
    return np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64).reshape(-1, n)


def slow_breadth(L):
    """max rank of ad_x over every element, straight from the tensor."""
    import numpy as np
    p = L.field.p
    c = np.array(L.sc, dtype=np.int64).reshape(L.n, L.n, L.n)
    best = 0
    for x in all_vectors(L.n, p):
        ad = np.einsum("i,ijk->jk", x, c) % p  # row j = [x, e_j]
        best = max(best, rank_mod_p(ad.tolist(), p) if L.n else 0)
    return best


def extensions_outside(L, A_basis):
    """Every x not in A with [L,x] in A, [A,x] = 0 and [x,x] = 0 (full enumeration)."""
    import numpy as np
    p, n = L.field.p, L.n
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    c = np.array(L.sc, dtype=np.int64).reshape(n, n, n)
    # N: columns spanning the annihilator of A, so v in A iff v @ N = 0
    N = np.array(nullspace_mod_p(A_basis, n, p), dtype=np.int64).reshape(-1, n).T
    Ab = np.array(A_basis, dtype=np.int64).reshape(-1, n)
    X = all_vectors(n, p)
    outside = np.any(X @ N % p, axis=1)
    left = np.einsum("jik,bi->bjk", c, X) % p  # [e_j, x]
    into_a = ~np.any(np.einsum("bjk,kt->bjt", left, N) % p, axis=(1, 2))
    kill_a = ~np.any(np.einsum("ai,bl,ilk->bak", Ab, X, c) % p, axis=(1, 2))
    sq = ~np.any(np.einsum("bi,bl,ilk->bk", X, X, c) % p, axis=1)
    return X[outside & into_a & kill_a & sq]
