"""Exact linear algebra over the scalar tower.

Matrices are plain lists of rows.  The generic helpers work for any scalar
with +, -, * and truthiness (zero test); the elimination routines need a
field (CycloElem) because they invert pivots.  Multiplication skips zero
entries, which matters a lot here: generator matrices are weight-graded and
extremely sparse.
"""

from __future__ import annotations


def zeros(m, n, zero):
    return [[zero] * n for _ in range(m)]


def identity(n, one, zero):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(A, B, zero):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    C = [[zero] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Ci = C[i]
        for t in range(k):
            a = Ai[t]
            if not a:
                continue
            Bt = B[t]
            for j in range(m):
                b = Bt[j]
                if b:
                    Ci[j] = Ci[j] + a * b
    return C


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_neg(A):
    return [[-a for a in row] for row in A]


def mat_scale(A, s):
    return [[s * a for a in row] for row in A]


def mat_eq(A, B):
    if len(A) != len(B):
        return False
    for ra, rb in zip(A, B):
        if len(ra) != len(rb):
            return False
        for a, b in zip(ra, rb):
            if a != b:
                return False
    return True


def mat_is_zero(A):
    return all(not a for row in A for a in row)


def mat_pow(A, k, one, zero):
    n = len(A)
    out = identity(n, one, zero)
    for _ in range(k):
        out = mat_mul(out, A, zero)
    return out


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def kron(A, B, zero):
    ma, na = len(A), len(A[0]) if A else 0
    mb, nb = len(B), len(B[0]) if B else 0
    C = [[zero] * (na * nb) for _ in range(ma * mb)]
    for i in range(ma):
        for j in range(na):
            a = A[i][j]
            if not a:
                continue
            for k in range(mb):
                Brow = B[k]
                Crow = C[i * mb + k]
                base = j * nb
                for l in range(nb):
                    b = Brow[l]
                    if b:
                        Crow[base + l] = a * b
    return C


def mat_map(A, fn):
    return [[fn(a) for a in row] for row in A]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(u, s):
    return [s * a for a in u]


def vec_is_zero(u):
    return all(not a for a in u)


class RowBasis:
    """Incrementally maintained reduced row basis over a field."""

    def __init__(self, field):
        self.field = field
        self.rows = []          # reduced rows, each with a pivot column
        self.pivots = []        # pivot column per row

    def reduce(self, vec):
        vec = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c:
                for j in range(len(vec)):
                    r = row[j]
                    if r:
                        vec[j] = vec[j] - c * r
        return vec

    def add(self, vec):
        """Reduce vec against the basis; add the residual if nonzero."""
        vec = self.reduce(vec)
        for p, c in enumerate(vec):
            if c:
                inv = c.inverse()
                vec = [inv * a for a in vec]
                # back-substitute into existing rows
                for i, row in enumerate(self.rows):
                    d = row[p]
                    if d:
                        self.rows[i] = [a - d * b for a, b in zip(row, vec)]
                self.rows.append(vec)
                self.pivots.append(p)
                return True
        return False

    def contains(self, vec):
        return vec_is_zero(self.reduce(vec))

    @property
    def dim(self):
        return len(self.rows)

    def sorted_rows(self):
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        return [self.rows[i] for i in order]


def rref(A, field):
    """Reduced row-echelon form; returns (rows, pivot columns)."""
    basis = RowBasis(field)
    for row in A:
        basis.add(row)
    order = sorted(range(basis.dim), key=lambda i: basis.pivots[i])
    return [basis.rows[i] for i in order], [basis.pivots[i] for i in order]


def rank(A, field):
    basis = RowBasis(field)
    for row in A:
        basis.add(row)
    return basis.dim


def nullspace(A, field):
    """Basis of the right nullspace of A (vectors x with A x = 0)."""
    if not A:
        return []
    n = len(A[0])
    rows, pivots = rref(A, field)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    zero, one = field.zero, field.one
    for fcol in free:
        x = [zero] * n
        x[fcol] = one
        for row, p in zip(rows, pivots):
            c = row[fcol]
            if c:
                x[p] = -c
        basis.append(x)
    return basis


def solve(A, b, field):
    """One solution x of A x = b, or None if inconsistent."""
    if not A:
        return None
    n = len(A[0])
    aug = [row + [bi] for row, bi in zip(A, b)]
    rows, pivots = rref(aug, field)
    zero = field.zero
    x = [zero] * n
    for row, p in zip(rows, pivots):
        if p == n:
            return None
        x[p] = row[n]
    return x


def inverse(A, field):
    """Matrix inverse over a field; None if singular."""
    n = len(A)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)]
           for i, row in enumerate(A)]
    rows, pivots = rref(aug, field)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in rows[:n]]


def intertwiner_space(src_gens, tgt_gens, field, src_blocks=None, tgt_blocks=None):
    """Matrices X with X g_src = g_tgt X for every generator pair.

    Optional block labels (one per basis vector) restrict X to entries whose
    source and target labels agree, which is how grading constraints enter.
    Returns a list of matrices forming a basis of the space.
    """
    ns = len(src_gens[0]) if src_gens else 0
    nt = len(tgt_gens[0]) if tgt_gens else 0
    if src_blocks is None:
        src_blocks = [0] * ns
    if tgt_blocks is None:
        tgt_blocks = [0] * nt
    variables = [(t, s) for t in range(nt) for s in range(ns)
                 if tgt_blocks[t] == src_blocks[s]]
    var_index = {v: i for i, v in enumerate(variables)}
    nv = len(variables)
    zero = field.zero
    eqs = RowBasis(field)
    for S, T in zip(src_gens, tgt_gens):
        # (X S - T X)[t, s] = 0
        for t in range(nt):
            for s in range(ns):
                row = [zero] * nv
                touched = False
                for k in range(ns):
                    c = S[k][s]
                    if c and (t, k) in var_index:
                        row[var_index[(t, k)]] = row[var_index[(t, k)]] + c
                        touched = True
                for k in range(nt):
                    c = T[t][k]
                    if c and (k, s) in var_index:
                        row[var_index[(k, s)]] = row[var_index[(k, s)]] - c
                        touched = True
                if touched:
                    eqs.add(row)
    system = eqs.sorted_rows()
    sols = nullspace(system, field) if system else [
        [field.one if i == j else zero for j in range(nv)] for i in range(nv)]
    out = []
    for sol in sols:
        X = [[zero] * ns for _ in range(nt)]
        for (t, s), i in var_index.items():
            if sol[i]:
                X[t][s] = sol[i]
        out.append(X)
    return out
