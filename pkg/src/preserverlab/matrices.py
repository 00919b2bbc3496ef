"""Exact matrix algebra over a field handle.

A matrix is a tuple of row tuples of field elements, so matrices
hash and compare structurally and can key dictionaries.  Vectors are
plain tuples.  Functions take the field handle first.

vec is column-major: vec(L @ X @ M) = kron(transpose(M), L) @ vec(X).

Subspaces are always handed around as canonical bases: the nonzero
rows of the reduced row echelon form of any spanning set.  Two
subspaces are equal exactly when their canonical bases are equal as
tuples.

The characteristic polynomial has two independent implementations: a
Hessenberg reduction with the classical leading-minor recurrence
(fast path) and fraction-free elimination on x*I - A over the
polynomial ring (reference path).  Tests cross-check them.
"""

import itertools

from . import unipoly
from .fields import apply_hom


def mat_from_rows(field, rows):
    return tuple(tuple(r) for r in rows)


def mat_from_ints(field, rows):
    return tuple(tuple(field.from_int(c) for c in r) for r in rows)


def zero_matrix(field, n, m=None):
    m = n if m is None else m
    return tuple((field.zero,) * m for _ in range(n))


def identity_matrix(field, n):
    return tuple(tuple(field.one if i == j else field.zero
                       for j in range(n)) for i in range(n))


def unit_matrix(field, n, i, j):
    """n x n matrix with a single one at row i, column j (0-based)."""
    return tuple(tuple(field.one if (r, c) == (i, j) else field.zero
                       for c in range(n)) for r in range(n))


def scalar_matrix(field, n, c):
    return tuple(tuple(c if i == j else field.zero
                       for j in range(n)) for i in range(n))


def dims(A):
    return len(A), len(A[0]) if A else 0


def mat_add(field, A, B):
    return tuple(tuple(field.add(a, b) for a, b in zip(ra, rb))
                 for ra, rb in zip(A, B))


def mat_sub(field, A, B):
    return tuple(tuple(field.sub(a, b) for a, b in zip(ra, rb))
                 for ra, rb in zip(A, B))


def mat_neg(field, A):
    return tuple(tuple(field.neg(a) for a in r) for r in A)


def mat_scale(field, c, A):
    return tuple(tuple(field.mul(c, a) for a in r) for r in A)


def mat_mul(field, A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    Bt = tuple(zip(*B))
    out = []
    for i in range(n):
        row_a = A[i]
        row = []
        for j in range(m):
            col = Bt[j]
            acc = field.zero
            for t in range(k):
                a = row_a[t]
                if not field.is_zero(a):
                    acc = field.add(acc, field.mul(a, col[t]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_pow(field, A, e):
    n = len(A)
    result = identity_matrix(field, n)
    while e:
        if e & 1:
            result = mat_mul(field, result, A)
        A = mat_mul(field, A, A)
        e >>= 1
    return result


def transpose(A):
    return tuple(zip(*A))


def trace(field, A):
    acc = field.zero
    for i in range(len(A)):
        acc = field.add(acc, A[i][i])
    return acc


def is_zero_matrix(field, A):
    return all(field.is_zero(a) for r in A for a in r)


def mat_apply_hom(field, hom, A):
    return tuple(tuple(apply_hom(field, hom, a) for a in r) for r in A)


def mat_map(A, fn):
    return tuple(tuple(fn(a) for a in r) for r in A)


def vec_dot(field, u, v):
    acc = field.zero
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, b))
    return acc


def mat_vec(field, A, x):
    return tuple(vec_dot(field, row, x) for row in A)


def outer(field, x, f):
    """Column x times row f."""
    return tuple(tuple(field.mul(a, b) for b in f) for a in x)


def vec(A):
    """Column-major flattening."""
    n, m = dims(A)
    return tuple(A[i][j] for j in range(m) for i in range(n))


def unvec(v, n, m=None):
    m = len(v) // n if m is None else m
    return tuple(tuple(v[j * n + i] for j in range(m)) for i in range(n))


def kron(field, A, B):
    """Kronecker product, so kron(transpose(M), L) @ vec(X) = vec(LXM)."""
    na, ma = dims(A)
    nb, mb = dims(B)
    out = []
    for i in range(na):
        for k in range(nb):
            row = []
            for j in range(ma):
                a = A[i][j]
                row.extend(field.mul(a, B[k][l]) for l in range(mb))
            out.append(tuple(row))
    return tuple(out)


def rref(field, M):
    """Reduced row echelon form.  Returns (R, rank, pivot_columns)."""
    R = [list(r) for r in M]
    n = len(R)
    m = len(R[0]) if R else 0
    pivots = []
    row = 0
    for col in range(m):
        pivot = None
        for i in range(row, n):
            if not field.is_zero(R[i][col]):
                pivot = i
                break
        if pivot is None:
            continue
        R[row], R[pivot] = R[pivot], R[row]
        inv = field.inv(R[row][col])
        R[row] = [field.mul(inv, a) for a in R[row]]
        for i in range(n):
            if i != row and not field.is_zero(R[i][col]):
                c = R[i][col]
                R[i] = [field.sub(a, field.mul(c, b))
                        for a, b in zip(R[i], R[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    return tuple(tuple(r) for r in R), row, tuple(pivots)


def rank(field, M):
    return rref(field, M)[1]


def null_space(field, M):
    """Canonical kernel basis: one vector per free column, with a one
    in the free position and back-substituted pivot entries."""
    R, r, pivots = rref(field, M)
    m = len(M[0]) if M else 0
    free = [j for j in range(m) if j not in pivots]
    basis = []
    for j in free:
        v = [field.zero] * m
        v[j] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R[i][j])
        basis.append(tuple(v))
    return basis


def row_space_basis(field, rows):
    """Canonical basis of the span of the given row vectors."""
    if not rows:
        return []
    R, r, _ = rref(field, tuple(rows))
    return [R[i] for i in range(r)]


def intersect_subspaces(field, basis_a, basis_b):
    """Canonical basis of the intersection of two row-vector spans."""
    basis_a = row_space_basis(field, basis_a)
    basis_b = row_space_basis(field, basis_b)
    if not basis_a or not basis_b:
        return []
    # columns are the basis vectors; kernel gives the linear relations
    cols = list(basis_a) + list(basis_b)
    M = tuple(zip(*cols))
    inter = []
    for rel in null_space(field, M):
        v = [field.zero] * len(basis_a[0])
        for c, vecv in zip(rel[:len(basis_a)], basis_a):
            if not field.is_zero(c):
                v = [field.add(a, field.mul(c, b)) for a, b in zip(v, vecv)]
        inter.append(tuple(v))
    return row_space_basis(field, inter)


def solve(field, A, b):
    """One solution x of A x = b, or None."""
    n, m = dims(A)
    aug = tuple(row + (bb,) for row, bb in zip(A, b))
    R, r, pivots = rref(field, aug)
    if m in pivots:
        return None
    x = [field.zero] * m
    for i, pc in enumerate(pivots):
        x[pc] = R[i][m]
    return tuple(x)


def inverse(field, A):
    n = len(A)
    aug = tuple(row + identity_matrix(field, n)[i] for i, row in enumerate(A))
    R, r, pivots = rref(field, aug)
    if r < n or pivots[:n] != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(R[i][n:] for i in range(n))


def is_invertible(field, A):
    return rank(field, A) == len(A)


def det(field, A):
    """Determinant via elimination with exact division."""
    n = len(A)
    M = [list(r) for r in A]
    sign = False
    acc = field.one
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if not field.is_zero(M[i][col]):
                pivot = i
                break
        if pivot is None:
            return field.zero
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            sign = not sign
        acc = field.mul(acc, M[col][col])
        inv = field.inv(M[col][col])
        for i in range(col + 1, n):
            if not field.is_zero(M[i][col]):
                c = field.mul(inv, M[i][col])
                M[i] = [field.sub(a, field.mul(c, b))
                        for a, b in zip(M[i], M[col])]
    return field.neg(acc) if sign else acc


def conjugate(field, S, A):
    """S A S^-1."""
    return mat_mul(field, mat_mul(field, S, A), inverse(field, S))


def is_idempotent(field, A):
    return mat_mul(field, A, A) == A


def is_square_zero(field, A):
    return is_zero_matrix(field, mat_mul(field, A, A))


def is_rank_one(field, A):
    return rank(field, A) == 1


def is_orthogonal_pair(field, A, B):
    return (is_zero_matrix(field, mat_mul(field, A, B))
            and is_zero_matrix(field, mat_mul(field, B, A)))


def rank_one_factorize(field, A):
    """Write A as column times row, A = outer(x, f), or return None."""
    n, m = dims(A)
    pivot_row = None
    for i in range(n):
        if any(not field.is_zero(a) for a in A[i]):
            pivot_row = i
            break
    if pivot_row is None:
        return None
    f = A[pivot_row]
    j0 = next(j for j in range(m) if not field.is_zero(f[j]))
    inv = field.inv(f[j0])
    x = tuple(field.mul(A[i][j0], inv) for i in range(n))
    if outer(field, x, f) != A:
        return None
    return x, f


def enumerate_vectors(field, n):
    """All vectors of length n in lexicographic order of entry indices,
    leftmost entry most significant."""
    els = list(field.elements())
    for combo in itertools.product(els, repeat=n):
        yield combo


def enumerate_matrices(field, n, m=None):
    """All n x m matrices; entry (0,0) varies slowest (row-major lex)."""
    m = n if m is None else m
    for flat in enumerate_vectors(field, n * m):
        yield tuple(flat[i * m:(i + 1) * m] for i in range(n))


def matrix_code(field, A):
    """Integer encoding: row-major digits, entry (0,0) least significant.
    Matches the dense enumeration layout."""
    code = 0
    shift = 1
    for row in A:
        for a in row:
            code += field.index(a) * shift
            shift *= field.order
    return code


def matrix_from_code(field, code, n, m=None):
    m = n if m is None else m
    entries = []
    for _ in range(n * m):
        entries.append(field.elem_at(code % field.order))
        code //= field.order
    return tuple(tuple(entries[i * m:(i + 1) * m]) for i in range(n))


def enumerate_rank_one_idempotents(field, n):
    """All rank-one idempotents of n x n matrices, as outer(x, f) with
    f x = 1.  Row covectors f are normalized with leading coefficient
    one and enumerated in lexicographic order; for each f the columns
    x satisfying f x = 1 follow in lexicographic order.  The total is
    q^(n-1) * (q^n - 1) / (q - 1)."""
    els = list(field.elements())
    for f in enumerate_vectors(field, n):
        lead = next((j for j in range(n) if not field.is_zero(f[j])), None)
        if lead is None or f[lead] != field.one:
            continue
        if any(not field.is_zero(f[j]) for j in range(lead)):
            continue
        for x in enumerate_vectors(field, n):
            if vec_dot(field, f, x) == field.one:
                yield outer(field, x, f)


def enumerate_rank_one_nilpotents(field, n):
    """All rank-one square-zero matrices, as outer(x, f) with f x = 0.
    Same normalization and order as the idempotent enumeration: f
    runs over leading-one covectors lexicographically, then x over
    the nonzero columns it annihilates."""
    for f in enumerate_vectors(field, n):
        lead = next((j for j in range(n) if not field.is_zero(f[j])), None)
        if lead is None or f[lead] != field.one:
            continue
        for x in enumerate_vectors(field, n):
            if all(field.is_zero(c) for c in x):
                continue
            if field.is_zero(vec_dot(field, f, x)):
                yield outer(field, x, f)


def random_matrix(field, n, rng, m=None):
    m = n if m is None else m
    return tuple(tuple(field.random(rng) for _ in range(m))
                 for _ in range(n))


def _hessenberg(field, A):
    """Similarity reduction to upper Hessenberg form, exact arithmetic."""
    n = len(A)
    H = [list(r) for r in A]
    for j in range(n - 2):
        pivot = None
        for i in range(j + 1, n):
            if not field.is_zero(H[i][j]):
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != j + 1:
            H[j + 1], H[pivot] = H[pivot], H[j + 1]
            for r in range(n):
                H[r][j + 1], H[r][pivot] = H[r][pivot], H[r][j + 1]
        inv = field.inv(H[j + 1][j])
        for i in range(j + 2, n):
            if field.is_zero(H[i][j]):
                continue
            c = field.mul(H[i][j], inv)
            H[i] = [field.sub(a, field.mul(c, b))
                    for a, b in zip(H[i], H[j + 1])]
            for r in range(n):
                H[r][j + 1] = field.add(H[r][j + 1], field.mul(c, H[r][i]))
    return H


def char_poly(field, A):
    """Characteristic polynomial det(x I - A), monic, as a unipoly.

    Hessenberg reduction followed by the leading-minor recurrence."""
    n = len(A)
    if n == 0:
        return unipoly.poly_constant(field, field.one)
    H = _hessenberg(field, A)
    one = field.one
    polys = [(one,)]  # p_0 = 1
    for j in range(1, n + 1):
        lin = (field.neg(H[j - 1][j - 1]), one)
        p = unipoly.poly_mul(field, polys[j - 1], lin)
        prod = one
        for i in range(j - 1, 0, -1):
            # prod = H[i][i-1] * ... * H[j-1][j-2], built up as i falls
            prod = field.mul(prod, H[i][i - 1])
            coeff = field.mul(H[i - 1][j - 1], prod)
            if not field.is_zero(coeff):
                p = unipoly.poly_sub(
                    field, p,
                    unipoly.poly_scale(field, coeff, polys[i - 1]))
        polys.append(p)
    return polys[n]


def char_poly_reference(field, A):
    """det(x I - A) by fraction-free elimination over the polynomial
    ring.  Independent of the Hessenberg route."""
    n = len(A)
    if n == 0:
        return unipoly.poly_constant(field, field.one)
    one_p = unipoly.poly_constant(field, field.one)
    M = [[(field.neg(A[i][j]), field.one) if i == j
          else unipoly.poly_constant(field, field.neg(A[i][j]))
          for j in range(n)] for i in range(n)]
    sign = False
    prev = one_p
    for k in range(n - 1):
        if unipoly.poly_is_zero(M[k][k]):
            pivot = next((i for i in range(k + 1, n)
                          if not unipoly.poly_is_zero(M[i][k])), None)
            if pivot is None:
                return ()  # impossible for x I - A, defensive
            M[k], M[pivot] = M[pivot], M[k]
            sign = not sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = unipoly.poly_sub(
                    field,
                    unipoly.poly_mul(field, M[k][k], M[i][j]),
                    unipoly.poly_mul(field, M[i][k], M[k][j]))
                q, r = unipoly.poly_divmod(field, num, prev)
                assert unipoly.poly_is_zero(r), "inexact Bareiss division"
                M[i][j] = q
            M[i][k] = ()
        prev = M[k][k]
    p = M[n - 1][n - 1]
    return unipoly.poly_neg(field, p) if sign else p


def min_poly(field, A):
    """Minimal polynomial, found as the first linear dependence among
    the Krylov iterates I, A, A^2, ... of the full matrix."""
    n = len(A)
    powers = [identity_matrix(field, n)]
    for d in range(1, n + 1):
        powers.append(mat_mul(field, powers[-1], A))
        rows = tuple(vec(P) for P in powers)
        M = tuple(zip(*rows))
        for rel in null_space(field, M):
            if not field.is_zero(rel[-1]):
                inv = field.inv(rel[-1])
                return unipoly.poly_trim(
                    field, [field.mul(inv, c) for c in rel])
    raise AssertionError("no minimal polynomial of degree <= n")
