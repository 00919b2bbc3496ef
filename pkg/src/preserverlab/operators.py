"""Sandwich operators X -> sum_j c_j L^j X M^(t-j) and the annihilator
spaces they carve out of a matrix algebra.

For a normalized multilinear polynomial p and a fixed matrix A, two
operators matter here: substituting X into slot one,

    p(X, A, ..., A) = sum_i slot1_coeffs[i] A^i X A^(k-1-i),

and substituting X into the pivot variable (the first variable with
nonzero trailing weight),

    p(A, .., X, .., A) = sum_i pivot_coeffs[i] A^i X A^(k-1-i).

Their kernels are the right and pivot annihilator spaces of A, and
the joint annihilator is their intersection.  All subspace bases are
canonical: reduced row echelon form on column-major vectorizations.
"""

from dataclasses import dataclass

from . import unipoly
from .matrices import (
    identity_matrix, intersect_subspaces, kron, mat_add, mat_mul, mat_pow,
    mat_scale, null_space, row_space_basis, transpose, unvec, vec,
    zero_matrix, char_poly,
)


@dataclass(frozen=True)
class ElementaryOperator:
    """X -> sum_j coeffs[j] * L^j X M^(t-j), t = len(coeffs) - 1."""

    field: object
    left: tuple
    right: tuple
    coeffs: tuple

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def _powers(self):
        field = self.field
        t = self.degree
        lp = [identity_matrix(field, len(self.left))]
        rp = [identity_matrix(field, len(self.right))]
        for _ in range(t):
            lp.append(mat_mul(field, lp[-1], self.left))
            rp.append(mat_mul(field, rp[-1], self.right))
        return lp, rp

    def apply(self, X):
        """X has as many rows as the left factor and as many columns
        as the right factor."""
        field = self.field
        lp, rp = self._powers()
        t = self.degree
        acc = zero_matrix(field, len(self.left), len(self.right))
        for j, c in enumerate(self.coeffs):
            if field.is_zero(c):
                continue
            term = mat_mul(field, lp[j], mat_mul(field, X, rp[t - j]))
            acc = mat_add(field, acc, mat_scale(field, c, term))
        return acc

    def kron_matrix(self):
        """Matrix of the operator on column-major vectorizations."""
        field = self.field
        m = len(self.left)
        n = len(self.right)
        lp, rp = self._powers()
        t = self.degree
        acc = zero_matrix(field, m * n)
        for j, c in enumerate(self.coeffs):
            if field.is_zero(c):
                continue
            K = kron(field, transpose(rp[t - j]), lp[j])
            acc = mat_add(field, acc, mat_scale(field, c, K))
        return acc

    def symbol(self, lam, mu):
        """Scalar shadow sum_j coeffs[j] lam^j mu^(t-j); on eigenvector
        pairs the operator acts by this value."""
        field = self.field
        t = self.degree
        acc = field.zero
        for j, c in enumerate(self.coeffs):
            term = field.mul(c, field.mul(field.pow(lam, j),
                                          field.pow(mu, t - j)))
            acc = field.add(acc, term)
        return acc


def operator_kernel(op):
    """Canonical basis (list of matrices) of the kernel."""
    K = op.kron_matrix()
    m = len(op.left)
    vecs = row_space_basis(op.field, null_space(op.field, K))
    return [unvec(v, m) for v in vecs]


def slot1_operator(A, np):
    return ElementaryOperator(field=np.field, left=A, right=A,
                              coeffs=tuple(np.slot1_coeffs))


def pivot_operator(A, np, unit=False):
    coeffs = np.pivot_unit_coeffs if unit else np.pivot_coeffs
    return ElementaryOperator(field=np.field, left=A, right=A,
                              coeffs=tuple(coeffs))


def slot1_kernel(A, np):
    """All X with p(X, A, ..., A) = 0, canonical basis."""
    return operator_kernel(slot1_operator(A, np))


def pivot_kernel(A, np):
    """All X with p(A, ..., X at the pivot variable, ..., A) = 0."""
    return operator_kernel(pivot_operator(A, np))


def joint_kernel(A, np):
    """Intersection of the slot-one and pivot annihilator spaces.

    When the pivot variable is one the two spaces coincide and the
    slot-one kernel is returned as is."""
    if np.pivot_var == 1:
        return slot1_kernel(A, np)
    a = [vec(X) for X in slot1_kernel(A, np)]
    b = [vec(X) for X in pivot_kernel(A, np)]
    n = len(A)
    inter = intersect_subspaces(np.field, a, b)
    return [unvec(v, n) for v in inter]


def slot1_symbol(np, lam, mu):
    return _symbol(np.field, np.slot1_coeffs, lam, mu)


def pivot_symbol(np, lam, mu):
    return _symbol(np.field, np.pivot_coeffs, lam, mu)


def _symbol(field, coeffs, lam, mu):
    t = len(coeffs) - 1
    acc = field.zero
    for j, c in enumerate(coeffs):
        acc = field.add(acc, field.mul(
            c, field.mul(field.pow(lam, j), field.pow(mu, t - j))))
    return acc


def spectrum_single_eigenvalue(op, seed=0):
    """The unique eigenvalue of the operator's Kronecker matrix, or
    None when the characteristic polynomial is not a power of a single
    linear factor over the base field."""
    field = op.field
    cp = char_poly(field, op.kron_matrix())
    factors = unipoly.factor_poly(field, cp, seed)
    if len(factors) != 1:
        return None
    g, mult = factors[0]
    if unipoly.poly_degree(g) != 1:
        return None
    return field.div(field.neg(g[0]), g[1])


def anticommutant(field, A):
    """Canonical basis of {X : X A + A X = 0}.  In characteristic
    two this would collapse into the commutant, so it is refused."""
    if field.is_zero(field.add(field.one, field.one)):
        raise ValueError("anticommutant needs characteristic != 2")
    op = ElementaryOperator(field=field, left=A, right=A,
                            coeffs=(field.one, field.one))
    return operator_kernel(op)


def annihilator_dims(A, np):
    """(dim slot-one kernel, dim pivot kernel, dim intersection)."""
    return (len(slot1_kernel(A, np)), len(pivot_kernel(A, np)),
            len(joint_kernel(A, np)))
