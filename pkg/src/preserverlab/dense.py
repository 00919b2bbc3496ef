"""Vectorized exhaustive scans over finite matrix spaces.

Matrices over a finite field with q elements are coded as integers:
row-major base-q digits of the element indices, entry (0, 0) least
significant.  This matches matrices.matrix_code, so exact tuple
matrices and dense codes interconvert freely.

Evaluation works on columns of codes: give one numpy array of codes
per polynomial variable (all the same length) and eval_tuples returns
the element-index arrays of the polynomial values, one n x n block
per tuple.  Prime fields ride on integer matmul mod p; extension
fields go through small element add and multiply tables.

Nothing here ever materializes a q^(n^2) by q^(n^2) product table;
full pair or tuple scans are chunked through tuple_columns.
"""

import numpy as np

from .matrices import matrix_code, matrix_from_code
from .unipoly import BudgetError

FULL_SPACE_CAP = 2 ** 20      # largest space enumerated outright
CHUNK = 2 ** 18               # tuples processed per numpy batch


class DenseSpace:
    """Dense coding of the n x n matrices over a finite field."""

    def __init__(self, field, n):
        if field.kind not in ("prime", "extension"):
            raise BudgetError("dense scans need a finite field")
        self.field = field
        self.n = n
        self.q = field.order
        self.count = self.q ** (n * n)
        self.prime = field.kind == "prime"
        if not self.prime:
            els = [field.elem_at(i) for i in range(self.q)]
            add = np.zeros((self.q, self.q), dtype=np.int64)
            mul = np.zeros((self.q, self.q), dtype=np.int64)
            for i, a in enumerate(els):
                for j, b in enumerate(els):
                    add[i, j] = field.index(field.add(a, b))
                    mul[i, j] = field.index(field.mul(a, b))
            self.ew_add = add
            self.ew_mul = mul

    def decode(self, codes):
        """(N,) codes -> (N, n, n) element-index arrays."""
        codes = np.asarray(codes, dtype=np.int64)
        n = self.n
        out = np.empty(codes.shape + (n, n), dtype=np.int64)
        rest = codes.copy()
        for i in range(n):
            for j in range(n):
                out[..., i, j] = rest % self.q
                rest //= self.q
        return out

    def encode(self, mats):
        """(N, n, n) element-index arrays -> (N,) codes."""
        mats = np.asarray(mats, dtype=np.int64)
        n = self.n
        codes = np.zeros(mats.shape[:-2], dtype=np.int64)
        shift = 1
        for i in range(n):
            for j in range(n):
                codes += mats[..., i, j] * shift
                shift *= self.q
        return codes

    def code_of(self, A):
        return matrix_code(self.field, A)

    def matrix_of(self, code):
        return matrix_from_code(self.field, int(code), self.n)

    def all_codes(self):
        if self.count > FULL_SPACE_CAP:
            raise BudgetError("space of %d matrices exceeds the dense cap"
                              % self.count)
        return np.arange(self.count, dtype=np.int64)

    def _mat_mul(self, A, B):
        """(N, n, n) batched product on element-index arrays."""
        if self.prime:
            return np.einsum("...ij,...jk->...ik", A, B) % self.q
        n = self.n
        out = np.zeros(np.broadcast(A[..., 0, 0], B[..., 0, 0]).shape
                       + (n, n), dtype=np.int64)
        for i in range(n):
            for k in range(n):
                acc = None
                for j in range(n):
                    term = self.ew_mul[A[..., i, j], B[..., j, k]]
                    acc = term if acc is None else self.ew_add[acc, term]
                out[..., i, k] = acc
        return out

    def _scale(self, c, A):
        ci = self.field.index(c)
        if self.prime:
            return (A * ci) % self.q
        return self.ew_mul[ci, A]

    def _add(self, A, B):
        if self.prime:
            return (A + B) % self.q
        return self.ew_add[A, B]

    def eval_tuples(self, p, columns):
        """Value blocks of the polynomial on coded tuples.

        columns holds one code array per variable, broadcastable to a
        common length N; returns (N, n, n) element-index arrays."""
        decoded = [self.decode(np.asarray(c, dtype=np.int64))
                   for c in columns]
        shape = np.broadcast(*[d[..., 0, 0] for d in decoded]).shape \
            if len(decoded) > 1 else decoded[0][..., 0, 0].shape
        acc = None
        for perm, coeff in p.terms.items():
            word = decoded[perm[0] - 1]
            for v in perm[1:]:
                word = self._mat_mul(word, decoded[v - 1])
            word = self._scale(coeff, word)
            acc = word if acc is None else self._add(acc, word)
        if acc is None:
            acc = np.zeros(shape + (self.n, self.n), dtype=np.int64)
        return np.broadcast_to(acc, shape + (self.n, self.n))

    def zero_mask(self, p, columns):
        vals = self.eval_tuples(p, columns)
        return (vals == 0).all(axis=(-2, -1))

    def tuple_columns(self, k, cap=None):
        """Chunked enumeration of all k-tuples of the space.

        Yields (start, columns) with start the flat index of the first
        tuple in the chunk.  Tuple order: the slot-one code varies
        slowest, the last slot fastest, matching nested loops over
        matrix codes."""
        total = self.count ** k
        if cap is not None and total > cap:
            raise BudgetError("tuple scan of %d exceeds cap %d"
                              % (total, cap))
        chunk = max(1, CHUNK)
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total),
                            dtype=np.int64)
            columns = []
            rest = idx
            for v in range(k - 1, -1, -1):
                columns.append(rest % self.count)
                rest = rest // self.count
            columns.reverse()
            yield start, columns

    def columns_for_range(self, k, start, count):
        """Code columns for tuple indices [start, start+count), in the
        same order tuple_columns uses."""
        idx = np.arange(start, start + count, dtype=np.int64)
        columns = []
        rest = idx
        for v in range(k - 1, -1, -1):
            columns.append(rest % self.count)
            rest = rest // self.count
        columns.reverse()
        return columns

    def map_table(self, fn):
        """Code table of an exact matrix map: table[code_of(A)] =
        code_of(fn(A)).  Exact python per matrix; use only within the
        full-space cap."""
        codes = self.all_codes()
        out = np.empty(self.count, dtype=np.int64)
        for c in range(self.count):
            out[c] = self.code_of(fn(self.matrix_of(c)))
        return out

    def poly_identity(self, p):
        """True when p vanishes on every k-tuple of the space."""
        for start, columns in self.tuple_columns(p.k):
            if not bool(self.zero_mask(p, columns).all()):
                return False
        return True

    def first_nonzero_tuple(self, p):
        """Earliest tuple (in enumeration order) where p does not
        vanish, as exact matrices, or None."""
        for start, columns in self.tuple_columns(p.k):
            mask = self.zero_mask(p, columns)
            if not bool(mask.all()):
                at = int(np.argmin(mask))
                return tuple(self.matrix_of(int(col[at]))
                             for col in columns)
        return None
