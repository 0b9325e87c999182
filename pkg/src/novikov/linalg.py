"""Exact sparse linear algebra over arbitrary-precision rationals.

Everything here is deterministic: pivot choices are fixed by explicit
tie-breaking rules, so ranks, nullspace bases and solutions are
reproducible bit-for-bit across runs.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as QQ

ZERO = QQ(0)
ONE = QQ(1)


def rational(value):
    """Coerce an int, "p/q" string or rational into canonical form."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; write the value as p/q")
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return QQ(int(num), int(den))
        return QQ(int(text))
    return QQ(value)


def format_rational(value):
    q = QQ(value)
    if q.denominator == 1:
        return str(q.numerator)
    return "%s/%s" % (q.numerator, q.denominator)


class RationalSparseMatrix:
    """Sparse matrix over Q keyed by (row, col); zero entries are never stored."""

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise ValueError("entry (%d, %d) out of bounds" % (i, j))
                q = QQ(v)
                if q != 0:
                    self.entries[(i, j)] = q

    @classmethod
    def from_rows(cls, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        entries = {}
        for i, row in enumerate(row_lists):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                q = QQ(v)
                if q != 0:
                    entries[(i, j)] = q
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): ONE for i in range(n)})

    def to_rows(self):
        dense = [[ZERO] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            dense[i][j] = v
        return dense

    def transpose(self):
        return RationalSparseMatrix(
            self.cols, self.rows,
            {(j, i): v for (i, j), v in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (isinstance(other, RationalSparseMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __repr__(self):
        return "RationalSparseMatrix(%d x %d, %d nonzero)" % (
            self.rows, self.cols, len(self.entries))

    def matvec(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length %d != cols %d" % (len(vec), self.cols))
        out = [ZERO] * self.rows
        for (i, j), v in self.entries.items():
            x = vec[j]
            if x:
                out[i] += v * x
        return out

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch for product")
        by_row = {}
        for (i, j), v in other.entries.items():
            by_row.setdefault(i, []).append((j, v))
        out = {}
        for (i, k), v in self.entries.items():
            for j, w in by_row.get(k, ()):
                key = (i, j)
                acc = out.get(key, ZERO) + v * w
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return RationalSparseMatrix(self.rows, other.cols, out)

    def _row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    # -- rank ----------------------------------------------------------

    def rank(self):
        """Exact rank over Q by sparse elimination with min-fill pivoting.

        Pivot column: fewest active nonzeros (ties -> lowest column index);
        pivot row within it: fewest nonzeros (ties -> lowest row index).
        """
        rows = self._row_dicts()
        colrows = {}
        for i, row in enumerate(rows):
            for j in row:
                colrows.setdefault(j, set()).add(i)
        rank = 0
        while colrows:
            c = min(colrows, key=lambda j: (len(colrows[j]), j))
            holders = colrows[c]
            r = min(holders, key=lambda i: (len(rows[i]), i))
            piv = rows[r][c]
            prow = rows[r]
            if piv != 1:
                for j in prow:
                    prow[j] /= piv
            for i in list(holders):
                if i == r:
                    continue
                row = rows[i]
                f = row[c]
                for j, v in prow.items():
                    cur = row.get(j, ZERO) - f * v
                    if cur:
                        if j not in row:
                            colrows.setdefault(j, set()).add(i)
                        row[j] = cur
                    elif j in row:
                        del row[j]
                        cr = colrows.get(j)
                        if cr is not None:
                            cr.discard(i)
                            if not cr:
                                del colrows[j]
            for j in prow:
                cr = colrows.get(j)
                if cr is not None:
                    cr.discard(r)
                    if not cr:
                        del colrows[j]
            rows[r] = {}
            rank += 1
        return rank

    # -- reduced row echelon helpers ------------------------------------

    def _rref(self, aug=None):
        """Full RREF with left-to-right pivot columns, lowest-row ties.

        Returns (reduced row dicts, pivots as list of (row, col), aug rows).
        """
        rows = self._row_dicts()
        order = list(range(self.rows))
        augrows = [list(a) for a in aug] if aug is not None else None
        pivots = []
        for c in range(self.cols):
            prow = None
            for pos in range(len(pivots), len(order)):
                if c in rows[order[pos]]:
                    prow = pos
                    break
            if prow is None:
                continue
            pos = len(pivots)
            order[pos], order[prow] = order[prow], order[pos]
            r = order[pos]
            piv = rows[r][c]
            if piv != 1:
                for j in rows[r]:
                    rows[r][j] /= piv
                if augrows is not None:
                    augrows[r] = [x / piv for x in augrows[r]]
            for other in order:
                if other == r:
                    continue
                row = rows[other]
                f = row.get(c)
                if not f:
                    continue
                for j, v in rows[r].items():
                    cur = row.get(j, ZERO) - f * v
                    if cur:
                        row[j] = cur
                    elif j in row:
                        del row[j]
                if augrows is not None:
                    augrows[other] = [x - f * y
                                      for x, y in zip(augrows[other], augrows[r])]
            pivots.append((r, c))
        return rows, pivots, augrows

    def nullspace_basis(self):
        """Deterministic kernel basis, one vector per free column (lex order)."""
        rows, pivots, _ = self._rref()
        pivot_cols = {c: r for r, c in pivots}
        basis = []
        for f in range(self.cols):
            if f in pivot_cols:
                continue
            vec = [ZERO] * self.cols
            vec[f] = ONE
            for c, r in pivot_cols.items():
                coeff = rows[r].get(f)
                if coeff:
                    vec[c] = -coeff
            basis.append(vec)
        return basis

    def solve(self, b):
        """Some x with M x = b, or None when inconsistent."""
        if len(b) != self.rows:
            raise ValueError("rhs length %d != rows %d" % (len(b), self.rows))
        rows, pivots, aug = self._rref(aug=[[QQ(x)] for x in b])
        pivot_rows = {r for r, _ in pivots}
        for i in range(self.rows):
            if i not in pivot_rows and not rows[i] and aug[i][0] != 0:
                return None
        x = [ZERO] * self.cols
        for r, c in pivots:
            x[c] = aug[r][0]
        return x

    # -- modular oracle --------------------------------------------------

    def rank_mod_p(self, p):
        """Rank of the reduction mod p; raises if p divides a denominator.

        Independent of the rational path: integer arithmetic, own pivot rule
        (fewest-column ties -> lowest column, then lowest row index).
        """
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        rows = [dict() for _ in range(self.rows)]
        colrows = {}
        for (i, j), v in self.entries.items():
            den = v.denominator % p
            if den == 0:
                raise ValueError("prime %d divides a denominator" % p)
            val = (v.numerator % p) * pow(den, -1, p) % p
            if val:
                rows[i][j] = val
                colrows.setdefault(j, set()).add(i)
        rank = 0
        while colrows:
            c = min(colrows, key=lambda j: (len(colrows[j]), j))
            r = min(colrows[c])
            prow = rows[r]
            inv = pow(prow[c], -1, p)
            for j in prow:
                prow[j] = prow[j] * inv % p
            for i in list(colrows[c]):
                if i == r:
                    continue
                row = rows[i]
                f = row[c]
                for j, v in prow.items():
                    cur = (row.get(j, 0) - f * v) % p
                    if cur:
                        if j not in row:
                            colrows.setdefault(j, set()).add(i)
                        row[j] = cur
                    elif j in row:
                        del row[j]
                        cr = colrows.get(j)
                        if cr is not None:
                            cr.discard(i)
                            if not cr:
                                del colrows[j]
            for j in prow:
                cr = colrows.get(j)
                if cr is not None:
                    cr.discard(r)
                    if not cr:
                        del colrows[j]
            rows[r] = {}
            rank += 1
        return rank


def naive_dense_rank(matrix):
    """Textbook dense Gaussian elimination; used as an oracle against rank()."""
    dense = matrix.to_rows()
    nrows, ncols = matrix.rows, matrix.cols
    rank = 0
    for c in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if dense[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        dense[rank], dense[pivot] = dense[pivot], dense[rank]
        pv = dense[rank][c]
        for i in range(rank + 1, nrows):
            f = dense[i][c]
            if f:
                ratio = f / pv
                dense[i] = [a - ratio * b for a, b in zip(dense[i], dense[rank])]
        rank += 1
    return rank


def random_prime_30bit(rng):
    """A random 30-bit prime from the given random.Random instance."""
    while True:
        n = rng.randrange(1 << 29, 1 << 30) | 1
        if _is_prime(n):
            return n


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
