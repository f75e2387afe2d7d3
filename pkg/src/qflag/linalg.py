"""Exact linear algebra over QScalar (or any exact field type).

Vectors are sparse dicts ``key -> scalar`` with no zero entries.  Keys only
need to be hashable; callers that care about pivot choice pass an ordering.
"""

from .errors import InternalInvariantError


def vec_add_scaled(target, src, k):
    """target += k * src, in place; drops zeros."""
    for key, v in src.items():
        cur = target.get(key)
        nv = v * k if cur is None else cur + v * k
        if nv:
            target[key] = nv
        else:
            target.pop(key, None)


def vec_scale(v, k):
    if not k:
        return {}
    return {key: c * k for key, c in v.items()}


class Echelon:
    """Incrementally built echelon basis of a subspace.

    Every stored row is monic at its pivot and reduced against the pivots
    stored before it, so a single pass over the pivots in insertion order
    reduces any vector completely.
    """

    def __init__(self, order=None):
        self.order = order
        self.pivots = []        # list of (col, row) in insertion order
        self._index = {}        # col -> position in self.pivots

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec, track=None):
        """Return vec reduced modulo the span (a new dict).

        With ``track`` (a dict of combination coefficients per stored row
        index) the multiples subtracted are recorded, so that
        ``vec = reduced + sum(track[i] * row_i)``.
        """
        v = dict(vec)
        if not v:
            return v
        for pos, (col, row) in enumerate(self.pivots):
            c = v.get(col)
            if c:
                vec_add_scaled(v, row, -c)
                if track is not None:
                    track[pos] = track.get(pos, 0) + c
        return v

    def _choose(self, v):
        if self.order is None:
            return min(v, key=_sort_key)
        return min(v, key=self.order)

    def add(self, vec):
        """Insert vec; returns True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        col = self._choose(v)
        inv = v[col].invert() if hasattr(v[col], "invert") else 1 / v[col]
        v = vec_scale(v, inv)
        self._index[col] = len(self.pivots)
        self.pivots.append((col, v))
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def rank(self):
        return len(self.pivots)


def _sort_key(key):
    return repr(key)


def rank(vectors, order=None):
    ech = Echelon(order)
    for v in vectors:
        ech.add(v)
    return ech.rank


def solve_dense(columns, rhs, zero, one):
    """Solve sum_j x_j * columns[j] == rhs for a unique x.

    ``columns`` are equal-length lists.  Raises InternalInvariantError when
    the system is inconsistent or underdetermined.
    """
    m = len(rhs)
    n = len(columns)
    rows = [[columns[j][i] for j in range(n)] + [rhs[i]] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            raise InternalInvariantError("linear system is singular")
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].invert()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, m):
        if rows[i][n]:
            raise InternalInvariantError("linear system is inconsistent")
    return [rows[i][n] for i in range(n)]


def rref(vectors, order=None):
    """Fully reduced echelon form: list of (pivot, row), rows monic at pivot
    and free of every other pivot column."""
    ech = Echelon(order)
    for v in vectors:
        ech.add(v)
    rows = [dict(r) for _, r in ech.pivots]
    cols = [c for c, _ in ech.pivots]
    for k in range(len(rows) - 1, -1, -1):
        row = rows[k]
        for j in range(k + 1, len(rows)):
            c = row.get(cols[j])
            if c:
                vec_add_scaled(row, rows[j], -c)
    return list(zip(cols, rows))


def kernel_combinations(vectors, one):
    """Basis of {c : sum_j c_j vectors[j] = 0}, each as a dict j -> c_j.

    Every vector is tagged with a unit coordinate of its own; tag columns are
    only ever chosen as pivots once the untagged part has been eliminated.
    """
    tag = "#kernel"

    def is_tag(key):
        return isinstance(key, tuple) and len(key) == 2 and key[0] == tag

    ech = Echelon(lambda key: (1 if is_tag(key) else 0, _sort_key(key)))
    for j, v in enumerate(vectors):
        aug = dict(v)
        aug[(tag, j)] = one
        ech.add(aug)
    return [{k[1]: c for k, c in row.items()}
            for col, row in ech.pivots if is_tag(col)]
