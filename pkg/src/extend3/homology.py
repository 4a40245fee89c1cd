"""
Integral homology of cell complexes: sparse unit-pivot reduction followed by
Smith normal form on the small remaining core.
"""
from fractions import Fraction


def smith_normal_form(rows, ncols):
    """Diagonal invariant factors of an integer matrix given as a list of
    rows (lists).  Returns (rank, divisors) with divisors the nontrivial
    diagonal entries (> 0, each dividing the next)."""
    m = [list(r) for r in rows]
    nr, nc = len(m), ncols
    divisors = []
    r0 = c0 = 0
    while r0 < nr and c0 < nc:
        # find a nonzero pivot of least absolute value
        best = None
        for i in range(r0, nr):
            for j in range(c0, nc):
                v = m[i][j]
                if v != 0 and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[r0], m[bi] = m[bi], m[r0]
        for row in m:
            row[c0], row[bj] = row[bj], row[c0]
        if m[r0][c0] < 0:
            m[r0] = [-v for v in m[r0]]
        piv = m[r0][c0]
        dirty = False
        for i in range(r0 + 1, nr):
            q = m[i][c0] // piv
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r0])]
            if m[i][c0]:
                dirty = True
        for j in range(c0 + 1, nc):
            q = m[r0][j] // piv
            if q:
                for i in range(nr):
                    m[i][j] -= q * m[i][c0]
            if m[r0][j]:
                dirty = True
        if dirty:
            continue
        # ensure divisibility: pivot must divide everything below-right
        offender = None
        for i in range(r0 + 1, nr):
            for j in range(c0 + 1, nc):
                if m[i][j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            m[r0] = [a + b for a, b in zip(m[r0], m[offender])]
            continue
        divisors.append(piv)
        r0 += 1
        c0 += 1
    rank = len(divisors)
    return rank, [d for d in divisors if d != 1]


def sparse_rank_and_core(entries, nrows, ncols):
    """Reduce a sparse integer matrix {(i, j): v} by +-1 pivots.

    Returns (unit_rank, core_rows, core_ncols, row_map, col_map) where the
    core is the small dense remainder (possibly empty)."""
    rows = {}
    cols = {}
    for (i, j), v in entries.items():
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, {})[i] = v
    unit_rank = 0
    while True:
        pivot = None
        # deterministic: lowest (row, col) among +-1 entries
        for i in sorted(rows):
            for j in sorted(rows[i]):
                if rows[i][j] in (1, -1):
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        pv = rows[pi][pj]
        prow = dict(rows.pop(pi))
        for j in prow:
            cols[j].pop(pi, None)
            if not cols[j]:
                cols.pop(j, None)
        pcol = dict(cols.pop(pj, {}))
        for i, v in pcol.items():
            # row_i -= (v / pv) * prow
            q = v * pv  # pv in {1,-1}: v/pv == v*pv
            ri = rows.get(i)
            if ri is None:
                continue
            for j, w in prow.items():
                if j == pj:
                    ri.pop(j, None)
                    cols.get(j, {}).pop(i, None)
                    continue
                nv = ri.get(j, 0) - q * w
                if nv:
                    ri[j] = nv
                    cols.setdefault(j, {})[i] = nv
                else:
                    ri.pop(j, None)
                    if j in cols:
                        cols[j].pop(i, None)
                        if not cols[j]:
                            cols.pop(j)
            if not ri:
                rows.pop(i)
        unit_rank += 1
    core_row_ids = sorted(rows)
    core_col_ids = sorted({j for r in rows.values() for j in r})
    col_pos = {j: k for k, j in enumerate(core_col_ids)}
    core = [[0] * len(core_col_ids) for _ in core_row_ids]
    for a, i in enumerate(core_row_ids):
        for j, v in rows[i].items():
            core[a][col_pos[j]] = v
    return unit_rank, core, len(core_col_ids)


def sparse_smith(entries, nrows, ncols):
    """(rank, torsion divisors) of a sparse integer matrix."""
    unit_rank, core, core_cols = sparse_rank_and_core(entries, nrows, ncols)
    if not core:
        return unit_rank, []
    r, div = smith_normal_form(core, core_cols)
    return unit_rank + r, div


class ChainComplex:
    """Integer chain complex C_3 -> C_2 -> C_1 -> C_0 given by sparse
    boundary matrices d[k]: {(cell_{k-1}, cell_k): coefficient}."""

    def __init__(self, counts, boundaries):
        self.counts = counts          # dim -> number of cells
        self.boundaries = boundaries  # dim -> {(row, col): v}, rows in dim-1

    def verify_dd_zero(self):
        for k in (2, 3):
            dk = self.boundaries.get(k, {})
            dk1 = self.boundaries.get(k - 1, {})
            by_col = {}
            for (i, j), v in dk.items():
                by_col.setdefault(j, []).append((i, v))
            lower = {}
            for (i, j), v in dk1.items():
                lower.setdefault(j, []).append((i, v))
            for j, col in sorted(by_col.items()):
                acc = {}
                for i, v in col:
                    for i2, v2 in lower.get(i, ()):
                        acc[i2] = acc.get(i2, 0) + v * v2
                assert all(v == 0 for v in acc.values()), \
                    "dd != 0 at dim %d cell %d" % (k, j)

    def homology(self):
        """[(rank, divisors)] for H_0..H_3."""
        ranks = {}
        torsions = {}
        for k in (1, 2, 3):
            d = self.boundaries.get(k, {})
            r, div = sparse_smith(d, self.counts.get(k - 1, 0),
                                  self.counts.get(k, 0))
            ranks[k] = r
            torsions[k] = div
        out = []
        for k in range(4):
            rk = self.counts.get(k, 0) - ranks.get(k, 0) - ranks.get(k + 1, 0)
            out.append((rk, torsions.get(k + 1, [])))
        return out

    def euler_characteristic(self):
        return sum((-1) ** k * self.counts.get(k, 0) for k in range(4))
