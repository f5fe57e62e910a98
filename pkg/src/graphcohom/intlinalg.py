"""Exact integer linear algebra: Smith normal form, rank, integral solves.

Everything here works over Z with Python's arbitrary-precision integers; no
floating point anywhere.  Two independent elimination routes are kept on
purpose: ``smith_normal_form`` reduces a sparse working copy with unimodular
row/column operations, while ``rank_over_rationals`` runs fraction-free
(Bareiss) elimination on a dense copy.  Their ranks must always agree, which
the test suite exercises on random matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappop, heappush
from math import gcd

from .matrices import SparseIntMatrix

__all__ = [
    "SmithForm",
    "smith_normal_form",
    "rank_over_rationals",
    "divisibility_chain",
    "integral_kernel_basis",
    "integral_column_span_contains",
]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.

    The factors are positive and form a divisibility chain; r is the rank.
    Unimodular changes of basis on either side leave this data unchanged.
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        prev = None
        for d in self.invariant_factors:
            if d <= 0:
                raise ValueError("invariant factors must be positive")
            if prev is not None and d % prev:
                raise ValueError(f"{prev} does not divide {d}: not a divisibility chain")
            prev = d

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def divisibility_chain(values) -> tuple[int, ...]:
    """Canonicalise cyclic-group orders into an invariant-factor chain.

    Repeatedly replaces a violating pair (a, b) by (gcd, lcm), which leaves
    the direct sum unchanged, until the sorted list is a chain.  Zeros are
    rejected; callers represent free summands separately.
    """
    d = sorted(abs(int(x)) for x in values)
    if any(x == 0 for x in d):
        raise ValueError("cyclic order 0 is not allowed here (free parts are separate)")
    ones = sum(1 for x in d if x == 1)
    rest = [x for x in d if x > 1]
    changed = True
    while changed:
        changed = False
        rest.sort()
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                if rest[j] % rest[i]:
                    g = gcd(rest[i], rest[j])
                    rest[i], rest[j] = g, rest[i] // g * rest[j]
                    changed = True
        if changed:
            # a produced gcd of 1 moves into the unit prefix
            rest.sort()
            while rest and rest[0] == 1:
                rest.pop(0)
                ones += 1
    return (1,) * ones + tuple(rest)


class _GrowthAbort(Exception):
    """Raised when elimination entries outgrow the configured bit limit."""


def _symmetric_mod(v: int, modulus: int) -> int:
    """Residue of v in (-modulus/2, modulus/2]."""
    r = v % modulus
    return r - modulus if 2 * r > modulus else r


def _eliminate(entries, modulus=None, growth_bit_limit=None):
    """Diagonalise by unimodular row/column operations; returns pivot values.

    Positions holding +-1 sit in a heap keyed by row plus column fill at push
    time; costs go stale as the matrix changes, so each pop is revalidated
    against the current fill before use (pushes are cheap, stale duplicates
    are skipped).  A unit pivot clears its column with exact row operations
    and its row by deletion, with no coefficient growth at all.  When no unit
    entry is left, a full scan picks the smallest remaining entry and reduces
    it by the usual Euclidean row/column dance with round-to-nearest
    quotients.

    With ``modulus`` set, every entry is kept symmetric-reduced mod it.  The
    caller guarantees that is sound (see smith_normal_form: the reduction is
    a column operation against an implicit modulus*identity block riding
    along on the right).  With ``growth_bit_limit`` set instead, any entry
    exceeding that bit size raises _GrowthAbort so the caller can restart
    with bounded arithmetic.
    """
    rows: dict[int, dict[int, int]] = {}
    cols_index: dict[int, set[int]] = {}
    for r, c, v in entries:
        if modulus is not None:
            v = _symmetric_mod(v, modulus)
            if not v:
                continue
        rows.setdefault(r, {})[c] = v
        cols_index.setdefault(c, set()).add(r)

    units: list[tuple[int, int, int]] = []
    for r, row in rows.items():
        for c, v in row.items():
            if v == 1 or v == -1:
                units.append((len(row) + len(cols_index[c]), r, c))
    units.sort()

    def row_axpy(target, source, coef):
        """rows[target] += coef * rows[source]"""
        trow = rows[target]
        for c, v in rows[source].items():
            new = trow.get(c, 0) + coef * v
            if modulus is not None:
                new = _symmetric_mod(new, modulus)
            if new:
                trow[c] = new
                cols_index[c].add(target)
                if new == 1 or new == -1:
                    heappush(units, (len(trow) + len(cols_index[c]), target, c))
                elif growth_bit_limit is not None and new.bit_length() > growth_bit_limit:
                    raise _GrowthAbort
            elif c in trow:
                del trow[c]
                cols_index[c].discard(target)

    def col_axpy(target, source, coef):
        """column[target] += coef * column[source]"""
        for r in list(cols_index[source]):
            v = rows[r][source]
            new = rows[r].get(target, 0) + coef * v
            if modulus is not None:
                new = _symmetric_mod(new, modulus)
            if new:
                rows[r][target] = new
                cols_index[target].add(r)
                if new == 1 or new == -1:
                    heappush(units, (len(rows[r]) + len(cols_index[target]), r, target))
                elif growth_bit_limit is not None and new.bit_length() > growth_bit_limit:
                    raise _GrowthAbort
            elif target in rows[r]:
                del rows[r][target]
                cols_index[target].discard(r)

    diagonal = []
    while True:
        pr = pc = None
        while units:
            cost, r, c = heappop(units)
            row = rows.get(r)
            if row is None:
                continue
            v = row.get(c)
            if v != 1 and v != -1:
                continue
            current = len(row) + len(cols_index[c])
            if current > cost and units and units[0][0] < current:
                heappush(units, (current, r, c))
                continue
            pr, pc = r, c
            break
        if pr is not None:
            a = rows[pr][pc]
            for r in list(cols_index[pc]):
                if r != pr:
                    # coef solves b + coef*a = 0; 1/a is a itself for a unit
                    row_axpy(r, pr, -rows[r][pc] * a)
            for c in rows[pr]:
                cols_index[c].discard(pr)
            del rows[pr]
            diagonal.append(1)  # gcd(1, modulus) in the bounded regime
            continue

        # no unit entries anywhere; scan what little is left
        best = None
        pivot = None
        for r, row in rows.items():
            nr = len(row)
            for c, v in row.items():
                key = (abs(v), nr + len(cols_index[c]))
                if best is None or key < best:
                    best, pivot = key, (r, c)
        if pivot is None:
            break
        pr, pc = pivot
        while True:
            prow = rows[pr]
            if prow[pc] < 0:
                for c in prow:
                    prow[c] = -prow[c]
            a = prow[pc]
            half = a >> 1
            other_row = next((r for r in cols_index[pc] if r != pr), None)
            if other_row is not None:
                b = rows[other_row][pc]
                # round to nearest: symmetric remainders damp entry growth
                q = (b + half) // a
                if q:
                    row_axpy(other_row, pr, -q)
                if pc in rows[other_row]:
                    pr = other_row  # smaller remainder becomes the pivot
                continue
            other_col = next((c for c in prow if c != pc), None)
            if other_col is None:
                break
            b = prow[other_col]
            q = (b + half) // a
            if q:
                # the pivot column is clear, so this touches only row pr
                col_axpy(other_col, pc, -q)
            if other_col in prow:
                pc = other_col
        if modulus is None:
            diagonal.append(rows[pr][pc])
        else:
            # A pivot only detaches from the implicit modulus*identity block
            # when it divides the modulus; a Euclidean dance against an extra
            # modulus entry (staged in a virtual zero column, which touches
            # no other row) brings the pivot down to exactly this gcd.
            diagonal.append(gcd(rows[pr][pc], modulus))
        for c in rows[pr]:
            cols_index[c].discard(pr)
        del rows[pr]

    return diagonal


def smith_normal_form(m: SparseIntMatrix, growth_bit_limit: int = 64) -> SmithForm:
    """Smith normal form of an integer matrix.

    Runs a sparse unit-pivot-first elimination on a working copy; pivot
    values are canonicalised into a divisibility chain at the end, so pivot
    order does not matter.  An empty matrix has rank 0 and no factors.

    Entry growth is the classic failure mode of integer elimination, so a
    guard watches every write: if an entry exceeds ``growth_bit_limit`` bits,
    the run restarts with bounded arithmetic.  The bounded route first gets
    the rank r and a nonzero r x r minor D from fraction-free elimination
    (Bareiss, whose entries are minors and therefore stay small), then uses
    the fact that the invariant factors of A are the first r invariant
    factors of the block matrix [A | D*I]: every factor of A divides D, the
    trailing factors of the block are D itself, and the D*I columns let any
    single entry absorb a multiple of D as a column operation.  Eliminating
    with all entries symmetric-reduced mod D is therefore exact, and no
    intermediate value can outgrow D.
    """
    try:
        diagonal = _eliminate(m.entries, growth_bit_limit=growth_bit_limit)
        return SmithForm(divisibility_chain(diagonal))
    except _GrowthAbort:
        pass
    rank, minor = _bareiss(m)
    if rank == 0:
        return SmithForm(())
    modulus = abs(minor)
    diagonal = _eliminate(m.entries, modulus=modulus)
    padded = list(diagonal) + [modulus] * (m.rows - len(diagonal))
    return SmithForm(divisibility_chain(padded)[:rank])


def _bareiss(m: SparseIntMatrix) -> tuple[int, int]:
    """Fraction-free (Bareiss) elimination on a dense copy.

    Returns (rank, minor) where minor is the determinant of the r x r
    submatrix picked out by the pivot rows and columns, up to sign (1 for
    rank 0).  Every division below is exact, so the computation stays in Z,
    and intermediate entries are themselves minors of the input, which keeps
    them small.  Pivots are chosen by smallest nonzero absolute value in the
    remaining submatrix; rows and columns are swapped to bring each into
    place.
    """
    if m.rows == 0 or m.cols == 0:
        return 0, 1
    a = m.to_dense()
    nr, nc = m.rows, m.cols
    prev = 1
    rank = 0
    for k in range(min(nr, nc)):
        pr = pc = -1
        best = None
        for i in range(k, nr):
            row = a[i]
            for j in range(k, nc):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best, pr, pc = abs(v), i, j
                    if best == 1:
                        break
            if best == 1:
                break
        if best is None:
            break
        if pr != k:
            a[k], a[pr] = a[pr], a[k]
        if pc != k:
            for row in a:
                row[k], row[pc] = row[pc], row[k]
        pivot = a[k][k]
        for i in range(k + 1, nr):
            rik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, nc):
                row_i[j] = (row_i[j] * pivot - rik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
        rank += 1
    return rank, prev


def rank_over_rationals(m: SparseIntMatrix) -> int:
    """Rank over Q by fraction-free Bareiss elimination on a dense copy."""
    return _bareiss(m)[0]


def _column_echelon(m: SparseIntMatrix, track_transform: bool):
    """Reduce to column echelon form by unimodular column operations.

    Returns (pivots, zero_transform_columns) where pivots is a list of
    (leading_row, column_dict) with strictly increasing leading rows, and
    zero_transform_columns are the transform columns whose matrix column was
    reduced to zero (an integral basis of the kernel) when tracking is on.
    """
    columns: list[dict[int, int]] = [dict() for _ in range(m.cols)]
    for r, c, v in m.entries:
        columns[c][r] = v
    transform: list[dict[int, int]] = [{c: 1} for c in range(m.cols)]

    active = list(range(m.cols))
    pivots = []
    for row in range(m.rows):
        holders = [c for c in active if row in columns[c]]
        while len(holders) > 1:
            holders.sort(key=lambda c: abs(columns[c][row]))
            base = holders[0]
            bv = columns[base][row]
            remaining = [base]
            for c in holders[1:]:
                q = columns[c][row] // bv
                if q:
                    for r, v in columns[base].items():
                        new = columns[c].get(r, 0) - q * v
                        if new:
                            columns[c][r] = new
                        elif r in columns[c]:
                            del columns[c][r]
                    if track_transform:
                        for r, v in transform[base].items():
                            new = transform[c].get(r, 0) - q * v
                            if new:
                                transform[c][r] = new
                            elif r in transform[c]:
                                del transform[c][r]
                if row in columns[c]:
                    remaining.append(c)
            holders = remaining
        if holders:
            c = holders[0]
            pivots.append((row, columns[c]))
            active.remove(c)

    kernel = [transform[c] for c in active] if track_transform else []
    for c in active:
        if columns[c]:
            raise AssertionError("non-pivot column left nonzero after echelon pass")
    return pivots, kernel


def integral_kernel_basis(m: SparseIntMatrix) -> list[tuple[int, ...]]:
    """A Z-basis of the integral kernel {x : m x = 0}.

    Column-reduces m with unimodular operations while tracking them; the
    transform columns over the vanished matrix columns form the basis.
    """
    _, kernel = _column_echelon(m, track_transform=True)
    return [tuple(col.get(i, 0) for i in range(m.cols)) for col in kernel]


def integral_column_span_contains(m: SparseIntMatrix, vectors) -> bool:
    """Whether every given vector lies in the Z-span of m's columns.

    The echelon pivot columns span the same Z-module as m's columns, and
    their strictly increasing leading rows make membership a greedy exact
    division from the top.
    """
    pivots, _ = _column_echelon(m, track_transform=False)
    by_leading = {row: col for row, col in pivots}
    for vec in vectors:
        residual = {i: v for i, v in enumerate(vec) if v}
        if residual and max(residual) >= m.rows:
            raise ValueError("vector length does not match matrix rows")
        ok = True
        while residual:
            r = min(residual)
            col = by_leading.get(r)
            if col is None or residual[r] % col[r]:
                ok = False
                break
            q = residual[r] // col[r]
            for i, v in col.items():
                new = residual.get(i, 0) - q * v
                if new:
                    residual[i] = new
                elif i in residual:
                    del residual[i]
        if not ok:
            return False
    return True
