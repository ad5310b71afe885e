"""Exact chain-complex linear algebra.

Boundary matrices, sparse integer Smith normal form with transformation
certificates, ranks over ℚ and prime fields, and simplicial homology with
torsion.  All arithmetic is exact (Python integers).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .complexes import SimplicialComplex
from .errors import DimensionOutOfRange, UnsupportedCoefficients


@dataclass(frozen=True)
class Ring:
    kind: str  # "Z", "Q" or "Fp"
    p: Optional[int] = None

    def __str__(self):
        if self.kind == "Fp":
            return f"F{self.p}"
        return self.kind


ZZ = Ring("Z")
QQ = Ring("Q")


def GF(p: int) -> Ring:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise UnsupportedCoefficients(f"{p} is not prime")
    return Ring("Fp", p)


def parse_ring(text: str) -> Ring:
    t = text.strip().upper()
    if t in ("Z", "ZZ"):
        return ZZ
    if t in ("Q", "QQ"):
        return QQ
    if t.startswith("F") and t[1:].isdigit():
        return GF(int(t[1:]))
    if t.startswith("Z") and t[1:].isdigit():
        return GF(int(t[1:]))
    raise UnsupportedCoefficients(f"unknown ring {text!r}")


@dataclass(frozen=True)
class SparseMatrix:
    nrows: int
    ncols: int
    entries: Dict[Tuple[int, int], int] = field(hash=False)

    def __post_init__(self):
        for (r, c), v in self.entries.items():
            if v == 0:
                raise ValueError("explicit zero entry")
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise ValueError("entry out of range")

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def times(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        rows: Dict[int, Dict[int, int]] = {}
        other_rows: Dict[int, Dict[int, int]] = {}
        for (r, c), v in other.entries.items():
            other_rows.setdefault(r, {})[c] = v
        for (r, k), v in self.entries.items():
            if k in other_rows:
                row = rows.setdefault(r, {})
                for c, w in other_rows[k].items():
                    row[c] = row.get(c, 0) + v * w
        entries = {
            (r, c): v for r, row in rows.items() for c, v in row.items() if v != 0
        }
        return SparseMatrix(self.nrows, other.ncols, entries)

    def column(self, c: int) -> Dict[int, int]:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}


def identity_matrix(n: int) -> SparseMatrix:
    return SparseMatrix(n, n, {(i, i): 1 for i in range(n)})


class _Elim:
    """Mutable sparse integer elimination workspace with optional certificates."""

    def __init__(self, M: SparseMatrix, track: bool):
        self.nrows, self.ncols = M.nrows, M.ncols
        self.rows: Dict[int, Dict[int, int]] = {}
        self.cols: Dict[int, set] = {}
        for (r, c), v in M.entries.items():
            self.rows.setdefault(r, {})[c] = v
            self.cols.setdefault(c, set()).add(r)
        self.nnz = len(M.entries)
        self.unit_heap: List[Tuple[int, int, int]] = []
        for (r, c), v in M.entries.items():
            if v == 1 or v == -1:
                self._push_unit(r, c)
        self.track = track
        if track:
            # U acts on rows (U·M), V on columns (M·V), kept as sparse rows.
            self.U = {r: {r: 1} for r in range(self.nrows)}
            self.V = {c: {c: 1} for c in range(self.ncols)}

    def entry(self, r, c):
        return self.rows.get(r, {}).get(c, 0)

    def _set(self, r, c, v):
        row = self.rows.setdefault(r, {})
        if v == 0:
            if c in row:
                del row[c]
                self.cols[c].discard(r)
                self.nnz -= 1
                if not row:
                    del self.rows[r]
        else:
            if c not in row:
                self.nnz += 1
            row[c] = v
            self.cols.setdefault(c, set()).add(r)
            if v == 1 or v == -1:
                self._push_unit(r, c)

    def row_op(self, target, source, coeff):
        """row[target] += coeff * row[source]"""
        for c, v in list(self.rows.get(source, {}).items()):
            self._set(target, c, self.entry(target, c) + coeff * v)
        if self.track:
            urow = self.U.setdefault(target, {})
            for c, v in self.U.get(source, {}).items():
                nv = urow.get(c, 0) + coeff * v
                if nv == 0:
                    urow.pop(c, None)
                else:
                    urow[c] = nv

    def col_op(self, target, source, coeff):
        """col[target] += coeff * col[source]"""
        for r in list(self.cols.get(source, set())):
            self._set(r, target, self.entry(r, target) + coeff * self.entry(r, source))
        if self.track:
            # V columns: V[:, target] += coeff * V[:, source]; stored row-wise.
            for vr, vrow in self.V.items():
                if source in vrow:
                    nv = vrow.get(target, 0) + coeff * vrow[source]
                    if nv == 0:
                        vrow.pop(target, None)
                    else:
                        vrow[target] = nv

    def swap_rows(self, a, b):
        if a == b:
            return
        ra, rb = self.rows.get(a, {}), self.rows.get(b, {})
        for c in set(ra) | set(rb):
            self.cols[c].discard(a)
            self.cols[c].discard(b)
        if ra:
            self.rows[b] = ra
        else:
            self.rows.pop(b, None)
        if rb:
            self.rows[a] = rb
        else:
            self.rows.pop(a, None)
        for c, v in self.rows.get(a, {}).items():
            self.cols[c].add(a)
            if v == 1 or v == -1:
                self._push_unit(a, c)
        for c, v in self.rows.get(b, {}).items():
            self.cols[c].add(b)
            if v == 1 or v == -1:
                self._push_unit(b, c)
        if self.track:
            ua, ub = self.U.get(a, {}), self.U.get(b, {})
            self.U[a], self.U[b] = ub, ua

    def swap_cols(self, a, b):
        if a == b:
            return
        for r in self.cols.get(a, set()) | self.cols.get(b, set()):
            row = self.rows[r]
            va, vb = row.get(a, 0), row.get(b, 0)
            self._set(r, a, vb)
            self._set(r, b, va)
        if self.track:
            for vr, vrow in self.V.items():
                va, vb = vrow.pop(a, None), vrow.pop(b, None)
                if vb is not None:
                    vrow[a] = vb
                if va is not None:
                    vrow[b] = va

    def negate_row(self, r):
        for c in list(self.rows.get(r, {})):
            self.rows[r][c] = -self.rows[r][c]
        if self.track:
            for c in list(self.U.get(r, {})):
                self.U[r][c] = -self.U[r][c]

    def _push_unit(self, r, c):
        row = self.rows.get(r)
        if row is None:
            return
        heap = self.unit_heap
        if len(heap) > 64 and len(heap) > 8 * self.nnz:
            # Compact away stale positions accumulated by row/column ops.
            fresh = [
                (len(rw) + len(self.cols[cc]), rr, cc)
                for rr, rw in self.rows.items()
                for cc, vv in rw.items()
                if vv == 1 or vv == -1
            ]
            heapq.heapify(fresh)
            self.unit_heap = heap = fresh
        fill = len(row) + len(self.cols.get(c, ()))
        heapq.heappush(heap, (fill, r, c))

    def find_pivot(self, start):
        """A pivot position at or beyond start, preferring unit entries.

        Unit entries never force divisibility repairs, so they are drawn
        first from a lazily-maintained min-fill heap (stale positions are
        re-checked on pop); only when none remain does a full Markowitz scan
        over the residual block run.
        """
        heap = self.unit_heap
        while heap:
            _fill, r, c = heapq.heappop(heap)
            if r < start or c < start:
                continue
            v = self.rows.get(r, {}).get(c, 0)
            if v == 1 or v == -1:
                return r, c
        best = None
        for r, row in self.rows.items():
            if r < start:
                continue
            rl = len(row)
            for c, v in row.items():
                if c < start:
                    continue
                if v == 1 or v == -1:
                    self._push_unit(r, c)
                    continue
                key = (abs(v), rl + len(self.cols[c]))
                if best is None or key < best[0]:
                    best = (key, r, c)
        if heap:
            _fill, r, c = heapq.heappop(heap)
            return r, c
        if best is None:
            return None
        return best[1], best[2]


def _smith(M: SparseMatrix, track: bool):
    e = _Elim(M, track)
    n = min(M.nrows, M.ncols)
    diag: List[int] = []
    k = 0
    while k < n:
        pos = e.find_pivot(k)
        if pos is None:
            break
        r0, c0 = pos
        e.swap_rows(k, r0)
        e.swap_cols(k, c0)
        while True:
            if e.entry(k, k) < 0:
                e.negate_row(k)
            v = e.entry(k, k)
            # Reduce the pivot column.
            moved = False
            for r in sorted(e.cols.get(k, set())):
                if r == k:
                    continue
                q = e.entry(r, k) // v
                if q:
                    e.row_op(r, k, -q)
                if e.entry(r, k) != 0:
                    e.swap_rows(k, r)
                    moved = True
                    break
            if moved:
                continue
            # Reduce the pivot row.
            moved = False
            for c in sorted(e.rows.get(k, {})):
                if c == k:
                    continue
                q = e.entry(k, c) // v
                if q:
                    e.col_op(c, k, -q)
                if e.entry(k, c) != 0:
                    e.swap_cols(k, c)
                    moved = True
                    break
            if moved:
                continue
            # Enforce divisibility of the remaining block by the pivot
            # (automatic for unit pivots).
            if v == 1:
                break
            bad = None
            for r, row in e.rows.items():
                if r <= k:
                    continue
                for c, w in row.items():
                    if c > k and w % v != 0:
                        bad = r
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            e.row_op(k, bad, 1)
        diag.append(e.entry(k, k))
        k += 1
    if track:
        U = SparseMatrix(
            M.nrows,
            M.nrows,
            {(r, c): v for r, row in e.U.items() for c, v in row.items()},
        )
        V = SparseMatrix(
            M.ncols,
            M.ncols,
            {(r, c): v for r, row in e.V.items() for c, v in row.items()},
        )
        return diag, U, V
    return diag, None, None


def smith_normal_form(M: SparseMatrix):
    """Invariant factors d₁|d₂|… plus certificates (U, V) with U·M·V = diag(d)."""
    diag, U, V = _smith(M, track=True)
    D = U.times(M).times(V)
    expect = {(i, i): d for i, d in enumerate(diag) if d != 0}
    if D.entries != expect:
        raise AssertionError("Smith normal form certificate failed to verify")
    return diag, U, V


def invariant_factors(M: SparseMatrix) -> List[int]:
    return _smith(M, track=False)[0]


def rank_over(M: SparseMatrix, ring: Ring) -> int:
    if ring.kind in ("Z", "Q"):
        return len([d for d in invariant_factors(M) if d != 0])
    return _rank_mod_p(M, ring.p)


def _rank_mod_p(M: SparseMatrix, p: int) -> int:
    rows: Dict[int, Dict[int, int]] = {}
    for (r, c), v in M.entries.items():
        v %= p
        if v:
            rows.setdefault(r, {})[c] = v
    rank = 0
    while rows:
        # Pick a sparse pivot row.
        r0 = min(rows, key=lambda r: (len(rows[r]), r))
        row0 = rows.pop(r0)
        c0 = min(row0)
        inv = pow(row0[c0], p - 2, p)
        row0 = {c: (v * inv) % p for c, v in row0.items()}
        rank += 1
        dead = []
        for r, row in rows.items():
            w = row.get(c0)
            if w:
                for c, v in row0.items():
                    nv = (row.get(c, 0) - w * v) % p
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
                if not row:
                    dead.append(r)
        for r in dead:
            del rows[r]
    return rank


def kernel_basis(M: SparseMatrix) -> SparseMatrix:
    """Basis (as columns) of the integer kernel of M; saturated by construction."""
    diag, U, V = _smith(M, track=True)
    r = len([d for d in diag if d != 0])
    cols = list(range(r, M.ncols))
    entries = {}
    for (row, col), v in V.entries.items():
        if col in cols:
            entries[(row, col - r)] = v
    return SparseMatrix(M.ncols, len(cols), entries)


def solve_exact(K: SparseMatrix, B: SparseMatrix) -> SparseMatrix:
    """Solve K·X = B over ℤ where K has full column rank; raises if unsolvable."""
    diag, U, V = _smith(K, track=True)
    r = len([d for d in diag if d != 0])
    if r != K.ncols:
        raise ValueError("matrix does not have full column rank")
    UB = U.times(B)
    y_entries = {}
    for (row, col), v in UB.entries.items():
        if row >= r:
            raise ValueError("system is unsolvable over the integers")
        d = diag[row]
        if v % d != 0:
            raise ValueError("system is unsolvable over the integers")
        y_entries[(row, col)] = v // d
    Y = SparseMatrix(K.ncols, B.ncols, y_entries)
    return V.times(Y)


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: Tuple[int, ...] = ()

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def boundary_matrix(K: SimplicialComplex, i: int, ring: Ring = ZZ) -> SparseMatrix:
    """Boundary ∂_i with signs from sorted vertex order; i = 0 maps to no rows."""
    if i < 0 or i > K.dim:
        raise DimensionOutOfRange(f"no {i}-chains in a {K.dim}-complex")
    rows = K.faces_of_dim(i - 1) if i > 0 else []
    cols = K.faces_of_dim(i)
    row_index = {s: j for j, s in enumerate(rows)}
    entries = {}
    for c, s in enumerate(cols):
        for j in range(len(s)):
            face = s[:j] + s[j + 1 :]
            if face:
                entries[(row_index[face], c)] = (-1) ** j
    return SparseMatrix(len(rows), len(cols), entries)


def homology_of_chain_complex(
    dims: List[int], boundaries: List[Optional[SparseMatrix]], ring: Ring
) -> List[HomologyGroup]:
    """Homology of a free chain complex; boundaries[i] maps degree i to i−1.

    boundaries[0] may be None (zero map).  Torsion of H_i over ℤ is read off
    the invariant factors of ∂_{i+1}.
    """
    top = len(dims) - 1
    ranks = [0] * (top + 2)
    torsions: List[Tuple[int, ...]] = [()] * (top + 2)
    for i in range(1, top + 1):
        M = boundaries[i]
        if M is None or not M.entries:
            ranks[i] = 0
            continue
        if ring.kind == "Z":
            facs = invariant_factors(M)
            ranks[i] = len([d for d in facs if d != 0])
            torsions[i] = tuple(d for d in facs if d > 1)
        else:
            ranks[i] = rank_over(M, ring)
    out = []
    for i in range(top + 1):
        rank = dims[i] - ranks[i] - ranks[i + 1]
        tors = torsions[i + 1] if ring.kind == "Z" else ()
        out.append(HomologyGroup(rank, tors))
    return out


def homology(K: SimplicialComplex, ring: Ring = ZZ, reduced: bool = False) -> List[HomologyGroup]:
    """Simplicial homology in all degrees 0..dim K."""
    if K.is_empty():
        return []
    dims = [len(K.faces_of_dim(i)) for i in range(K.dim + 1)]
    boundaries: List[Optional[SparseMatrix]] = [None]
    for i in range(1, K.dim + 1):
        boundaries.append(boundary_matrix(K, i))
    groups = homology_of_chain_complex(dims, boundaries, ring)
    if reduced and groups:
        g0 = groups[0]
        groups[0] = HomologyGroup(max(g0.rank - 1, 0), g0.torsion)
    return groups


def euler_characteristic(K: SimplicialComplex, mod2: bool = False) -> int:
    chi = K.euler_characteristic()
    return chi % 2 if mod2 else chi
