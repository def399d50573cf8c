"""SU(2) kinematics: spin matrices and Clebsch-Gordan coefficients.

Couplings are built by the ladder construction: the stretched state of each
total spin J is fixed by orthogonality and the Condon-Shortley sign (largest
m1 component positive), then J- = J1- + J2- walks down the multiplet. The
whole table for a (j1, j2) pair is computed once and cached; the cache is
read-mostly and concurrent duplicate inserts are harmless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .halfint import HalfInt, dim, halfint, m_values, triangle_ok

_JLike = HalfInt | int | float


@dataclass(frozen=True)
class SpinMatrixSet:
    """Spin-j generators in the descending-m basis (Tz = diag(j..-j))."""

    j: HalfInt
    Tx: np.ndarray
    Ty: np.ndarray
    Tz: np.ndarray

    @property
    def casimir(self) -> np.ndarray:
        return self.Tx @ self.Tx + self.Ty @ self.Ty + self.Tz @ self.Tz


def _ladder_element(j: HalfInt, m: HalfInt) -> float:
    """<j, m-1 | J- | j, m> = sqrt(j(j+1) - m(m-1))."""
    jj = j.twice / 2.0
    mm = m.twice / 2.0
    return math.sqrt(jj * (jj + 1.0) - mm * (mm - 1.0))


def spin_matrices(j: _JLike) -> SpinMatrixSet:
    """Matrices of Tx, Ty, Tz for spin j, basis ordered m = j, j-1, ..., -j."""
    j = halfint(j)
    d = dim(j)
    jp = np.zeros((d, d), dtype=complex)
    ms = m_values(j)
    for row, m in enumerate(ms):
        if row + 1 < d:
            # J+ |j,m-1> = sqrt(j(j+1) - m(m-1)) |j,m>; column is row+1
            jp[row, row + 1] = _ladder_element(j, m)
    jm = jp.conj().T
    tz = np.diag(np.array([m.twice / 2.0 for m in ms], dtype=complex))
    return SpinMatrixSet(j=j, Tx=(jp + jm) / 2.0, Ty=(jp - jm) / (2.0j), Tz=tz)


# ---------------------------------------------------------------------------
# Clebsch-Gordan coefficients
# ---------------------------------------------------------------------------

# (j1.twice, j2.twice) -> {(m1.twice, m2.twice, J.twice): coefficient}
_CG_CACHE: dict[tuple[int, int], dict[tuple[int, int, int], float]] = {}


def _couple(j1: HalfInt, j2: HalfInt) -> dict[tuple[int, int, int], float]:
    """Full CG table for j1 x j2 by stretched-state + lowering recursion."""
    table: dict[tuple[int, int, int], float] = {}
    m1s = m_values(j1)
    m2s = m_values(j2)
    # coupled[(J, M)] maps (m1, m2) -> coefficient of |j1 m1>|j2 m2| in |J M>
    coupled: dict[tuple[int, int], dict[tuple[int, int], float]] = {}

    top = j1 + j2
    bottom = abs(j1 - j2)
    J = top
    while J >= bottom:
        MT = J.twice
        if J == top:
            vec = {(j1.twice, j2.twice): 1.0}
        else:
            # States of magnetization M = J in the product basis.
            support = [
                (a.twice, b.twice) for a in m1s for b in m2s if a.twice + b.twice == MT
            ]
            # Orthogonal complement of all higher-J states at this M.
            others = [coupled[(Jp, MT)] for Jp in range(J.twice + 2, top.twice + 1, 2)]
            vec = {key: 0.0 for key in support}
            # Seed with the unit vector of largest m1, then Gram-Schmidt.
            seed = max(support)
            vec[seed] = 1.0
            for other in others:
                overlap = sum(other.get(k, 0.0) * vec[k] for k in support)
                for k in support:
                    vec[k] -= overlap * other.get(k, 0.0)
            norm = math.sqrt(sum(c * c for c in vec.values()))
            if norm < 1e-12:
                raise RuntimeError("degenerate stretched state in CG recursion")
            vec = {k: c / norm for k, c in vec.items()}
            # Condon-Shortley: coefficient with the largest m1 is positive.
            if vec[seed] < 0:
                vec = {k: -c for k, c in vec.items()}
        coupled[(J.twice, MT)] = vec
        table.update({(k[0], k[1], J.twice): c for k, c in vec.items()})

        # Lower through the multiplet: |J, M-1> = J- |J, M> / ladder(J, M).
        M = J
        while M > -J:
            denom = _ladder_element(J, M)
            lowered: dict[tuple[int, int], float] = {}
            for (a, b), c in coupled[(J.twice, M.twice)].items():
                if a > -j1.twice:
                    amp = _ladder_element(j1, HalfInt(a))
                    key = (a - 2, b)
                    lowered[key] = lowered.get(key, 0.0) + c * amp / denom
                if b > -j2.twice:
                    amp = _ladder_element(j2, HalfInt(b))
                    key = (a, b - 2)
                    lowered[key] = lowered.get(key, 0.0) + c * amp / denom
            M = M - 1
            coupled[(J.twice, M.twice)] = lowered
            table.update({(k[0], k[1], J.twice): c for k, c in lowered.items()})
        J = J - 1
    return table


def _cg_table(j1: HalfInt, j2: HalfInt) -> dict[tuple[int, int, int], float]:
    key = (j1.twice, j2.twice)
    tab = _CG_CACHE.get(key)
    if tab is None:
        tab = _couple(j1, j2)
        _CG_CACHE[key] = tab
    return tab


def clebsch_gordan(
    j1: _JLike, m1: _JLike, j2: _JLike, m2: _JLike, J: _JLike, M: _JLike
) -> float:
    """Condon-Shortley coefficient <j1 m1; j2 m2 | J M>.

    Returns 0 when the triangle rule fails or M != m1 + m2. Malformed
    labels (|m| > j, negative j) raise ValueError.
    """
    j1, m1 = halfint(j1), halfint(m1)
    j2, m2 = halfint(j2), halfint(m2)
    J, M = halfint(J), halfint(M)
    for jj, mm in ((j1, m1), (j2, m2), (J, M)):
        if jj.twice < 0 or abs(mm.twice) > jj.twice or (jj.twice - mm.twice) % 2:
            raise ValueError(f"invalid state |j={jj}, m={mm}>")
    if m1 + m2 != M or not triangle_ok(j1, j2, J):
        return 0.0
    return _cg_table(j1, j2).get((m1.twice, m2.twice, J.twice), 0.0)


def coupled_range(j1: _JLike, j2: _JLike) -> list[HalfInt]:
    """Total spins |j1-j2| .. j1+j2 reachable by coupling, integer steps."""
    j1, j2 = halfint(j1), halfint(j2)
    lo = abs(j1.twice - j2.twice)
    hi = j1.twice + j2.twice
    return [HalfInt(t) for t in range(lo, hi + 1, 2)]


def cg_matrix(j1: _JLike, j2: _JLike) -> tuple[np.ndarray, list[tuple[HalfInt, HalfInt]]]:
    """Orthogonal change of basis from |m1 m2> products to coupled |J M>.

    Rows run over the product basis (m1 major, both descending), columns
    over coupled states ordered J = j1+j2 .. |j1-j2| with M descending.
    Also returns the (J, M) column labels.
    """
    j1, j2 = halfint(j1), halfint(j2)
    rows = [(a, b) for a in m_values(j1) for b in m_values(j2)]
    cols: list[tuple[HalfInt, HalfInt]] = []
    J = j1 + j2
    while J >= abs(j1 - j2):
        cols.extend((J, M) for M in m_values(J))
        J = J - 1
    mat = np.zeros((len(rows), len(cols)))
    for r, (a, b) in enumerate(rows):
        for c, (J, M) in enumerate(cols):
            if a + b == M:
                mat[r, c] = clebsch_gordan(j1, a, j2, b, J, M)
    return mat, cols
