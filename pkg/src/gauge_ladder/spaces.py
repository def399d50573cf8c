"""Concrete Hilbert spaces: staggered fermions, U(1) links, SU(2) rotor links.

Conventions fixed here and relied on everywhere else:

* Jordan-Wigner mode order is site-major, color-ascending; the sign of a
  fermionic operator on mode k is (-1)^(occupied modes below k).
* Fock basis states are indexed by the occupation integer whose bit k is
  the occupation of mode k; labels print mode 0 leftmost.
* Every SU(2) representation is laid out with m descending.
* Link truncation drops amplitudes that leave the window; operators stay
  exact on the interior.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .halfint import HalfInt, dim, halfint, m_values
from .sparse import SparseOperator
from .su2 import clebsch_gordan, coupled_range, spin_matrices

# ---------------------------------------------------------------------------
# Fermions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FermionModeLayout:
    """Ordered fermionic modes: one per (site, color)."""

    n_sites: int
    colors_per_site: int = 1

    def __post_init__(self) -> None:
        if self.n_sites < 1 or self.colors_per_site not in (1, 2):
            raise ValueError("need n_sites >= 1 and 1 or 2 colors per site")

    @property
    def n_modes(self) -> int:
        return self.n_sites * self.colors_per_site

    @property
    def fock_dim(self) -> int:
        return 1 << self.n_modes

    def mode_index(self, site: int, color: int = 0) -> int:
        if not (0 <= site < self.n_sites) or not (0 <= color < self.colors_per_site):
            raise ValueError(f"mode (site={site}, color={color}) out of range")
        return site * self.colors_per_site + color

    def occupation(self, state: int, site: int, color: int = 0) -> int:
        return (state >> self.mode_index(site, color)) & 1

    def state_label(self, state: int) -> str:
        return "".join(str((state >> k) & 1) for k in range(self.n_modes))

    def labels(self) -> tuple[str, ...]:
        return tuple(self.state_label(f) for f in range(self.fock_dim))

    def half_filling(self) -> int:
        """Fermion number at half filling: one per pair of modes."""
        return self.n_modes // 2

    def states_with_filling(self, n_fermions: int) -> list[int]:
        return [f for f in range(self.fock_dim) if f.bit_count() == n_fermions]


def fermion_operator(
    layout: FermionModeLayout, kind: str, site: int, color: int = 0
) -> SparseOperator:
    """Creation or annihilation operator in the full Fock basis.

    kind is "creation" or "annihilation". Matrix entries are +-1, so all
    canonical anti-commutators hold exactly in floating point.
    """
    if kind not in ("creation", "annihilation"):
        raise ValueError(f"unknown kind {kind!r}")
    k = layout.mode_index(site, color)
    mask_below = (1 << k) - 1
    bit = 1 << k
    rows, cols, vals = [], [], []
    for f in range(layout.fock_dim):
        if f & bit:
            continue
        sign = -1.0 if (f & mask_below).bit_count() & 1 else 1.0
        if kind == "creation":
            rows.append(f | bit)
            cols.append(f)
        else:
            rows.append(f)
            cols.append(f | bit)
        vals.append(sign)
    return SparseOperator.from_coo(rows, cols, vals, layout.fock_dim, layout.labels())


def number_operator(layout: FermionModeLayout, site: int, color: int = 0) -> SparseOperator:
    k = layout.mode_index(site, color)
    diag = [(f >> k) & 1 for f in range(layout.fock_dim)]
    return SparseOperator.diagonal(diag, layout.labels())


def total_number_operator(layout: FermionModeLayout) -> SparseOperator:
    diag = [f.bit_count() for f in range(layout.fock_dim)]
    return SparseOperator.diagonal(diag, layout.labels())


def charge_u1(layout: FermionModeLayout, site: int) -> SparseOperator:
    """Staggered charge Q(x) = n(x) - t(x), t = 0 on even and 1 on odd sites."""
    if layout.colors_per_site != 1:
        raise ValueError("U(1) charge is defined for single-color layouts")
    t = site % 2
    diag = [layout.occupation(f, site) - t for f in range(layout.fock_dim)]
    return SparseOperator.diagonal(diag, layout.labels())


def charge_su2(layout: FermionModeLayout, site: int, a: str) -> SparseOperator:
    """Fundamental non-Abelian charge Q_a(x) = psi^dag_m (sigma_a/2)_mn psi_n."""
    if layout.colors_per_site != 2:
        raise ValueError("SU(2) charge needs two colors per site")
    T = {"x": 0, "y": 1, "z": 2}
    if a not in T:
        raise ValueError(f"component must be x, y or z, got {a!r}")
    half = spin_matrices(HalfInt(1))
    mat = (half.Tx, half.Ty, half.Tz)[T[a]]
    out = SparseOperator.zeros(layout.fock_dim, layout.labels())
    for m in range(2):
        for n in range(2):
            if mat[m, n] == 0:
                continue
            cre = fermion_operator(layout, "creation", site, m)
            ann = fermion_operator(layout, "annihilation", site, n)
            out = out + complex(mat[m, n]) * (cre @ ann)
    return out


# ---------------------------------------------------------------------------
# U(1) link
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class U1LinkSpace:
    """Electric-field eigenbasis |j> for integer j in [e_min, e_max]."""

    e_min: int
    e_max: int

    def __post_init__(self) -> None:
        if self.e_max <= self.e_min:
            raise ValueError("window must contain at least two field values")

    @property
    def dim(self) -> int:
        return self.e_max - self.e_min + 1

    def values(self) -> list[int]:
        return list(range(self.e_min, self.e_max + 1))

    def index(self, j: int) -> int:
        if not (self.e_min <= j <= self.e_max):
            raise ValueError(f"field value {j} outside window")
        return j - self.e_min

    def labels(self) -> tuple[str, ...]:
        return tuple(str(j) for j in self.values())


def u1_link_operators(space: U1LinkSpace) -> dict[str, SparseOperator]:
    """Electric field E (diagonal) and gauge connection U (raising shift).

    U|j> = |j+1>; the amplitude out of the top window state is dropped, so
    [E, U] = U holds exactly and U^dag U is the identity below the top.
    """
    labels = space.labels()
    E = SparseOperator.diagonal(space.values(), labels)
    d = space.dim
    rows = list(range(1, d))
    cols = list(range(0, d - 1))
    U = SparseOperator.from_coo(rows, cols, [1.0] * (d - 1), d, labels)
    return {"E": E, "U": U}


def u1_window(n_sites: int, charges: tuple[int, ...] | None = None) -> list[tuple[int, int]]:
    """Minimal electric window per link for a static-charge configuration.

    Two-sided recursion: from the left, E(n) is the accumulated static plus
    dynamical charge; from the right, minus the same for the suffix. The
    dynamical charge on an even site lies in {0, 1} and on an odd site in
    {-1, 0}; the intersection of both scans is the exact reachable window
    at half filling.
    """
    if n_sites % 2 or n_sites < 2:
        raise ValueError("need an even number of sites >= 2")
    if charges is None:
        charges = (0,) * n_sites
    if len(charges) != n_sites:
        raise ValueError("one static charge per site required")
    if sum(charges) != 0:
        raise ValueError("static charges must sum to zero")
    windows = []
    for link in range(n_sites - 1):
        prefix = sum(charges[: link + 1])
        even_pre = link // 2 + 1
        odd_pre = (link + 1) // 2
        left = (prefix - odd_pre, prefix + even_pre)
        suffix = sum(charges[link + 1 :])
        even_suf = sum(1 for x in range(link + 1, n_sites) if x % 2 == 0)
        odd_suf = sum(1 for x in range(link + 1, n_sites) if x % 2 == 1)
        right = (-suffix - even_suf, -suffix + odd_suf)
        lo, hi = max(left[0], right[0]), min(left[1], right[1])
        if hi <= lo:
            raise ValueError(f"empty window on link {link} for charges {charges}")
        windows.append((lo, hi))
    return windows


# ---------------------------------------------------------------------------
# SU(2) rotor link
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RotorState:
    j: HalfInt
    m: HalfInt
    n: HalfInt

    def label(self) -> str:
        return f"{self.j}:{self.m},{self.n}"


@dataclass(frozen=True)
class RotorLinkSpace:
    """Rigid-rotor link |j m n>, all j <= j_max, ordered (j asc, m desc, n desc)."""

    j_max: HalfInt

    def __post_init__(self) -> None:
        object.__setattr__(self, "j_max", halfint(self.j_max))
        if self.j_max.twice < 0:
            raise ValueError("j_max must be >= 0")

    @cached_property
    def basis(self) -> tuple[RotorState, ...]:
        states = []
        for t in range(0, self.j_max.twice + 1):
            j = HalfInt(t)
            states.extend(
                RotorState(j, m, n) for m in m_values(j) for n in m_values(j)
            )
        return tuple(states)

    @cached_property
    def _index(self) -> dict[tuple[int, int, int], int]:
        return {
            (s.j.twice, s.m.twice, s.n.twice): i for i, s in enumerate(self.basis)
        }

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, j, m, n) -> int:
        key = (halfint(j).twice, halfint(m).twice, halfint(n).twice)
        if key not in self._index:
            raise ValueError(f"no rotor state (j={j}, m={m}, n={n}) below j_max")
        return self._index[key]

    def labels(self) -> tuple[str, ...]:
        return tuple(s.label() for s in self.basis)


def rotor_operators(space: RotorLinkSpace) -> dict[str, SparseOperator]:
    """Casimir J2 plus body-frame (L) and space-frame (R) generators.

    Within each representation, L_a acts on the m index with the transposed
    spin matrix (hence the opposite-sign algebra [L_x, L_y] = -i L_z) and
    R_a acts on the n index with the spin matrix itself.
    """
    import scipy.sparse as sp

    labels = space.labels()
    d = space.dim
    blocks_L = {a: [] for a in "xyz"}
    blocks_R = {a: [] for a in "xyz"}
    j2_diag = []
    for t in range(0, space.j_max.twice + 1):
        j = HalfInt(t)
        s = spin_matrices(j)
        dj = dim(j)
        jj = t / 2.0
        j2_diag.extend([jj * (jj + 1.0)] * (dj * dj))
        eye = np.eye(dj)
        for a, T in zip("xyz", (s.Tx, s.Ty, s.Tz)):
            blocks_L[a].append(sp.kron(T.T, eye))
            blocks_R[a].append(sp.kron(eye, T))
    ops: dict[str, SparseOperator] = {
        "J2": SparseOperator.diagonal(j2_diag, labels)
    }
    for a in "xyz":
        ops[f"L{a}"] = SparseOperator(sp.block_diag(blocks_L[a]), labels)
        ops[f"R{a}"] = SparseOperator(sp.block_diag(blocks_R[a]), labels)
    return ops


def group_element_operator(
    space: RotorLinkSpace, j_op, m, n
) -> SparseOperator:
    """Matrix of the gauge-connection component U^{j_op}_{m n}.

    Couples each |J M M'> to |K, M+m, M'+n> for K in |J-j_op| .. J+j_op
    with weight sqrt(dim J / dim K) <J M; j_op m|K M+m> <J M'; j_op n|K M'+n>.
    Components that would raise j above j_max are dropped (truncation).
    """
    j_op, m, n = halfint(j_op), halfint(m), halfint(n)
    if abs(m.twice) > j_op.twice or abs(n.twice) > j_op.twice:
        raise ValueError(f"indices |m|,|n| must not exceed j_op={j_op}")
    if j_op > space.j_max:
        raise ValueError("j_op exceeds the link truncation")
    rows, cols, vals = [], [], []
    for col, st in enumerate(space.basis):
        J, M, Mp = st.j, st.m, st.n
        N, Np = M + m, Mp + n
        for K in coupled_range(J, j_op):
            if K > space.j_max:
                continue
            if abs(N.twice) > K.twice or abs(Np.twice) > K.twice:
                continue
            coeff = (
                math.sqrt(dim(J) / dim(K))
                * clebsch_gordan(J, M, j_op, m, K, N)
                * clebsch_gordan(J, Mp, j_op, n, K, Np)
            )
            if coeff == 0.0:
                continue
            rows.append(space.index(K, N, Np))
            cols.append(col)
            vals.append(coeff)
    return SparseOperator.from_coo(rows, cols, vals, space.dim, space.labels())


def su2_default_jmax(n_sites: int) -> list[HalfInt]:
    """Largest representation each link can host in the zero-charge sector.

    Both boundary recursions allow one extra half-step per site walked in,
    so link n carries J_max = (min(n, 2M-n) + 1)/2.
    """
    if n_sites % 2 or n_sites < 2:
        raise ValueError("need an even number of sites >= 2")
    two_m = n_sites - 2
    return [HalfInt(min(link, two_m - link) + 1) for link in range(n_sites - 1)]
