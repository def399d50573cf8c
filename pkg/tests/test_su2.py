"""Spin matrices and Clebsch-Gordan coefficients against independent oracles."""

import math
from fractions import Fraction

import numpy as np
import pytest

from gauge_ladder.halfint import HalfInt, dim, halfint, j_range, m_values
from gauge_ladder.su2 import cg_matrix, clebsch_gordan, coupled_range, spin_matrices


def racah_cg(j1, m1, j2, m2, J, M):
    """Closed-form CG sum, evaluated in exact rational arithmetic.

    Independent of the ladder construction used by the library; serves as
    the reference for cross-checks.
    """
    j1, m1, j2, m2, J, M = (halfint(x) for x in (j1, m1, j2, m2, J, M))
    if m1 + m2 != M:
        return 0.0
    if (j1.twice + j2.twice + J.twice) % 2 != 0:
        return 0.0
    if not (abs(j1.twice - j2.twice) <= J.twice <= j1.twice + j2.twice):
        return 0.0

    def fact(h):
        n = h.twice // 2 if isinstance(h, HalfInt) else h
        if n < 0:
            raise ValueError("negative factorial")
        return math.factorial(n)

    delta = Fraction(
        fact(j1 + j2 - J) * fact(j1 - j2 + J) * fact(-j1 + j2 + J),
        fact(j1 + j2 + J + 1),
    )
    front = (
        Fraction(J.twice + 1)
        * delta
        * fact(J + M)
        * fact(J - M)
        * fact(j1 - m1)
        * fact(j1 + m1)
        * fact(j2 - m2)
        * fact(j2 + m2)
    )
    total = Fraction(0)
    k = 0
    while True:
        args = [
            (j1 + j2 - J).twice // 2 - k,
            (j1 - m1).twice // 2 - k,
            (j2 + m2).twice // 2 - k,
            (J - j2 + m1).twice // 2 + k,
            (J - j1 - m2).twice // 2 + k,
        ]
        if min(args[:3]) < 0:
            break
        if min(args[3:]) >= 0:
            denom = math.factorial(k)
            for a in args:
                denom *= math.factorial(a)
            total += Fraction((-1) ** k, denom)
        k += 1
    return math.sqrt(float(front)) * float(total)


def test_dim_values():
    assert dim(0) == 1
    assert dim(HalfInt(1)) == 2
    assert dim(1.5) == 4
    with pytest.raises(ValueError):
        dim(HalfInt(-1))


def test_halfint_labels():
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(4)) == "2"
    assert halfint(0.5) + halfint(1) == HalfInt(3)
    assert m_values(1) == [HalfInt(2), HalfInt(0), HalfInt(-2)]


def test_spin_half_is_pauli_over_two():
    s = spin_matrices(0.5)
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    assert np.allclose(s.Tx, sx / 2, atol=1e-15)
    assert np.allclose(s.Ty, sy / 2, atol=1e-15)
    assert np.allclose(s.Tz, sz / 2, atol=1e-15)


def test_spin_zero_is_trivial():
    s = spin_matrices(0)
    for t in (s.Tx, s.Ty, s.Tz):
        assert t.shape == (1, 1)
        assert np.all(t == 0)


def test_spin_one():
    s = spin_matrices(1)
    assert np.allclose(np.diag(s.Tz), [1, 0, -1], atol=1e-15)
    assert np.allclose(s.casimir, 2 * np.eye(3), atol=1e-12)


@pytest.mark.parametrize("twice", range(0, 9))
def test_spin_matrix_invariants(twice):
    j = HalfInt(twice)
    s = spin_matrices(j)
    d = dim(j)
    eps = np.zeros((3, 3, 3))
    eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1
    eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1
    T = [s.Tx, s.Ty, s.Tz]
    for a in range(3):
        for b in range(3):
            comm = T[a] @ T[b] - T[b] @ T[a]
            expect = sum(1j * eps[a, b, c] * T[c] for c in range(3))
            assert np.max(np.abs(comm - expect)) < 1e-12
    jj = twice / 2
    assert np.max(np.abs(s.casimir - jj * (jj + 1) * np.eye(d))) < 1e-12
    assert np.allclose(np.diag(s.Tz).real, [m.twice / 2 for m in m_values(j)], atol=0)


def test_cg_trivial_coupling_is_exact():
    for j in j_range(0, 3):
        for m in m_values(j):
            assert clebsch_gordan(j, m, 0, 0, j, m) == 1.0
            assert clebsch_gordan(0, 0, j, m, j, m) == 1.0


def test_cg_singlet_signs_match_diagonalization_oracle():
    # Oracle: diagonalize (J1+J2)^2 on the spin-half product space and read
    # off the singlet, sign-fixed by the Condon-Shortley convention.
    s = spin_matrices(0.5)
    T = [s.Tx, s.Ty, s.Tz]
    Jtot = [np.kron(t, np.eye(2)) + np.kron(np.eye(2), t) for t in T]
    J2 = sum(t @ t for t in Jtot)
    evals, evecs = np.linalg.eigh(J2)
    singlet = evecs[:, np.argmin(np.abs(evals))]
    # Product rows are (m1, m2) = (++, +-, -+, --); highest-m1 entry positive.
    if singlet[1].real < 0:
        singlet = -singlet
    assert abs(singlet[1].real - 1 / math.sqrt(2)) < 1e-12
    assert abs(singlet[2].real + 1 / math.sqrt(2)) < 1e-12

    assert clebsch_gordan(0.5, 0.5, 0.5, -0.5, 0, 0) == pytest.approx(
        1 / math.sqrt(2), abs=1e-14
    )
    assert clebsch_gordan(0.5, -0.5, 0.5, 0.5, 0, 0) == pytest.approx(
        -1 / math.sqrt(2), abs=1e-14
    )


def test_cg_stretched_state():
    assert clebsch_gordan(0.5, 0.5, 0.5, 0.5, 1, 1) == 1.0


def test_cg_zero_outside_selection_rules():
    assert clebsch_gordan(1, 1, 1, 0, 2, 0) == 0.0  # M != m1+m2
    assert clebsch_gordan(0.5, 0.5, 0.5, -0.5, 2, 0) == 0.0  # triangle violated
    with pytest.raises(ValueError):
        # cross-parity J cannot carry a well-formed M = m1+m2 label
        clebsch_gordan(1, 0, 0.5, 0.5, 1, 0.5)


def test_cg_invalid_labels_raise():
    with pytest.raises(ValueError):
        clebsch_gordan(0.5, 1.5, 0.5, -0.5, 1, 1)
    with pytest.raises(ValueError):
        clebsch_gordan(1, 0.5, 0.5, 0, 1, 0.5)


def test_cg_against_racah_sum():
    for j1 in j_range(0, 2):
        for j2 in j_range(0, 2):
            for m1 in m_values(j1):
                for m2 in m_values(j2):
                    for J in coupled_range(j1, j2):
                        M = m1 + m2
                        if abs(M.twice) > J.twice:
                            continue
                        got = clebsch_gordan(j1, m1, j2, m2, J, M)
                        want = racah_cg(j1, m1, j2, m2, J, M)
                        assert got == pytest.approx(want, abs=1e-13)


def test_cg_orthogonality_up_to_three():
    for j1 in j_range(0, 3):
        for j2 in j_range(0, 3):
            mat, _ = cg_matrix(j1, j2)
            assert mat.shape[0] == mat.shape[1] == dim(j1) * dim(j2)
            assert np.max(np.abs(mat.T @ mat - np.eye(mat.shape[0]))) < 1e-12


def test_cg_lowering_recoupling():
    # J- = J1- + J2- applied to |J M> must reproduce the |J, M-1> table.
    def ladder(j, m):
        jj, mm = float(j), float(m)
        return math.sqrt(jj * (jj + 1) - mm * (mm - 1))

    for j1, j2 in [(halfint(1), halfint(0.5)), (halfint(1.5), halfint(1))]:
        for J in coupled_range(j1, j2):
            for M in m_values(J):
                if M == -J:
                    continue
                lowered = {}
                for m1 in m_values(j1):
                    for m2 in m_values(j2):
                        c = clebsch_gordan(j1, m1, j2, m2, J, M)
                        if c == 0.0:
                            continue
                        if m1 > -j1:
                            key = (m1 - 1, m2)
                            lowered[key] = lowered.get(key, 0.0) + c * ladder(j1, m1)
                        if m2 > -j2:
                            key = (m1, m2 - 1)
                            lowered[key] = lowered.get(key, 0.0) + c * ladder(j2, m2)
                denom = ladder(J, M)
                for (m1, m2), val in lowered.items():
                    want = clebsch_gordan(j1, m1, j2, m2, J, M - 1)
                    assert val / denom == pytest.approx(want, abs=1e-12)
