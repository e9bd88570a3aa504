################################################################################
# COPYRIGHT(c) 2024 The ShellSpec Authors                                      #
#                                                                              #
# Redistribution and use in source and binary forms, with or without           #
# modification, are permitted provided that the following conditions are met:  #
#   1. Redistributions of source code must retain the above copyright notice,  #
#      this list of conditions and the following disclaimer.                   #
#   2. Redistributions in binary form must reproduce the above copyright       #
#      notice, this list of conditions and the following disclaimer in the     #
#      documentation and/or other materials provided with the distribution.    #
#   3. Neither the name of the copyright holder nor the names of its           #
#      contributors may be used to endorse or promote products derived from    #
#      this software without specific prior written permission.                #
#                                                                              #
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"  #
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE    #
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE   #
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE    #
# LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR          #
# CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF         #
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS     #
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN      #
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE)      #
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE   #
# POSSIBILITY OF SUCH DAMAGE.                                                  #
################################################################################


import logging

import numpy as np
import pytest
from scipy.special import iv
from scipy.special import kv

from shellspec.couplings import Couplings
from shellspec.couplings import charge_conjugate
from shellspec.couplings import isospectral_partner
from shellspec.disk_oracle import DiskProblem
from shellspec.disk_oracle import antiholomorphic_kernel_check
from shellspec.disk_oracle import bessel_zero
from shellspec.disk_oracle import disk_dirichlet_eigenvalues
from shellspec.disk_oracle import disk_eigenvalues
from shellspec.disk_oracle import exterior_solution
from shellspec.disk_oracle import holomorphic_exterior_check
from shellspec.disk_oracle import interior_solution
from shellspec.disk_oracle import mode_dispersion
from shellspec.disk_oracle import zigzag_spectrum
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidOperationException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidSpectralParameterException

logger = logging.getLogger(__name__)


J01_SQUARED = 5.783185962947
J01 = 2.404825557695773
J11 = 3.831705970207512
J21 = 5.135622301840683
J02 = 5.520078110286311
ZIGZAG_FIRST = 2.604456


def eigenvalue_list(R, m, c, max_channel=10):
    return np.sort([e.get_z() for e in disk_eigenvalues(R, m, c, max_channel,
                                                        points=200)])


@pytest.mark.parametrize('n', [-2, -1, 0, 3])
def test_free_dispersion_never_vanishes(n):
    problem = DiskProblem(1.0, 1.0, Couplings(), n)
    values = [mode_dispersion(problem, z) for z in np.linspace(-0.99, 0.99,
                                                                 41)]
    assert all(v < 0 for v in values) or all(v > 0 for v in values)
    assert problem.roots(points=50) == []


def interior_raw(n, m, z, r):
    k = np.sqrt(m ** 2 - z ** 2)
    return np.array([(z + m) * iv(n, k * r), k * iv(n + 1, k * r)])


def exterior_raw(n, m, z, r):
    k = np.sqrt(m ** 2 - z ** 2)
    return np.array([(z + m) * kv(n, k * r), -k * kv(n + 1, k * r)])


@pytest.mark.parametrize('solution, raw', [
    (interior_solution, interior_raw),
    (exterior_solution, exterior_raw),
])
@pytest.mark.parametrize('n', [-1, 1])
def test_channel_solutions_solve_radial_equations(solution, raw, n):
    m, z, r, h = 1.0, 0.4, 0.8, 1e-5
    u = solution(n, m, np.array(z), r)
    f, G = raw(n, m, z, r)
    np.testing.assert_allclose(u, np.array([f, G]) / np.hypot(f, G))
    df, dG = (raw(n, m, z, r + h) - raw(n, m, z, r - h)) / (2.0 * h)
    assert df == pytest.approx(n / r * f + (z + m) * G, rel=1e-7)
    assert dG == pytest.approx(-(z - m) * f - (n + 1) / r * G, rel=1e-7)


def test_solutions_are_vectorized():
    z = np.linspace(-0.5, 0.5, 7)
    assert interior_solution(2, 1.0, z, 1.0).shape == (7, 2)
    assert exterior_solution(2, 1.0, z, 1.0).shape == (7, 2)


def test_attractive_scalar_shell_has_bound_states(attractive_couplings):
    eigenvalues = eigenvalue_list(1.0, 1.0, attractive_couplings)
    assert len(eigenvalues) > 0
    assert np.all(np.abs(eigenvalues) < 1.0)
    for e in disk_eigenvalues(1.0, 1.0, attractive_couplings, 6, 200):
        problem = DiskProblem(1.0, 1.0, attractive_couplings,
                              e.get_channel())
        assert abs(problem.dispersion(e.get_z())) < 1e-9


@pytest.mark.parametrize('values', [(0.0, -1.0, 0.0), (1.5, 0.0, 0.0),
                                    (1.0, 0.0, 0.0)])
def test_isospectral_partner_has_same_eigenvalues(values):
    c = Couplings(*values)
    original = eigenvalue_list(1.0, 1.0, c)
    partner = eigenvalue_list(1.0, 1.0, isospectral_partner(c))
    assert len(original) == len(partner)
    np.testing.assert_allclose(original, partner, atol=1e-6)


@pytest.mark.parametrize('values', [(1.5, 0.0, 0.0), (1.0, -0.5, 0.3)])
def test_charge_conjugation_mirrors_spectrum(values):
    c = Couplings(*values)
    original = eigenvalue_list(1.0, 1.0, c)
    mirrored = eigenvalue_list(1.0, 1.0, charge_conjugate(c))
    assert len(original) == len(mirrored)
    np.testing.assert_allclose(np.sort(-original), mirrored, atol=1e-8)


def test_disk_problem_validation():
    with pytest.raises(ShellSpecInvalidDataException):
        DiskProblem(0.0, 1.0, Couplings(), 0)
    with pytest.raises(ShellSpecInvalidDataException):
        DiskProblem(1.0, 1.0, Couplings(), 0.5)
    with pytest.raises(ShellSpecInvalidOperationException):
        DiskProblem(1.0, 1.0, Couplings(1.0, 0.0, 0.0, 0.3), 0)
    with pytest.raises(ShellSpecInvalidOperationException):
        DiskProblem(1.0, 1.0, Couplings(np.cos, 0.0, 0.0, 0.0, 2 * np.pi), 0)
    problem = DiskProblem(1.0, 1.0, Couplings(1.0, 0.0, 0.0), 0)
    for z in (1.5, -1.0, 0.2 + 0.1j):
        with pytest.raises(ShellSpecInvalidSpectralParameterException):
            mode_dispersion(problem, z)


def test_bessel_zeros():
    assert bessel_zero(0, 1) == pytest.approx(J01, rel=1e-14)
    assert bessel_zero(1, 1) == pytest.approx(J11, rel=1e-14)
    with pytest.raises(ShellSpecInvalidDataException):
        bessel_zero(-1, 1)
    with pytest.raises(ShellSpecInvalidDataException):
        bessel_zero(0, 0)


def test_dirichlet_eigenvalues():
    eigenvalues, orders, indices = disk_dirichlet_eigenvalues(1.0, 6, True)
    assert eigenvalues[0] == pytest.approx(J01_SQUARED, rel=1e-12)
    np.testing.assert_allclose(
        eigenvalues, [J01 ** 2, J11 ** 2, J11 ** 2, J21 ** 2, J21 ** 2,
                      J02 ** 2], rtol=1e-12)
    assert orders == [0, 1, 1, 2, 2, 0]
    assert indices == [1, 1, 1, 1, 1, 2]
    scaled = disk_dirichlet_eigenvalues(2.0, 1)
    assert scaled[0] == pytest.approx(J01_SQUARED / 4.0, rel=1e-12)
    with pytest.raises(ShellSpecInvalidDataException):
        disk_dirichlet_eigenvalues(1.0, 0)


def test_zigzag_spectrum():
    spectrum = zigzag_spectrum(1.0, 1.0, 4)
    rows = spectrum.rows()
    assert len(rows) == 4
    assert rows[0][0] == pytest.approx(ZIGZAG_FIRST, abs=1e-6)
    assert rows[0][1] == pytest.approx(-ZIGZAG_FIRST, abs=1e-6)
    assert rows[0][3:] == (0, 1)
    assert spectrum.get_flat_eigenvalues() == (-1.0, 1.0)
    assert np.all(spectrum.get_embedded_eigenvalues() >= 1.0)
    assert np.all(np.diff(spectrum.get_embedded_eigenvalues()) >= 0)
    massless = zigzag_spectrum(1.0, 0.0, 1)
    assert massless.get_embedded_eigenvalues()[0] == pytest.approx(J01)


@pytest.mark.parametrize('k', [0, 1, 5, 20])
def test_antiholomorphic_kernel(k):
    assert antiholomorphic_kernel_check(1.0, k) < 1e-12


@pytest.mark.parametrize('k', [2, 3, 20])
def test_holomorphic_exterior(k):
    assert holomorphic_exterior_check(1.0, k, center=0.3 - 0.2j) < 1e-12


def test_kernel_checks_validate_degree():
    with pytest.raises(ShellSpecInvalidDataException):
        antiholomorphic_kernel_check(1.0, 21)
    with pytest.raises(ShellSpecInvalidDataException):
        holomorphic_exterior_check(1.0, 1)
