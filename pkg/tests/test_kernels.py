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

from shellspec.kernels import SpectralParameter
from shellspec.kernels import bessel_k
from shellspec.kernels import green_phi
from shellspec.kernels import green_phi_batch
from shellspec.spin_algebra import SIGMA_1
from shellspec.spin_algebra import SIGMA_2
from shellspec.spin_algebra import SIGMA_3
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidSpectralParameterException

logger = logging.getLogger(__name__)


K0_AT_ONE = 0.421024438241
K1_AT_ONE = 0.601907230197


def test_bessel_values():
    assert bessel_k(0, 1.0) == pytest.approx(K0_AT_ONE, rel=1e-11)
    assert bessel_k(1, 1.0) == pytest.approx(K1_AT_ONE, rel=1e-11)
    values = bessel_k(0, np.array([1.0, 2.0]))
    assert values.shape == (2,)
    # Conjugate symmetry off the real axis.
    assert bessel_k(1, 1.0 - 0.5j) == pytest.approx(
        np.conj(bessel_k(1, 1.0 + 0.5j)))


def test_bessel_rejects_bad_input():
    with pytest.raises(ShellSpecInvalidDataException):
        bessel_k(2, 1.0)
    with pytest.raises(ShellSpecInvalidSpectralParameterException):
        bessel_k(0, -1.0)


def test_spectral_parameter():
    sp = SpectralParameter(0.5, 1.0)
    assert sp.is_real_gap()
    assert sp.get_w() == pytest.approx(np.sqrt(0.75))
    sp = SpectralParameter(2.0 + 0.5j, 1.0)
    assert not sp.is_real_gap()
    assert sp.get_w().real > 0
    assert sp.get_w() ** 2 == pytest.approx(1.0 - (2.0 + 0.5j) ** 2)
    assert sp.conjugate().get_z() == pytest.approx(2.0 - 0.5j)


@pytest.mark.parametrize('z', [1.0, -1.0, 1.5, -3.0])
def test_spectral_parameter_in_spectrum(z):
    with pytest.raises(ShellSpecInvalidSpectralParameterException):
        SpectralParameter(z, 1.0)


def test_green_function_at_zero():
    with pytest.raises(ShellSpecInvalidDataException):
        green_phi(SpectralParameter(0.2, 1.0), np.zeros(2))


@pytest.mark.parametrize('z', [0.3, 0.3 + 0.2j, 2.0 + 0.1j])
def test_green_function_solves_free_equation(z):
    """(D₀ - z)φ_z = 0 away from the origin."""
    m = 1.0
    sp = SpectralParameter(z, m)
    x = np.array([0.7, 0.4])
    h = 1e-4
    d1 = (green_phi(sp, x + (h, 0.0)) - green_phi(sp, x - (h, 0.0))) / (2 * h)
    d2 = (green_phi(sp, x + (0.0, h)) - green_phi(sp, x - (0.0, h))) / (2 * h)
    phi = green_phi(sp, x)
    residual = -1j * (SIGMA_1.dot(d1) + SIGMA_2.dot(d2)) \
        + m * SIGMA_3.dot(phi) - z * phi
    assert np.max(np.abs(residual)) < 1e-6 * np.max(np.abs(phi)) + 1e-7


def test_green_function_batch(rng):
    sp = SpectralParameter(0.2 + 0.1j, 1.0)
    x = rng.normal(size=(3, 4, 2))
    batch = green_phi_batch(sp, x)
    assert batch.shape == (3, 4, 2, 2)
    np.testing.assert_allclose(batch[1, 2], green_phi(sp, x[1, 2]))


def test_green_function_logarithmic_singularity():
    sp = SpectralParameter(0.0, 1.0)
    r = 1e-6
    phi = green_phi(sp, np.array([r, 0.0]))
    # K₀(r) ~ -log(r/2) - γ near the origin.
    expected = (-np.log(r / 2.0) - np.euler_gamma) / (2.0 * np.pi)
    assert phi[0, 0].real == pytest.approx(expected, rel=1e-6)
