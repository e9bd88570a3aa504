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

from shellspec.approximation.field_checks import HEADER
from shellspec.approximation.field_checks import MagneticLayer
from shellspec.approximation.field_checks import constant_test_function
from shellspec.approximation.field_checks import field_checks
from shellspec.approximation.field_checks import gaussian_test_function
from shellspec.approximation.magnetic_alternative import MagneticAlternative
from shellspec.approximation.magnetic_alternative import magnetic_alternative
from shellspec.approximation.profile import Profile
from shellspec.approximation.profile import box_profile
from shellspec.approximation.profile import raised_cosine_profile
from shellspec.utils.shellspec_exceptions import ShellSpecExceptionalCouplingsException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidProfileException

logger = logging.getLogger(__name__)


# MAGNETIC ALTERNATIVE

@pytest.mark.parametrize('lam_hat', [2.0, -2.0, 3.5])
def test_exceptional_strength(lam_hat):
    with pytest.raises(ShellSpecExceptionalCouplingsException):
        MagneticAlternative(1.0, 1.0, lam_hat, 1e-2)


def test_strength_and_indicator():
    alternative = MagneticAlternative(1.0, 1.0, 1.0, 0.1)
    assert alternative.get_lambda() == pytest.approx(np.log(3.0))
    assert alternative.get_limit_couplings().get_constants() == \
        (0.0, 0.0, 1.0, 0.0)
    chi = alternative.mollified_indicator(np.array([0.5, 0.9, 1.0, 1.1, 2.0]))
    np.testing.assert_allclose(chi, [0.0, 0.0, 0.5, 1.0, 1.0], atol=1e-12)
    assert alternative.identity_residual() < 1e-12


def test_transfer_matches_limit():
    coarse = MagneticAlternative(1.0, 1.0, 1.2, 1e-2).transfer_mismatch(0.4, 1)
    fine = MagneticAlternative(1.0, 1.0, 1.2, 1e-4).transfer_mismatch(0.4, 1)
    assert fine < coarse
    assert fine < 1e-2


def test_magnetic_alternative_spectrum():
    result = magnetic_alternative(1.0, 1.0, 1.0, 1e-3, points=100,
                                  max_channel=1)
    assert len(result.get_eigenvalues()) == \
        len(result.get_oracle_eigenvalues())
    assert result.max_eigenvalue_error() < 1e-2
    assert result.get_identity_residual() < 1e-12
    assert result.get_transfer_mismatch() < 5e-2


# MAGNETIC LAYER

def test_vector_potential(unit_circle):
    layer = MagneticLayer(unit_circle, 2.0, box_profile(), 0.1)
    np.testing.assert_allclose(layer.vector_potential((1.05, 0.0)),
                               [0.0, 10.0], atol=1e-10)
    np.testing.assert_allclose(layer.vector_potential((0.0, -0.96)),
                               [10.0, 0.0], atol=1e-10)
    assert not np.any(layer.vector_potential((0.0, 0.0)))


@pytest.mark.parametrize('profile', [box_profile(), raised_cosine_profile()],
                         ids=str)
def test_total_flux_vanishes(unit_circle, profile):
    layer = MagneticLayer(unit_circle, 1.5, profile, 0.1)
    constant = constant_test_function()
    assert abs(layer.b_pairing(constant)) < 1e-9
    assert np.max(np.abs(layer.a_pairing(constant))) < 1e-10


def test_curl_matches_field(ellipse):
    layer = MagneticLayer(ellipse, 1.0, raised_cosine_profile(), 0.1)
    assert layer.curl_residual() < 1e-5


def test_field_check_table(unit_circle):
    rows = field_checks(unit_circle, 1.0, raised_cosine_profile(),
                        epsilons=(0.2, 0.1, 0.05))
    assert len(rows) == 3
    assert np.isnan(rows[0].get_a_order())
    assert np.isnan(rows[0].get_b_order())
    for before, after in zip(rows, rows[1:]):
        assert after.get_a_error() < before.get_a_error()
        assert after.get_b_error() < before.get_b_error()
        assert after.get_a_order() > 1.0
        assert after.get_b_order() > 1.0
    for row in rows:
        assert len(row.as_tuple()) == len(HEADER)
        assert row.get_curl_residual() < 1e-4


def test_field_check_without_curl(ellipse):
    rows = field_checks(ellipse, 1.0, box_profile(), epsilons=(0.05,),
                        test_function=gaussian_test_function((0.5, -0.2)),
                        curl=False)
    assert np.isnan(rows[0].get_curl_residual())
    assert rows[0].get_b_error() < 1e-1


def test_field_check_needs_derivative(unit_circle):
    flat = Profile('flat', lambda t: np.full(np.shape(t), 0.5), breakpoints=())
    with pytest.raises(ShellSpecInvalidProfileException):
        field_checks(unit_circle, 1.0, flat, epsilons=(0.1,))
