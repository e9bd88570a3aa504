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
from scipy.integrate import quad

from shellspec.approximation.profile import PROFILES
from shellspec.approximation.profile import Profile
from shellspec.approximation.profile import box_profile
from shellspec.approximation.profile import bump_profile
from shellspec.approximation.profile import profile_by_name
from shellspec.approximation.profile import raised_cosine_profile
from shellspec.approximation.profile import triangle_profile
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidProfileException

logger = logging.getLogger(__name__)


@pytest.mark.parametrize('name', sorted(PROFILES))
def test_profiles_are_normalized(name):
    profile = profile_by_name(name)
    assert profile.get_name() == name
    total, _ = quad(lambda t: float(profile.h(np.array(t))), -1.0, 1.0,
                    points=[0.0], epsabs=1e-13)
    assert total == pytest.approx(1.0, abs=1e-11)
    assert profile.primitive(-1.0) == pytest.approx(0.0, abs=1e-14)
    assert profile.primitive(1.0) == pytest.approx(1.0, abs=1e-11)
    assert profile.mass_below() == pytest.approx(0.5, abs=1e-11)
    assert profile.mass_above() == pytest.approx(0.5, abs=1e-11)
    assert profile.h(np.array([-1.5, 1.0, 2.0])).tolist() == [0.0, 0.0, 0.0]


@pytest.mark.parametrize('factory', [triangle_profile, raised_cosine_profile,
                                     bump_profile])
def test_derivatives(factory):
    profile = factory()
    t = np.array([-0.7, -0.2, 0.35, 0.8])
    step = 1e-6
    np.testing.assert_allclose(
        profile.derivative(t),
        (profile.h(t + step) - profile.h(t - step)) / (2.0 * step),
        rtol=1e-6, atol=1e-8)


def test_primitive_matches_quadrature():
    for profile in (triangle_profile(), raised_cosine_profile(),
                    box_profile()):
        for t in (-0.4, 0.1, 0.9):
            expected, _ = quad(lambda u: float(profile.h(np.array(u))), -1.0,
                               t)
            assert profile.primitive(t) == pytest.approx(expected, abs=1e-12)


def test_box_jumps():
    profile = box_profile()
    assert profile.get_jumps() == ((-1.0, 0.5), (1.0, -0.5))
    assert profile.is_differentiable()
    assert profile.scaled(0.05, 0.1) == pytest.approx(5.0)
    assert profile.scaled(0.2, 0.1) == 0.0


def test_H():
    profile = raised_cosine_profile()
    epsilon = 0.2
    assert profile.H(1e-12, epsilon) == pytest.approx(0.5)
    assert profile.H(-1e-12, epsilon) == pytest.approx(-0.5)
    assert profile.H(0.3, epsilon) == 0.0
    assert profile.H(-0.3, epsilon) == 0.0
    # H' = -h_ε away from the origin.
    p, step = 0.07, 1e-6
    derivative = (profile.H(p + step, epsilon)
                  - profile.H(p - step, epsilon)) / (2.0 * step)
    assert derivative == pytest.approx(-profile.scaled(p, epsilon), rel=1e-6)


def test_unnormalized_profile():
    with pytest.raises(ShellSpecInvalidProfileException):
        Profile('double', lambda t: np.ones(np.shape(t)))


def test_missing_derivative():
    profile = Profile('plain', lambda t: np.full(np.shape(t), 0.5),
                      breakpoints=())
    assert not profile.is_differentiable()
    with pytest.raises(ShellSpecInvalidProfileException):
        profile.derivative(0.0)
    # The primitive falls back to quadrature.
    assert profile.primitive(0.5) == pytest.approx(0.75)


def test_profile_by_name():
    assert profile_by_name('raised-cosine').get_name() == 'raised_cosine'
    with pytest.raises(ShellSpecInvalidProfileException):
        profile_by_name('gaussian')
