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

from shellspec.approximation.conjugation_field import ConjugationField
from shellspec.approximation.epsilon_potential import EpsilonPotential
from shellspec.approximation.field_checks import gaussian_test_function
from shellspec.approximation.profile import box_profile
from shellspec.approximation.profile import raised_cosine_profile
from shellspec.approximation.profile import triangle_profile
from shellspec.couplings import Couplings
from shellspec.couplings import renormalize_forward
from shellspec.spin_algebra import IDENTITY
from shellspec.spin_algebra import coupling_matrix
from shellspec.spin_algebra import exp_shell
from shellspec.spin_algebra import transmission_matrix_R
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException

logger = logging.getLogger(__name__)


def varying_couplings():
    return Couplings(lambda s: 1.0 + 0.2 * np.cos(s), 0.5, 0.3, 0.0,
                     2.0 * np.pi)


# EPSILON POTENTIAL

def test_potential_values(unit_circle, generic_couplings):
    potential = EpsilonPotential(unit_circle, generic_couplings,
                                 box_profile(), 0.1)
    B = coupling_matrix(1.0, 0.5, 0.3, np.array([0.0, 1.0]))
    np.testing.assert_allclose(potential.potential_at((1.05, 0.0)), 5.0 * B,
                               atol=1e-10)
    np.testing.assert_allclose(potential.potential_at((0.97, 0.0)), 5.0 * B,
                               atol=1e-10)
    assert not np.any(potential.potential_at((1.2, 0.0)))
    assert not np.any(potential.potential_at((0.0, 0.0)))


@pytest.mark.parametrize('profile', [box_profile(), triangle_profile(),
                                     raised_cosine_profile()],
                         ids=str)
def test_pairing_converges_to_shell(ellipse, generic_couplings, profile):
    phi = gaussian_test_function()
    limit = EpsilonPotential(ellipse, generic_couplings, profile,
                             0.1).limit_pairing(phi)
    errors = []
    for epsilon in (0.1, 0.05, 0.025):
        potential = EpsilonPotential(ellipse, generic_couplings, profile,
                                     epsilon)
        errors.append(np.max(np.abs(potential.pairing(phi) - limit)))
    assert errors[0] > errors[1] > errors[2]
    assert errors[2] < 1e-2 * np.max(np.abs(limit))


def test_potential_validation(unit_circle, generic_couplings):
    with pytest.raises(ShellSpecInvalidDataException):
        EpsilonPotential(unit_circle, generic_couplings, box_profile(), 0.95)
    with pytest.raises(ShellSpecInvalidDataException):
        EpsilonPotential(unit_circle, Couplings(1.0, 0.0, 0.0, 0.2),
                         box_profile(), 0.1)


# CONJUGATION FIELD

def test_field_is_identity_outside_tube(unit_circle, generic_couplings):
    field = ConjugationField(unit_circle, generic_couplings,
                             raised_cosine_profile(), 0.1)
    np.testing.assert_array_equal(field.field_at((1.5, 0.0)), IDENTITY)
    np.testing.assert_array_equal(field.field_at((0.0, 0.2)), IDENTITY)
    assert not np.any(field.gradient_at((1.5, 0.0)))


def test_boundary_limits_produce_shell_jump(ellipse, generic_couplings):
    field = ConjugationField(ellipse, generic_couplings, triangle_profile(),
                             0.1)
    for s in (0.0, 1.7, 5.1):
        inner, outer = field.boundary_limits(s)
        frame = ellipse.frame_at(s)
        pc = generic_couplings.at(s)
        np.testing.assert_allclose(outer.dot(np.linalg.inv(inner)),
                                   exp_shell(pc, frame), atol=1e-12)
        # One-sided limits of the field itself.
        x_in = ellipse.tubular_to_cartesian(s, -1e-9)
        x_out = ellipse.tubular_to_cartesian(s, 1e-9)
        np.testing.assert_allclose(field.field_at(x_in), inner, atol=1e-7)
        np.testing.assert_allclose(field.field_at(x_out), outer, atol=1e-7)


def test_shell_jump_is_renormalized_transmission(unit_circle,
                                                 generic_couplings):
    """exp[i(σ·n)B] is the transmission matrix of the renormalized
    couplings."""
    limit = renormalize_forward(generic_couplings)
    for s in (0.3, 2.9):
        frame = unit_circle.frame_at(s)
        np.testing.assert_allclose(
            transmission_matrix_R(limit.at(s), frame),
            exp_shell(generic_couplings.at(s), frame), atol=1e-12)


@pytest.mark.parametrize('offset', [-0.06, 0.03])
def test_gradient_matches_differences(unit_circle, offset):
    field = ConjugationField(unit_circle, varying_couplings(),
                             raised_cosine_profile(), 0.1)
    x = unit_circle.tubular_to_cartesian(0.7, offset)
    gradient = field.gradient_at(x)
    step = 1e-6
    for j in (0, 1):
        shift = np.zeros(2)
        shift[j] = step
        difference = (field.field_at(x + shift)
                      - field.field_at(x - shift)) / (2.0 * step)
        np.testing.assert_allclose(gradient[j], difference, atol=1e-5)


def test_condition_bound(unit_circle, generic_couplings):
    field = ConjugationField(unit_circle, generic_couplings, box_profile(),
                             0.1)
    x = unit_circle.tubular_to_cartesian(1.0, 0.02)
    assert np.linalg.cond(field.field_at(x)) <= field.condition_bound(1.0)


def test_field_validation(unit_circle, generic_couplings):
    with pytest.raises(ShellSpecInvalidDataException):
        ConjugationField(unit_circle, generic_couplings, box_profile(), 0.0)
