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

from shellspec.config import RunConfig
from shellspec.config import evaluate_expression
from shellspec.config import parse_expression
from shellspec.geometry import CircleCurve
from shellspec.geometry import EllipseCurve
from shellspec.geometry import StarCurve
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidConfigException

logger = logging.getLogger(__name__)

STAR_CONFIG = """
# Five-lobed star with a varying electrostatic coupling.
curve.kind = star
curve.radius = 1
curve.amplitude = 0.15
couplings.eta = 0.5 + 0.1 * cos(2 * pi * s / ell)
couplings.tau = -0.25   ; constant
mass = 2
nodes = 64
epsilon.sequence = 0.1, 0.01
approx.channels = 2
"""


def test_defaults():
    config = RunConfig()
    assert isinstance(config.get_curve(), CircleCurve)
    assert config.get_mass() == 1.0
    assert config.get_nodes() == 128
    assert config.get_grid_points() == 200
    assert config.get_grid_margin() == pytest.approx(1e-3)
    assert config.get_profile().get_name() == 'box'
    assert config.get('approx.channels') == 3
    assert config.get_couplings(config.get_curve()).get_constants() == \
        (0.0, 0.0, 0.0, 0.0)


def test_star_configuration():
    config = RunConfig.from_string(STAR_CONFIG)
    curve = config.get_curve()
    assert isinstance(curve, StarCurve)
    assert config.get_mass() == 2.0
    assert config.get_grid_margin() == pytest.approx(2e-3)
    assert config.get_epsilons() == [0.1, 0.01]
    assert config.get('approx.channels') == 2
    c = config.get_couplings(curve)
    assert not c.is_constant()
    length = curve.get_length()
    s = np.array([0.0, 0.25 * length, 0.5 * length])
    eta, tau, lam, omega = c.evaluate(s)
    np.testing.assert_allclose(eta, [0.6, 0.5, 0.4], atol=1e-12)
    np.testing.assert_allclose(tau, -0.25)
    assert not np.any(lam) and not np.any(omega)


def test_ellipse_from_file(tmp_path):
    path = tmp_path / 'ellipse.conf'
    path.write_text('curve.kind = ellipse\ncurve.a = 1.5\ncurve.b = 1\n')
    curve = RunConfig.from_file(str(path)).get_curve()
    assert isinstance(curve, EllipseCurve)
    assert curve.get_semi_axes() == (1.5, 1.0)


def test_missing_file(tmp_path):
    with pytest.raises(ShellSpecInvalidConfigException):
        RunConfig.from_file(str(tmp_path / 'absent.conf'))


@pytest.mark.parametrize('text', [
    'curve.color = red',
    'mass = 1\nmass = 2',
    'nodes = many',
    'nodes = 12.5',
    'nodes = 63',
    'nodes = 0',
    'curve.kind = square',
    'profile = gaussian',
    'epsilon.sequence = 0.1, -0.1',
    'couplings.eta = __import__("os")',
    'couplings.eta = s.real',
    'couplings.eta = exp(s)',
    'couplings.eta = 1 if s else 2',
    'mass',
])
def test_invalid_configuration(text):
    with pytest.raises(ShellSpecInvalidConfigException):
        RunConfig.from_string(text)


def test_invalid_curve_parameters():
    config = RunConfig.from_string('curve.radius = -1')
    with pytest.raises(ShellSpecInvalidConfigException):
        config.get_curve()


def test_non_finite_constant_coupling():
    config = RunConfig.from_string('couplings.lambda = 1 / 0')
    with pytest.raises(ShellSpecInvalidConfigException):
        config.get_couplings(config.get_curve())


@pytest.mark.parametrize('text', [
    'couplings.eta = s',
    'couplings.tau = 0.5 + s / ell',
    'curve.kind = ellipse\ncurve.a = 2\ncurve.b = 1\ncouplings.lambda = cos(s)',
    'couplings.omega = 1 / s',
])
def test_non_periodic_coupling(text):
    config = RunConfig.from_string(text)
    with pytest.raises(ShellSpecInvalidConfigException):
        config.get_couplings(config.get_curve())


def test_periodic_coupling():
    config = RunConfig.from_string('couplings.lambda = 0.3 * sin(s) ** 2')
    c = config.get_couplings(config.get_curve())
    np.testing.assert_allclose(c.evaluate(np.array([0.5]))[2],
                               0.3 * np.sin(0.5) ** 2)


def test_unknown_key_lookup():
    with pytest.raises(ShellSpecInvalidConfigException):
        RunConfig().get('nodes.count')


def test_expressions():
    tree = parse_expression('-2 * sin(s) ** 2 + ell / pi')
    s = np.linspace(0.0, 1.0, 5)
    np.testing.assert_allclose(evaluate_expression(tree, s, np.pi),
                               -2.0 * np.sin(s) ** 2 + 1.0)
    assert evaluate_expression(parse_expression('+3'), 0.0, 1.0) == 3.0
    with pytest.raises(ValueError):
        parse_expression('s % 2')
    with pytest.raises(ValueError):
        parse_expression('True')
