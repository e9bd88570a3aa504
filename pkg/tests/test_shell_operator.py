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

from shellspec.couplings import Couplings
from shellspec.disk_oracle import disk_eigenvalues
from shellspec.disk_oracle import mode_boundary_operator
from shellspec.geometry import CircleCurve
from shellspec.kernels import SpectralParameter
from shellspec.shell_operator.boundary_operator import BSOperator
from shellspec.shell_operator.boundary_operator import apply_Cz
from shellspec.shell_operator.boundary_operator import assemble_Cz
from shellspec.shell_operator.boundary_operator import bs_operator
from shellspec.shell_operator.boundary_operator import coupling_blocks
from shellspec.shell_operator.discretization import ShellDiscretization
from shellspec.shell_operator.eigenvalue_scan import EigenvalueScan
from shellspec.shell_operator.eigenvalue_scan import EigenvalueScanListener
from shellspec.shell_operator.eigenvalue_scan import eigenvalue_scan
from shellspec.shell_operator.krein_resolvent import BumpSource
from shellspec.shell_operator.krein_resolvent import KreinResolvent
from shellspec.shell_operator.krein_resolvent import dirac_residual
from shellspec.shell_operator.krein_resolvent import krein_resolvent_apply
from shellspec.shell_operator.layer_potential import LayerPotential
from shellspec.shell_operator.layer_potential import plemelj_check
from shellspec.spin_algebra import PointCouplings
from shellspec.spin_algebra import transmission_matrix_R
from shellspec.utils.shellspec_exceptions import ShellSpecConfiningCouplingsException
from shellspec.utils.shellspec_exceptions import ShellSpecCriticalCouplingsException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidOperationException
from shellspec.utils.shellspec_exceptions import ShellSpecNumericalFailureException

logger = logging.getLogger(__name__)


def channel_density(disc, n, a, b):
    theta = disc.get_arc_lengths() * 2.0 * np.pi / disc.get_length()
    return np.stack([a * np.exp(1j * n * theta),
                     b * np.exp(1j * (n + 1) * theta)], axis=-1)


class RecordingListener(EigenvalueScanListener):

    def __init__(self):
        self.points = []
        self.eigenvalues = []

    def on_scan_point(self, scan, z, sigma_min):
        self.points.append(z)

    def on_eigenvalue_found(self, scan, eigenvalue):
        self.eigenvalues.append(eigenvalue)


# DISCRETIZATION

@pytest.mark.parametrize('N', [6, 9, 16.5])
def test_discretization_rejects_bad_counts(unit_circle, N):
    with pytest.raises(ShellSpecInvalidDataException):
        ShellDiscretization(unit_circle, N)


def test_log_rule(ellipse):
    disc = ShellDiscretization(ellipse, 32)
    assert disc.log_rule_residual() < 1e-12
    t = disc.get_parameters()
    # log(4 sin²(x/2)) = -2 Σ cos(qx)/q.
    for q in (1, 3, 7):
        np.testing.assert_allclose(disc.log_weights().dot(np.cos(q * t)),
                                   -2.0 * np.pi / q * np.cos(q * t),
                                   atol=1e-12)


def test_hilbert_rule(unit_circle):
    disc = ShellDiscretization(unit_circle, 32)
    weights = disc.hilbert_weights()
    np.testing.assert_allclose(weights, -weights.T)
    t = disc.get_parameters()
    for q in (1, 4, 9):
        np.testing.assert_allclose(weights.dot(np.cos(q * t)),
                                   -np.sin(q * t), atol=1e-10)


def test_integrate(ellipse):
    disc = ShellDiscretization(ellipse, 64)
    assert disc.integrate(np.ones(64)) == pytest.approx(ellipse.get_length())
    # Signed curvature integrates to 2π on a simple closed curve.
    assert disc.integrate(disc.get_curvatures()) == pytest.approx(
        2.0 * np.pi, rel=1e-10)


# BOUNDARY OPERATOR

def test_cz_adjoint(ellipse):
    disc = ShellDiscretization(ellipse, 32)
    sp = SpectralParameter(0.2 + 0.3j, 1.0)
    cz = assemble_Cz(disc, sp)
    np.testing.assert_allclose(cz.conj().T, assemble_Cz(disc, sp.conjugate()),
                               rtol=1e-10, atol=1e-12)


@pytest.mark.parametrize('n', [-2, 0, 1])
@pytest.mark.parametrize('z', [0.3, -0.6])
def test_cz_matches_channel_operator(n, z):
    """On the circle, C_z maps angular channels to themselves."""
    R, m = 1.3, 1.0
    disc = ShellDiscretization(CircleCurve(R), 64)
    sp = SpectralParameter(z, m)
    mode = mode_boundary_operator(R, m, z, n)
    for a, b in ((1.0, 0.0), (0.0, 1.0)):
        result = apply_Cz(disc, sp, channel_density(disc, n, a, b))
        expected = mode.dot([a, b])
        np.testing.assert_allclose(
            result, channel_density(disc, n, expected[0], expected[1]),
            atol=1e-8)


def test_coupling_blocks(unit_circle):
    disc = ShellDiscretization(unit_circle, 8)
    blocks = coupling_blocks(disc, Couplings(1.0, 0.5, 0.3))
    assert blocks.shape == (16, 16)
    np.testing.assert_allclose(blocks, blocks.conj().T)
    with pytest.raises(ShellSpecInvalidOperationException):
        coupling_blocks(disc, Couplings(1.0, 0.5, 0.3, 0.2))


def test_bs_operator_is_identity_without_couplings(unit_circle):
    disc = ShellDiscretization(unit_circle, 16)
    operator = bs_operator(disc, SpectralParameter(0.1, 1.0), Couplings())
    np.testing.assert_allclose(operator.get_matrix(), np.eye(32))
    assert operator.smallest_singular_value() == pytest.approx(1.0)


def test_bs_operator_reports_numerical_failures():
    sp = SpectralParameter(0.3, 1.0)
    singular = BSOperator(None, sp, Couplings(),
                          np.zeros((4, 4), dtype=complex))
    with pytest.raises(ShellSpecNumericalFailureException):
        singular.solve(np.ones(4, dtype=complex))
    broken = BSOperator(None, sp, Couplings(),
                        np.full((4, 4), np.nan, dtype=complex))
    with pytest.raises(ShellSpecNumericalFailureException):
        broken.smallest_singular_value()
    with pytest.raises(ShellSpecNumericalFailureException):
        broken.null_vector()


def test_bs_operator_singular_at_oracle_eigenvalues(unit_circle,
                                                    attractive_couplings):
    oracle = disk_eigenvalues(1.0, 1.0, attractive_couplings, max_channel=6,
                              points=200)
    assert oracle
    disc = ShellDiscretization(unit_circle, 64)
    for eigenvalue in oracle:
        if abs(eigenvalue.get_z()) > 0.99:
            continue
        operator = bs_operator(disc, SpectralParameter(eigenvalue.get_z(),
                                                       1.0),
                               attractive_couplings)
        assert operator.smallest_singular_value() < 1e-6
        # Null vectors of 𝕀 + B C_z are fixed by -B C_z.
        psi = operator.null_vector()
        assert np.linalg.norm(operator.get_matrix().dot(psi)) < 1e-6


# EIGENVALUE SCAN

def test_scan_matches_oracle(unit_circle, attractive_couplings):
    oracle = [e.get_z() for e in disk_eigenvalues(
        1.0, 1.0, attractive_couplings, max_channel=8, points=200)]
    disc = ShellDiscretization(unit_circle, 48)
    listener = RecordingListener()
    scan = EigenvalueScan(disc, attractive_couplings, 1.0, points=120)
    scan.add_listener(listener)
    found = scan.run()
    assert found
    assert len(listener.points) == 120
    assert len(listener.eigenvalues) == len(found)
    assert [e.get_z() for e in found] == sorted(e.get_z() for e in found)
    for eigenvalue in found:
        assert eigenvalue.get_sigma_min() < EigenvalueScan.DEFAULT_THRESHOLD
        assert eigenvalue.get_multiplicity() >= 1
        assert min(abs(eigenvalue.get_z() - z) for z in oracle) < 1e-6


def test_scan_threads_do_not_change_results(unit_circle,
                                            attractive_couplings):
    disc = ShellDiscretization(unit_circle, 32)
    serial = eigenvalue_scan(disc, attractive_couplings, 1.0, points=40)
    parallel = eigenvalue_scan(disc, attractive_couplings, 1.0, points=40,
                               threads=4)
    assert [e.get_z() for e in serial] == [e.get_z() for e in parallel]


def test_scan_rejections(unit_circle):
    disc = ShellDiscretization(unit_circle, 16)
    with pytest.raises(ShellSpecCriticalCouplingsException):
        EigenvalueScan(disc, Couplings(2.0, 0.0, 0.0), 1.0)
    with pytest.raises(ShellSpecConfiningCouplingsException):
        EigenvalueScan(disc, Couplings(0.0, 2.0, 0.0), 1.0)
    with pytest.raises(ShellSpecInvalidOperationException):
        EigenvalueScan(disc, Couplings(1.0, 0.0, 0.0, 0.5), 1.0)
    with pytest.raises(ShellSpecInvalidDataException):
        EigenvalueScan(disc, Couplings(1.0, 0.0, 0.0), 0.0)


def test_scan_free_operator_has_no_eigenvalues(ellipse):
    disc = ShellDiscretization(ellipse, 32)
    assert eigenvalue_scan(disc, Couplings(), 1.0, points=30) == []


# LAYER POTENTIAL AND RESOLVENT

def test_plemelj_jump(ellipse):
    disc = ShellDiscretization(ellipse, 64)
    t = disc.get_parameters()
    density = np.stack([np.cos(t) + 0.5, np.sin(2.0 * t) - 0.3j], axis=-1)
    sp = SpectralParameter(0.2 + 0.1j, 1.0)
    assert plemelj_check(disc, sp, density) < 1e-4


def test_layer_potential_rejects_bad_density(unit_circle):
    disc = ShellDiscretization(unit_circle, 16)
    with pytest.raises(ShellSpecInvalidDataException):
        LayerPotential(disc, SpectralParameter(0.1, 1.0), np.zeros((8, 2)))


def test_krein_resolvent(unit_circle, generic_couplings):
    disc = ShellDiscretization(unit_circle, 64)
    sp = SpectralParameter(0.2 + 0.1j, 1.0)
    source = BumpSource((0.0, 0.0), 0.3)
    resolvent = krein_resolvent_apply(disc, sp, generic_couplings, source)
    assert isinstance(resolvent, KreinResolvent)
    assert resolvent.get_sigma_min() > 1e-4
    # The traces obey the transmission condition u₊ = R u₋.
    for s in (0.5, 2.0, 4.4):
        inner = resolvent.one_sided_trace(s, interior=True)
        outer = resolvent.one_sided_trace(s, interior=False)
        R = transmission_matrix_R(PointCouplings(1.0, 0.5, 0.3),
                                  unit_circle.frame_at(s))
        scale = max(np.max(np.abs(inner)), 1e-12)
        assert np.max(np.abs(inner - R.dot(outer))) < 1e-4 * scale + 1e-8
    # Away from the curve and the source, u solves the free equation.
    for x in ((0.5, 0.5), (1.6, -0.2)):
        assert dirac_residual(resolvent.evaluate, sp, np.array(x)) < 1e-6


def test_krein_resolvent_rejects_overlapping_source(unit_circle,
                                                    generic_couplings):
    disc = ShellDiscretization(unit_circle, 16)
    with pytest.raises(ShellSpecInvalidDataException):
        KreinResolvent(disc, SpectralParameter(0.1j, 1.0), generic_couplings,
                       BumpSource((1.0, 0.0), 0.3))
    with pytest.raises(ShellSpecInvalidDataException):
        BumpSource((0.0, 0.0), 0.0)


def test_bump_source_free_resolvent():
    source = BumpSource((0.0, 0.0), 0.5, spinor=(0.0, 1.0))
    sp = SpectralParameter(0.3, 1.0)
    assert dirac_residual(lambda x: source.free_resolvent(sp, x), sp,
                          np.array([0.9, 0.4])) < 1e-6
    assert source.evaluate(np.array([0.6, 0.0]))[1] == 0.0
    assert source.evaluate(np.array([0.0, 0.0]))[1] == pytest.approx(
        np.exp(-1.0))
