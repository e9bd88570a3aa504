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


"""boundary_operator

The boundary_operator module assembles the Nyström matrix of the boundary
integral operator

    C_z φ(x) = p.v. ∫_Σ φ_z(x - y) φ(y) ds(y),   x ∈ Σ,

and of the Birman-Schwinger operator 𝕀 + B C_z, whose kernel is nontrivial
exactly at the gap eigenvalues of the δ-shell operator.

Densities are stored component-major: entries 0..N-1 hold the first spinor
component at the nodes, entries N..2N-1 the second one.
"""


# IMPORT

import logging

import numpy as np
from scipy.linalg import lu_factor
from scipy.linalg import lu_solve
from scipy.linalg import svd
from scipy.linalg import svdvals
from scipy.special import iv
from scipy.special import kv

from shellspec.utils.shellspec_exceptions import ShellSpecInvalidOperationException
from shellspec.utils.shellspec_exceptions import ShellSpecNumericalFailureException


# CONSTANTS

MAX_BESSEL_ARGUMENT = 600.0
"""Largest |w| times the diameter of the curve handled without overflow."""


# CLASSES

class BSOperator(object):
    """Dense Birman-Schwinger matrix 𝕀 + B C_z at a spectral parameter."""

    def __init__(self, discretization, spectral_parameter, couplings, matrix):
        """Constructor.

        Args:
            discretization (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
            Quadrature of the curve.
            spectral_parameter (:class:`shellspec.kernels.SpectralParameter`):
            Spectral parameter.
            couplings (:class:`shellspec.couplings.Couplings`): Couplings.
            matrix (:class:`numpy.ndarray`): The 2N x 2N matrix.
        """
        self._discretization = discretization
        self._spectral_parameter = spectral_parameter
        self._couplings = couplings
        self._matrix = matrix
        self._singular_values = None

    def get_matrix(self):
        return self._matrix

    def get_z(self):
        return self._spectral_parameter.get_z()

    def get_spectral_parameter(self):
        return self._spectral_parameter

    def get_couplings(self):
        return self._couplings

    def get_discretization(self):
        return self._discretization

    def singular_values(self):
        """Get the singular values in descending order."""
        if self._singular_values is None:
            try:
                self._singular_values = svdvals(self._matrix)
            except (np.linalg.LinAlgError, ValueError) as e:
                raise ShellSpecNumericalFailureException(
                    'Singular values at z = %s not computed: %s'
                    % (self.get_z(), str(e)))
        return self._singular_values

    def smallest_singular_value(self):
        """Get σ_min(𝕀 + B C_z).

        Returns:
            float: The smallest singular value.
        """
        return float(self.singular_values()[-1])

    def multiplicity_estimate(self):
        """Count the singular values below ten times the smallest one."""
        values = self.singular_values()
        return int(np.sum(values <= 10.0 * values[-1]))

    def null_vector(self):
        """Get the right singular vector of the smallest singular value.

        Returns:
            :class:`numpy.ndarray`: Unit density of length 2N.
        """
        try:
            _, _, vh = svd(self._matrix)
        except (np.linalg.LinAlgError, ValueError) as e:
            raise ShellSpecNumericalFailureException(
                'Singular vectors at z = %s not computed: %s'
                % (self.get_z(), str(e)))
        return np.conj(vh[-1])

    def solve(self, rhs):
        """Solve (𝕀 + B C_z) ψ = rhs.

        Args:
            rhs (:class:`numpy.ndarray`): Right-hand side of length 2N.

        Returns:
            :class:`numpy.ndarray`: The density ψ.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecNumericalFailureException`
            if the matrix is singular or not finite.
        """
        try:
            density = lu_solve(lu_factor(self._matrix), rhs)
        except (np.linalg.LinAlgError, ValueError) as e:
            raise ShellSpecNumericalFailureException(
                'Birman-Schwinger system at z = %s not solved: %s'
                % (self.get_z(), str(e)))
        if not np.all(np.isfinite(density)):
            raise ShellSpecNumericalFailureException(
                'Birman-Schwinger system at z = %s is singular.'
                % self.get_z())
        return density


# FUNCTIONS

def assemble_Cz(disc, sp):
    """Assemble the Nyström matrix of C_z.

    The kernel is split on the periodic parameter t = 2πs/ℓ as

        φ_z = L log(4 sin²((t - τ)/2)) + S + M,

    where L carries the logarithmic parts of K₀ and K₁, S is the Cauchy-type
    kernel (i/2π)(π/ℓ)·½cot((t - τ)/2)·offdiag(T̄(t) + T̄(τ), T(t) + T(τ)),
    and M is smooth with an explicit diagonal limit. The three parts are
    integrated by the log-kernel rule, the alternating-point Hilbert rule and
    the trapezoidal rule. The discrete matrices satisfy C_z† = C_z̄ exactly.

    Args:
        disc (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
        Quadrature of the curve.
        sp (:class:`shellspec.kernels.SpectralParameter`): Spectral parameter.

    Returns:
        :class:`numpy.ndarray`: The 2N x 2N complex matrix.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecNumericalFailureException`
        if |w| times the diameter of the curve is too large for the Bessel
        functions.
    """
    N = disc.get_N()
    length = disc.get_length()
    h = disc.get_step()
    z = sp.get_z()
    m = sp.get_mass()
    w = sp.get_w()
    if w.imag == 0.0:
        w = w.real

    zeta = disc.get_complex_positions()
    T = disc.get_complex_tangents()
    xi = np.subtract.outer(zeta, zeta)
    r = np.abs(xi)
    off = ~np.eye(N, dtype=bool)
    if abs(w) * np.max(r) > MAX_BESSEL_ARGUMENT:
        raise ShellSpecNumericalFailureException(
            '|w| * diameter = %.6g exceeds the Bessel range.'
            % (abs(w) * np.max(r)))
    r_safe = np.where(off, r, 1.0)
    wr = w * r_safe

    k0 = kv(0, wr)
    k1 = kv(1, wr)
    i0 = iv(0, wr)
    i1_over_r = iv(1, wr) / r_safe

    t = disc.get_parameters()
    dt = np.subtract.outer(t, t)
    logsin = np.log(np.where(off, 4.0 * np.sin(0.5 * dt) ** 2, 1.0))
    half_cot = np.where(off, 0.5 / np.tan(np.where(off, 0.5 * dt, 1.0)), 0.0)

    # Logarithmic coefficients; the diagonal limits of the K₁ part vanish.
    l11 = -(z + m) / (4.0 * np.pi) * i0
    l22 = -(z - m) / (4.0 * np.pi) * i0
    l12 = np.where(off, 1j / (4.0 * np.pi) * np.conj(xi) * w * i1_over_r, 0.0)
    l21 = np.where(off, 1j / (4.0 * np.pi) * xi * w * i1_over_r, 0.0)
    np.fill_diagonal(l11, -(z + m) / (4.0 * np.pi))
    np.fill_diagonal(l22, -(z - m) / (4.0 * np.pi))

    # Cauchy-type approximants of the K₁ part.
    s_scale = 1j / (2.0 * np.pi) * (np.pi / length) * half_cot
    s12 = s_scale * np.add.outer(np.conj(T), np.conj(T))
    s21 = s_scale * np.add.outer(T, T)

    # Smooth remainder.
    phi_k1 = 1j * w / (2.0 * np.pi) * k1 / r_safe
    m11 = np.where(off, (z + m) / (2.0 * np.pi) * k0 - l11 * logsin, 0.0)
    m22 = np.where(off, (z - m) / (2.0 * np.pi) * k0 - l22 * logsin, 0.0)
    m12 = np.where(off, phi_k1 * np.conj(xi) - l12 * logsin - s12, 0.0)
    m21 = np.where(off, phi_k1 * xi - l21 * logsin - s21, 0.0)
    diagonal = -np.log(w / 2.0) - np.euler_gamma - np.log(length / (2.0 * np.pi))
    np.fill_diagonal(m11, (z + m) / (2.0 * np.pi) * diagonal)
    np.fill_diagonal(m22, (z - m) / (2.0 * np.pi) * diagonal)

    weights = disc.log_weights() * (length / (2.0 * np.pi))
    hilbert = disc.hilbert_weights()
    x12 = -0.25j * hilbert * np.add.outer(np.conj(T), np.conj(T))
    x21 = -0.25j * hilbert * np.add.outer(T, T)

    c11 = weights * l11 + h * m11
    c22 = weights * l22 + h * m22
    c12 = weights * l12 + h * m12 + x12
    c21 = weights * l21 + h * m21 + x21
    return np.block([[c11, c12], [c21, c22]]).astype(complex)


def apply_Cz(disc, sp, density):
    """Apply the Nyström matrix of C_z to a density.

    Args:
        disc (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
        Quadrature of the curve.
        sp (:class:`shellspec.kernels.SpectralParameter`): Spectral parameter.
        density (:class:`numpy.ndarray`): Nodal density, shape (N, 2).

    Returns:
        :class:`numpy.ndarray`: C_z applied to the density, shape (N, 2).
    """
    density = np.asarray(density, dtype=complex)
    N = disc.get_N()
    result = assemble_Cz(disc, sp).dot(density.T.reshape(2 * N))
    return result.reshape(2, N).T


def coupling_blocks(disc, c):
    """Get the block matrix of multiplication by B(s_j) at the nodes.

    Args:
        disc (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
        Quadrature of the curve.
        c (:class:`shellspec.couplings.Couplings`): Couplings with ω = 0.

    Returns:
        :class:`numpy.ndarray`: The 2N x 2N component-major matrix.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidOperationException`
        if ω does not vanish.
    """
    if not c.omega_vanishes():
        raise ShellSpecInvalidOperationException(
            'Birman-Schwinger operator needs gauge-reduced couplings.')
    eta, tau, lam, _ = c.evaluate(disc.get_arc_lengths())
    T = disc.get_complex_tangents()
    return np.block([[np.diag(eta + tau + 0j), np.diag(lam * np.conj(T))],
                     [np.diag(lam * T), np.diag(eta - tau + 0j)]])


def bs_operator(disc, sp, c, cz=None):
    """Assemble the Birman-Schwinger operator 𝕀 + B C_z.

    Args:
        disc (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
        Quadrature of the curve.
        sp (:class:`shellspec.kernels.SpectralParameter`): Spectral parameter.
        c (:class:`shellspec.couplings.Couplings`): Couplings with ω = 0.
        cz (:class:`numpy.ndarray`): Matrix of C_z already assembled at sp,
        if available.

    Returns:
        :class:`shellspec.shell_operator.boundary_operator.BSOperator`: The
        operator.
    """
    if cz is None:
        cz = assemble_Cz(disc, sp)
    b = coupling_blocks(disc, c)
    matrix = np.eye(2 * disc.get_N(), dtype=complex) + b.dot(cz)
    logging.getLogger('ShellSpec').debug(
        'Birman-Schwinger matrix assembled at z = %s.' % sp.get_z())
    return BSOperator(disc, sp, c, matrix)
