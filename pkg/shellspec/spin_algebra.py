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


"""spin_algebra

The spin_algebra module provides the Pauli matrices and the 2x2 matrix
constructions of δ-shell interactions: the coupling matrix B, the boundary
matrices M±, the transmission matrix R, and a closed-form 2x2 matrix
exponential.

Spin matrices are plain complex :class:`numpy.ndarray` objects of shape
(..., 2, 2); every construction broadcasts over leading axes.
"""


# IMPORT

import numpy as np

from shellspec.utils.shellspec_exceptions import ShellSpecConfiningCouplingsException


# CONSTANTS

IDENTITY = np.eye(2, dtype=complex)
"""Identity matrix."""

SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
"""First Pauli matrix."""

SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
"""Second Pauli matrix."""

SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
"""Third Pauli matrix."""

_SERIES_THRESHOLD = 1e-4
"""Below this |ν| the exponential uses the Taylor series of cos ν, sin ν/ν."""

_CONFINING_TOLERANCE = 1e-12
"""Distance of d from -4 under which couplings are treated as confining."""


# CLASSES

class PointCouplings(object):
    """Values (η, τ, λ, ω) of the coupling functions at one boundary point."""

    def __init__(self, eta=0.0, tau=0.0, lam=0.0, omega=0.0):
        """Constructor.

        Args:
            eta (float): Electrostatic strength η.
            tau (float): Lorentz-scalar strength τ.
            lam (float): Anomalous magnetic strength λ.
            omega (float): Strength ω of the σ·n term.
        """
        self.eta = float(eta)
        self.tau = float(tau)
        self.lam = float(lam)
        self.omega = float(omega)

    def get_d(self):
        """Get the invariant d = η² - τ² - λ².

        Returns:
            float: The value of d.
        """
        return self.eta ** 2 - self.tau ** 2 - self.lam ** 2

    def as_tuple(self):
        return (self.eta, self.tau, self.lam, self.omega)

    def __str__(self):
        return '(eta=%.6g, tau=%.6g, lambda=%.6g, omega=%.6g)' % \
            self.as_tuple()


# FUNCTIONS

def sigma_dot(v):
    """Get σ·v = σ₁v₁ + σ₂v₂.

    Args:
        v (:class:`numpy.ndarray`): Real or complex vectors, shape (..., 2).

    Returns:
        :class:`numpy.ndarray`: Matrices, shape (..., 2, 2).
    """
    v = np.asarray(v)
    return v[..., 0, None, None] * SIGMA_1 + v[..., 1, None, None] * SIGMA_2


def exp2x2(A):
    """Closed-form exponential of 2x2 matrices.

    With μ = Tr A / 2 and ν² = det A - μ², exp A = e^μ (cos ν 𝕀 + sin ν / ν
    (A - μ𝕀)). The even functions cos ν and sin ν / ν are expanded in series
    for |ν| < 1e-4, so the branch of the square root plays no role.

    Args:
        A (:class:`numpy.ndarray`): Matrices, shape (..., 2, 2).

    Returns:
        :class:`numpy.ndarray`: exp A, shape (..., 2, 2).
    """
    A = np.asarray(A, dtype=complex)
    mu = 0.5 * (A[..., 0, 0] + A[..., 1, 1])
    traceless = A - mu[..., None, None] * IDENTITY
    nu2 = np.linalg.det(A) - mu ** 2
    nu = np.sqrt(nu2)
    small = np.abs(nu) < _SERIES_THRESHOLD
    safe_nu = np.where(small, 1.0, nu)
    cos_nu = np.where(small, 1.0 - nu2 / 2.0 + nu2 ** 2 / 24.0, np.cos(safe_nu))
    sinc_nu = np.where(small, 1.0 - nu2 / 6.0 + nu2 ** 2 / 120.0,
                       np.sin(safe_nu) / safe_nu)
    scale = np.exp(mu)
    return (scale * cos_nu)[..., None, None] * IDENTITY \
        + (scale * sinc_nu)[..., None, None] * traceless


def coupling_matrix(eta, tau, lam, t):
    """Get η𝕀 + τσ₃ + λ(σ·t) for arrays of couplings and tangents.

    Args:
        eta (:class:`numpy.ndarray`): Values of η, shape (...).
        tau (:class:`numpy.ndarray`): Values of τ, shape (...).
        lam (:class:`numpy.ndarray`): Values of λ, shape (...).
        t (:class:`numpy.ndarray`): Unit tangents, shape (..., 2).

    Returns:
        :class:`numpy.ndarray`: Matrices, shape (..., 2, 2).
    """
    eta = np.asarray(eta, dtype=float)[..., None, None]
    tau = np.asarray(tau, dtype=float)[..., None, None]
    lam = np.asarray(lam, dtype=float)[..., None, None]
    return eta * IDENTITY + tau * SIGMA_3 + lam * sigma_dot(t)


def coupling_matrix_B(pc, frame):
    """Get the coupling matrix B = η𝕀 + τσ₃ + λ(σ·t) at a boundary point.

    ω does not enter B: couplings with ω ≠ 0 must be gauge-reduced first.

    Args:
        pc (:class:`shellspec.spin_algebra.PointCouplings`): Couplings.
        frame (:class:`shellspec.geometry.FramePoint`): Boundary point.

    Returns:
        :class:`numpy.ndarray`: The Hermitian matrix B.
    """
    return coupling_matrix(pc.eta, pc.tau, pc.lam, frame.get_tangent())


def boundary_matrices_M(pc, frame):
    """Get the boundary matrices M± = ±i(σ·n) + ½(B + ω(σ·n)).

    Args:
        pc (:class:`shellspec.spin_algebra.PointCouplings`): Couplings.
        frame (:class:`shellspec.geometry.FramePoint`): Boundary point.

    Returns:
        tuple: The matrices (M⁺, M⁻).
    """
    sn = sigma_dot(frame.get_normal())
    half = 0.5 * (coupling_matrix_B(pc, frame) + pc.omega * sn)
    return half + 1j * sn, half - 1j * sn


def adjugate_boundary_matrices(pc, frame):
    """Get the matrices M̃± = ∓i(σ·n) + ½(η𝕀 - τσ₃ - λ(σ·t) - ω(σ·n)).

    They satisfy M±M̃± = ¼(4 + d - ω² ∓ 4ωi)𝕀.

    Args:
        pc (:class:`shellspec.spin_algebra.PointCouplings`): Couplings.
        frame (:class:`shellspec.geometry.FramePoint`): Boundary point.

    Returns:
        tuple: The matrices (M̃⁺, M̃⁻).
    """
    sn = sigma_dot(frame.get_normal())
    st = sigma_dot(frame.get_tangent())
    half = 0.5 * (pc.eta * IDENTITY - pc.tau * SIGMA_3 - pc.lam * st
                  - pc.omega * sn)
    return half - 1j * sn, half + 1j * sn


def transmission_matrix(eta, tau, lam, t):
    """Vectorized :func:`shellspec.spin_algebra.transmission_matrix_R`.

    Args:
        eta (:class:`numpy.ndarray`): Values of η, shape (...).
        tau (:class:`numpy.ndarray`): Values of τ, shape (...).
        lam (:class:`numpy.ndarray`): Values of λ, shape (...).
        t (:class:`numpy.ndarray`): Unit tangents, shape (..., 2).

    Returns:
        :class:`numpy.ndarray`: Matrices, shape (..., 2, 2).

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecConfiningCouplingsException`
        if d = -4 somewhere.
    """
    eta = np.asarray(eta, dtype=float)
    tau = np.asarray(tau, dtype=float)
    lam = np.asarray(lam, dtype=float)
    t = np.asarray(t, dtype=float)
    d = eta ** 2 - tau ** 2 - lam ** 2
    if np.any(np.abs(4.0 + d) < _CONFINING_TOLERANCE):
        raise ShellSpecConfiningCouplingsException(
            'Transmission matrix undefined for d = -4.')
    n = np.stack([t[..., 1], -t[..., 0]], axis=-1)
    matrix = ((4.0 - d) / 4.0)[..., None, None] * IDENTITY \
        + 1j * eta[..., None, None] * sigma_dot(n) \
        + tau[..., None, None] * sigma_dot(t) \
        - lam[..., None, None] * SIGMA_3
    return (4.0 / (4.0 + d))[..., None, None] * matrix


def transmission_matrix_R(pc, frame):
    """Get the transmission matrix
    R = 4/(4+d) ((4-d)/4 𝕀 + iη(σ·n) + τ(σ·t) - λσ₃).

    R equals (𝕀 + M)⁻¹(𝕀 - M) with M = -(i/2)(σ·n)B, and links the two
    boundary traces of functions in the operator domain.

    Args:
        pc (:class:`shellspec.spin_algebra.PointCouplings`): Couplings, ω = 0.
        frame (:class:`shellspec.geometry.FramePoint`): Boundary point.

    Returns:
        :class:`numpy.ndarray`: The invertible matrix R.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecConfiningCouplingsException`
        if d = -4.
    """
    return transmission_matrix(pc.eta, pc.tau, pc.lam, frame.get_tangent())


def exp_shell(pc, frame):
    """Get exp[i(σ·n)B], the jump produced by a shell of zero width.

    Args:
        pc (:class:`shellspec.spin_algebra.PointCouplings`): Couplings, ω = 0.
        frame (:class:`shellspec.geometry.FramePoint`): Boundary point.

    Returns:
        :class:`numpy.ndarray`: The matrix exponential.
    """
    return exp2x2(1j * np.dot(sigma_dot(frame.get_normal()),
                              coupling_matrix_B(pc, frame)))


def gauge_identity_residual(pc, reduced, z, frame):
    """Residual of the identity (M⁺_ω)⁻¹ M⁻_ω (M⁻_X)⁻¹ M⁺_X = z̄𝕀.

    Args:
        pc (:class:`shellspec.spin_algebra.PointCouplings`): Couplings with ω.
        reduced (:class:`shellspec.spin_algebra.PointCouplings`): Couplings
        (Xη, Xτ, Xλ, 0).
        z (complex): Unit-modulus gauge factor.
        frame (:class:`shellspec.geometry.FramePoint`): Boundary point.

    Returns:
        float: Spectral norm of the residual.
    """
    m_plus, m_minus = boundary_matrices_M(pc, frame)
    x_plus, x_minus = boundary_matrices_M(reduced, frame)
    product = np.linalg.solve(m_plus, m_minus).dot(
        np.linalg.solve(x_minus, x_plus))
    return float(np.linalg.norm(product - np.conj(z) * IDENTITY, 2))
