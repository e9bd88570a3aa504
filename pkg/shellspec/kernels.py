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


"""kernels

The kernels module provides the modified Bessel functions K₀, K₁ and the
matrix-valued Green function φ_z of the free Dirac operator
D₀ = -iσ·∇ + mσ₃ in the plane:

    φ_z(x) = (1/2π) K₀(w|x|)(mσ₃ + z𝕀) + (iw/2π) K₁(w|x|) σ·(x/|x|),

with w = √(m² - z²) on the principal branch.
"""


# IMPORT

import numpy as np
from scipy.special import kv

from shellspec.spin_algebra import IDENTITY
from shellspec.spin_algebra import SIGMA_3
from shellspec.spin_algebra import sigma_dot
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidSpectralParameterException


# CONSTANTS

_BRANCH_CUT_TOLERANCE = 1e-14
"""Imaginary part under which m² - z² is considered to be on the real axis."""


# CLASSES

class SpectralParameter(object):
    """Spectral parameter z of the free Dirac operator of mass m.

    The parameter must lie in the resolvent set of D₀, i.e. m² - z² must not
    lie in (-∞, 0]; then w = √(m² - z²) has a positive real part.
    """

    def __init__(self, z, m):
        """Constructor.

        Args:
            z (complex): Spectral parameter.
            m (float): Mass.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidSpectralParameterException`
            if z lies in the spectrum (-∞, -|m|] ∪ [|m|, ∞) of D₀.
        """
        self._z = complex(z)
        self._m = float(m)
        w2 = self._m ** 2 - self._z ** 2
        if abs(w2.imag) <= _BRANCH_CUT_TOLERANCE * max(1.0, abs(w2)) \
            and w2.real <= 0.0:
            raise ShellSpecInvalidSpectralParameterException(
                'z = %s lies in the spectrum of the free operator of mass %g.'
                % (self._z, self._m))
        self._w = complex(np.sqrt(w2))

    def get_z(self):
        return self._z

    def get_mass(self):
        return self._m

    def get_w(self):
        """Get w = √(m² - z²), with positive real part.

        Returns:
            complex: The value of w.
        """
        return self._w

    def is_real_gap(self):
        """Tell whether z is real and lies in the gap (-|m|, |m|).

        Returns:
            bool: True for a real gap parameter, where w is real.
        """
        return self._z.imag == 0.0 and abs(self._z.real) < abs(self._m)

    def conjugate(self):
        """Get the parameter z̄ of the same mass.

        Returns:
            :class:`shellspec.kernels.SpectralParameter`: The conjugate.
        """
        return SpectralParameter(self._z.conjugate(), self._m)

    def __str__(self):
        return 'SpectralParameter(z=%s, m=%g)' % (self._z, self._m)


# FUNCTIONS

def bessel_k(order, x):
    """Modified Bessel function of the second kind, K₀ or K₁.

    Args:
        order (int): 0 or 1.
        x (complex): Argument with positive real part; arrays are accepted.

    Returns:
        complex: K_order(x), real-valued for real x.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
        if the order is not 0 or 1.
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidSpectralParameterException`
        if Re x ≤ 0.
    """
    if order not in (0, 1):
        raise ShellSpecInvalidDataException(
            'Only K0 and K1 are provided, got order %r.' % (order,))
    x = np.asarray(x)
    if np.any(np.real(x) <= 0):
        raise ShellSpecInvalidSpectralParameterException(
            'Bessel K needs arguments with positive real part.')
    if np.isrealobj(x) or np.all(np.imag(x) == 0):
        result = kv(order, np.real(x))
    else:
        result = kv(order, x.astype(complex))
    return np.asarray(result)[()]


def green_phi(sp, x):
    """Green function φ_z of the free Dirac operator at a displacement.

    Args:
        sp (:class:`shellspec.kernels.SpectralParameter`): Spectral parameter.
        x (:class:`numpy.ndarray`): Nonzero displacement, shape (2,).

    Returns:
        :class:`numpy.ndarray`: The 2x2 matrix φ_z(x).

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
        if x = 0.
    """
    x = np.asarray(x, dtype=float)
    if not np.hypot(x[0], x[1]) > 0:
        raise ShellSpecInvalidDataException(
            'Green function is singular at zero displacement.')
    return green_phi_batch(sp, x[None, :])[0]


def green_phi_batch(sp, x):
    """Vectorized :func:`shellspec.kernels.green_phi`.

    Args:
        sp (:class:`shellspec.kernels.SpectralParameter`): Spectral parameter.
        x (:class:`numpy.ndarray`): Nonzero displacements, shape (..., 2).

    Returns:
        :class:`numpy.ndarray`: Matrices, shape (..., 2, 2).

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
        if some displacement vanishes.
    """
    x = np.asarray(x, dtype=float)
    r = np.hypot(x[..., 0], x[..., 1])
    if np.any(r == 0):
        raise ShellSpecInvalidDataException(
            'Green function is singular at zero displacement.')
    w = sp.get_w()
    wr = w.real * r if w.imag == 0 else w * r
    k0 = bessel_k(0, wr)
    k1 = bessel_k(1, wr)
    diagonal = sp.get_mass() * SIGMA_3 + sp.get_z() * IDENTITY
    unit = x / r[..., None]
    return (k0 / (2.0 * np.pi))[..., None, None] * diagonal \
        + (1j * w * k1 / (2.0 * np.pi))[..., None, None] * sigma_dot(unit)
