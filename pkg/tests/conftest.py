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


"""conftest

Shared fixtures of the test suite: the curves and couplings used throughout,
and a seeded random generator.
"""


# IMPORT

import numpy as np
import pytest

from shellspec.couplings import Couplings
from shellspec.geometry import CircleCurve
from shellspec.geometry import EllipseCurve
from shellspec.geometry import StarCurve


# FIXTURES

@pytest.fixture
def unit_circle():
    return CircleCurve(1.0)


@pytest.fixture
def ellipse():
    return EllipseCurve(2.0, 1.0)


@pytest.fixture
def star():
    return StarCurve(1.0, 0.2, 5)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def generic_couplings():
    """Non-critical constant couplings with every term present."""
    return Couplings(1.0, 0.5, 0.3, 0.0)


@pytest.fixture
def attractive_couplings():
    """Electrostatic couplings with bound states in the gap of a disk."""
    return Couplings(0.0, -1.0, 0.0, 0.0)
