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


"""shellspec_exceptions

The shellspec_exceptions module defines exceptions raised by the ShellSpec
library.
"""


# CLASSES

class ShellSpecException(Exception):
    """Base class of the exceptions raised by the ShellSpec library."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecException, self).__init__(msg)


class ShellSpecInvalidDataException(ShellSpecException):
    """Exception raised whenever an input value has a format or a range not
    accepted by the called operation."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecInvalidDataException, self).__init__(msg)


class ShellSpecOutOfTubeException(ShellSpecException):
    """Exception raised whenever a point or a normal offset lies outside the
    admissible tubular neighborhood of a curve."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecOutOfTubeException, self).__init__(msg)


class ShellSpecInvalidSpectralParameterException(ShellSpecException):
    """Exception raised whenever a spectral parameter lies on the spectrum of
    the free operator or outside the domain of a special function."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecInvalidSpectralParameterException, self).__init__(msg)


class ShellSpecConfiningCouplingsException(ShellSpecException):
    """Exception raised whenever an operation needs a transmission across the
    curve but the couplings are confining (d = -4)."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecConfiningCouplingsException, self).__init__(msg)


class ShellSpecCriticalCouplingsException(ShellSpecException):
    """Exception raised whenever the criticality functional of the couplings
    vanishes somewhere on the curve."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecCriticalCouplingsException, self).__init__(msg)


class ShellSpecExceptionalCouplingsException(ShellSpecException):
    """Exception raised whenever the couplings hit an exceptional set of a
    gauge or renormalization map."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecExceptionalCouplingsException, self).__init__(msg)


class ShellSpecInvalidOperationException(ShellSpecException):
    """Exception raised whenever the operation requested is not supported for
    the given inputs."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecInvalidOperationException, self).__init__(msg)


class ShellSpecNumericalFailureException(ShellSpecException):
    """Exception raised whenever a numerical procedure cannot deliver a result
    with the requested accuracy."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecNumericalFailureException, self).__init__(msg)


class ShellSpecInvalidProfileException(ShellSpecException):
    """Exception raised whenever a transverse profile is not normalized or
    lacks the regularity an operation needs."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecInvalidProfileException, self).__init__(msg)


class ShellSpecInvalidConfigException(ShellSpecException):
    """Exception raised whenever a run configuration has a missing, unknown, or
    malformed key."""

    def __init__(self, msg):
        """Constructor

        Args:
            msg (str): The message to raise.
        """
        super(ShellSpecInvalidConfigException, self).__init__(msg)
