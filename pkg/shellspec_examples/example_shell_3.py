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


# DESCRIPTION
#
# This application example shows how regular potentials squeezed onto a
# circle converge to a shell interaction with renormalized couplings, and how
# mollified magnetic potentials reach a purely magnetic shell.


# IMPORT

from __future__ import print_function
import sys
import os

from shellspec.approximation.magnetic_alternative import magnetic_alternative
from shellspec.approximation.profile import profile_by_name
from shellspec.approximation.radial_shell_problem import ApproximationStudy
from shellspec.couplings import Couplings
from shellspec.couplings import renormalize_forward
from shellspec.utils.shellspec_exceptions import ShellSpecException


# PRECONDITIONS
#
# In case you want to modify the library, clone the repository and add the
# location of its root folder to the "PYTHONPATH" environment variable.
#
# On Linux:
#   export PYTHONPATH=/home/<user>/shellspec


# CONSTANTS

# Presentation message.
INTRO = """######################
# ShellSpec Example #
######################"""

# Widths of the approximating potentials.
EPSILONS = (1e-1, 1e-2, 1e-3)

# Largest angular channel.
MAX_CHANNEL = 1

# Limit coupling of the magnetic shell.
LAMBDA_HAT = 1.0


# FUNCTIONS

#
# Printing intro.
#
def print_intro():
    print('\n' + INTRO + '\n')


# MAIN APPLICATION

#
# Main application.
#
def main(argv):

    # Printing intro.
    print_intro()

    try:
        # Squeezing a scalar well with a box profile.
        couplings = Couplings(0.0, -2.0, 0.0, 0.0)
        print('Approximating couplings %s,\nlimit couplings %s.\n' % \
            (couplings, renormalize_forward(couplings)))
        study = ApproximationStudy(1.0, 1.0, couplings,
                                   profile_by_name('box'), EPSILONS,
                                   MAX_CHANNEL)
        print('%10s %8s %16s %16s %10s' % ApproximationStudy.HEADER[:5])
        for row in study.run():
            print('%10.1e %8d %16.10f %16.10f %10.2e' % row.as_tuple()[:5])
        for channel, limit, value in study.get_extrapolations():
            print('Channel %+d: extrapolated %.10f, limit %.10f.' % \
                (channel, value, limit))

        # Mollified magnetic potentials.
        result = magnetic_alternative(1.0, 1.0, LAMBDA_HAT, 1e-3)
        print('\nMagnetic potentials with lambda = %.6f: %d eigenvalue(s), '
              'transfer mismatch %.2e, largest error %.2e.' % \
            (result.get_alternative().get_lambda(),
             len(result.get_eigenvalues()), result.get_transfer_mismatch(),
             result.max_eigenvalue_error()))
        print('\nExiting...\n')
        sys.exit(0)

    except ShellSpecException as e:
        print(e)
        sys.exit(1)
    except KeyboardInterrupt:
        try:
            # Exiting.
            print('\nExiting...\n')
            sys.exit(0)
        except SystemExit:
            os._exit(0)


if __name__ == "__main__":

    main(sys.argv[1:])
