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
# This application example shows how to compare the eigenvalues computed by
# the boundary integral method on a circle with the exact eigenvalues of the
# disk, channel by channel.


# IMPORT

from __future__ import print_function
import sys
import os

from shellspec.couplings import Couplings
from shellspec.couplings import isospectral_partner
from shellspec.disk_oracle import disk_eigenvalues
from shellspec.geometry import CircleCurve
from shellspec.shell_operator.discretization import ShellDiscretization
from shellspec.shell_operator.eigenvalue_scan import eigenvalue_scan
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

# Radius of the circle.
RADIUS = 1.0

# Mass.
MASS = 1.0

# Quadrature nodes of the boundary integral method.
NODES = 64

# Largest angular channel of the exact computation.
MAX_CHANNEL = 10


# FUNCTIONS

#
# Printing intro.
#
def print_intro():
    print('\n' + INTRO + '\n')


#
# Printing the exact and the computed eigenvalues side by side.
#
# @param couplings Couplings of the shell.
#
def compare(couplings):
    exact = disk_eigenvalues(RADIUS, MASS, couplings, MAX_CHANNEL)
    disc = ShellDiscretization(CircleCurve(RADIUS), NODES)
    computed = eigenvalue_scan(disc, couplings, MASS)
    print('Couplings %s:' % (couplings))
    for e in exact:
        nearest = min(computed, key=lambda c: abs(c.get_z() - e.get_z())) \
            if computed else None
        print('    channel %+3d  exact %+.10f  computed %s' % \
            (e.get_channel(), e.get_z(),
             '%+.10f' % nearest.get_z() if nearest else '-'))
    print()


# MAIN APPLICATION

#
# Main application.
#
def main(argv):

    # Printing intro.
    print_intro()

    try:
        # Comparing a pair of isospectral couplings.
        couplings = Couplings(1.0, -0.5, 0.3, 0.0)
        compare(couplings)
        compare(isospectral_partner(couplings))
        print('Exiting...\n')
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
