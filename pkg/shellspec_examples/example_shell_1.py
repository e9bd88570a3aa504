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
# This application example shows how to build a star-shaped curve, classify a
# set of couplings, and scan the gap of the mass for eigenvalues of the shell
# operator, getting notified of every grid point and of every eigenvalue found.


# IMPORT

from __future__ import print_function
import sys
import os

from shellspec.couplings import Couplings
from shellspec.couplings import classify
from shellspec.geometry import StarCurve
from shellspec.shell_operator.discretization import ShellDiscretization
from shellspec.shell_operator.eigenvalue_scan import EigenvalueScan
from shellspec.shell_operator.eigenvalue_scan import EigenvalueScanListener
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

# Number of quadrature nodes on the curve.
NODES = 96

# Number of grid points in the gap.
GRID_POINTS = 120

# Mass.
MASS = 1.0

# Number of scan points to print before going quiet.
PRINTED_POINTS = 10


# FUNCTIONS

#
# Printing intro.
#
def print_intro():
    print('\n' + INTRO + '\n')


# INTERFACES

#
# Implementation of the interface used by the EigenvalueScan class to notify
# the progress of the scan.
#
class MyScanListener(EigenvalueScanListener):

    _points = 0
    """Counting scan points to print only the first ones."""

    #
    # To be called whenever the smallest singular value at a grid point is
    # available.
    #
    # @param scan      Scan in progress.
    # @param z         Grid point.
    # @param sigma_min Smallest singular value of the boundary operator.
    #
    def on_scan_point(self, scan, z, sigma_min):
        if self._points < PRINTED_POINTS:
            self._points += 1
            print('z = %+.6f  sigma_min = %.3e' % (z, sigma_min))

    #
    # To be called whenever an eigenvalue is found.
    #
    # @param scan       Scan in progress.
    # @param eigenvalue Eigenvalue found.
    #
    def on_eigenvalue_found(self, scan, eigenvalue):
        print('Eigenvalue found: %s.' % (eigenvalue))


# MAIN APPLICATION

#
# Main application.
#
def main(argv):

    # Printing intro.
    print_intro()

    try:
        # Creating the curve and the couplings.
        curve = StarCurve(1.0, 0.15, 5)
        couplings = Couplings(0.0, -1.0, 0.0, 0.0)
        report = classify(couplings)
        print('Couplings %s: d = %.6g, critical: %s, confining: %s.\n' % \
            (couplings, report.get_d(), report.is_critical(),
             report.is_confining()))

        # Scanning the gap.
        disc = ShellDiscretization(curve, NODES)
        scan = EigenvalueScan(disc, couplings, MASS, GRID_POINTS)
        scan.add_listener(MyScanListener())
        eigenvalues = scan.run()

        # Printing results.
        print('\n%d eigenvalue(s) in the gap.' % (len(eigenvalues)))
        for eigenvalue in eigenvalues:
            print('    %s' % (eigenvalue))
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
