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


"""python_utils

The python_utils module defines utility functions related to the Python
language: per-object locks and an order-preserving parallel map.
"""


# IMPORT

from concurrent.futures import ThreadPoolExecutor
from threading import RLock


# CONSTANTS

_LOCKS_GUARD = RLock()
"""Guard of the creation of per-object locks."""

_LOCK_ATTRIBUTE = '_shellspec_lock'
"""Instance attribute holding the lock of an object."""


# UTILITY FUNCTIONS

def lock_for_object(obj):
    """To be used to gain exclusive access to a shared object from different
    threads.

    The lock lives in the instance dictionary of the object, so it is
    released together with the object.
    """
    with _LOCKS_GUARD:
        return vars(obj).setdefault(_LOCK_ATTRIBUTE, RLock())

def lock(self):
    """To be used to gain exclusive access to a block of code that touches the
    state of an object from different threads."""
    return lock_for_object(self)

def ordered_parallel_map(function, items, threads=1):
    """Apply a function to every item, possibly on a pool of threads.

    Results are returned in the order of the items whatever the number of
    threads, so that downstream output does not depend on scheduling.

    Args:
        function (callable): Function of one argument.
        items (iterable): Items to process.
        threads (int): Number of worker threads; values lower than 2 run the
        map in the calling thread.

    Returns:
        list: The results, in the order of the items.
    """
    items = list(items)
    if threads is None or threads < 2 or len(items) < 2:
        return [function(item) for item in items]
    with ThreadPoolExecutor(min(threads, len(items))) as pool:
        return list(pool.map(function, items))
