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


"""result_writer

The result_writer module writes machine-readable results: CSV tables and
JSON-lines records, with every float printed with 15 significant digits.
"""


# IMPORT

import csv
import json
import sys

import numpy as np

from shellspec.utils.python_utils import lock


# CONSTANTS

FLOAT_FORMAT = '%.15g'
"""Format of floating-point output."""


# CLASSES

class ResultWriter(object):
    """Single writer of a result stream, a file or the standard output."""

    def __init__(self, path=None):
        """Constructor.

        Args:
            path (str): Output file; standard output when None or '-'.
        """
        self._path = path
        self._owned = path is not None and path != '-'
        self._stream = open(path, 'w', newline='') if self._owned \
            else sys.stdout
        self._csv = csv.writer(self._stream, lineterminator='\n')

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def get_path(self):
        return self._path

    def write_header(self, columns):
        """Write the header row of a CSV table."""
        with lock(self):
            self._csv.writerow(list(columns))

    def write_row(self, values):
        """Write one CSV row.

        Args:
            values (iterable): Values; floats are formatted with
            :data:`FLOAT_FORMAT`, complex numbers as 'a+bj'.
        """
        with lock(self):
            self._csv.writerow([format_value(v) for v in values])

    def write_rows(self, rows):
        for row in rows:
            self.write_row(row)

    def write_record(self, record):
        """Write one JSON-lines record.

        Args:
            record (dict): Values; numbers are rounded to 15 significant
            digits.
        """
        with lock(self):
            self._stream.write(json.dumps(_jsonable(record), sort_keys=True))
            self._stream.write('\n')

    def close(self):
        with lock(self):
            self._stream.flush()
            if self._owned:
                self._stream.close()


# FUNCTIONS

def format_value(value):
    """Format a value for CSV output.

    Args:
        value: Number or string.

    Returns:
        str: The formatted value.
    """
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return '%d' % value
    if isinstance(value, (float, np.floating)):
        return FLOAT_FORMAT % value
    if isinstance(value, (complex, np.complexfloating)):
        return (FLOAT_FORMAT + '%+.15gj') % (value.real, value.imag)
    return str(value)


# UTILITY FUNCTIONS

def _jsonable(value):
    if isinstance(value, dict):
        return dict((str(k), _jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(FLOAT_FORMAT % value)
    if isinstance(value, (complex, np.complexfloating)):
        return [float(FLOAT_FORMAT % value.real),
                float(FLOAT_FORMAT % value.imag)]
    return value
