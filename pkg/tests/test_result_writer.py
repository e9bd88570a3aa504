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


import csv
import json
import logging

import numpy as np
import pytest

from shellspec.utils.result_writer import ResultWriter
from shellspec.utils.result_writer import format_value

logger = logging.getLogger(__name__)


@pytest.mark.parametrize('value, expected', [
    (True, 'true'),
    (np.bool_(False), 'false'),
    (7, '7'),
    (np.int64(-3), '-3'),
    (0.1, '0.1'),
    (1.0 / 3.0, '0.333333333333333'),
    (np.float64(2.5e-20), '2.5e-20'),
    (complex(1.0, -2.0), '1-2j'),
    (float('nan'), 'nan'),
    ('circle', 'circle'),
])
def test_format_value(value, expected):
    assert format_value(value) == expected


def test_csv_output(tmp_path):
    path = str(tmp_path / 'table.csv')
    with ResultWriter(path) as writer:
        assert writer.get_path() == path
        writer.write_header(('z', 'channel'))
        writer.write_rows([(0.25, 1), (-np.pi, 0)])
    with open(path) as stream:
        rows = list(csv.reader(stream))
    assert rows == [['z', 'channel'], ['0.25', '1'],
                    ['-3.14159265358979', '0']]


def test_json_records(tmp_path):
    path = str(tmp_path / 'records.jsonl')
    with ResultWriter(path) as writer:
        writer.write_record({'d': np.float64(1.0 / 3.0), 'flags': 'critical',
                             'range': np.array([1, 2]),
                             'z': complex(0.5, 1.0), 'confining': np.bool_(True)})
        writer.write_record({'n': np.int32(4)})
    with open(path) as stream:
        records = [json.loads(line) for line in stream]
    assert records[0] == {'confining': True, 'd': 0.333333333333333,
                          'flags': 'critical', 'range': [1, 2],
                          'z': [0.5, 1.0]}
    assert records[1] == {'n': 4}


def test_standard_output(capsys):
    writer = ResultWriter()
    writer.write_row((1.5, 'box'))
    writer.close()
    assert capsys.readouterr().out == '1.5,box\n'
