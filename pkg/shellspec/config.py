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


"""config

The config module parses run configurations: flat plain-text files of
`key = value` assignments with dotted keys, one per line. Lines starting with
'#' or ';' are comments and blank lines are ignored. Values are numbers,
comma-separated lists of numbers, bare words, or, for couplings, expressions in
the arc length `s` built from numeric literals, `pi`, `ell` (the length of the
curve), `+ - * / **`, `cos(...)` and `sin(...)`.

Example::

    curve.kind = star
    curve.radius = 1
    couplings.eta = 0.5 + 0.1 * cos(2 * pi * s / ell)
    mass = 1
    nodes = 128
"""


# IMPORT

import ast
import configparser
import operator

import numpy as np

from shellspec.approximation.field_checks import DEFAULT_FIELD_EPSILONS
from shellspec.approximation.profile import profile_by_name
from shellspec.approximation.radial_shell_problem import DEFAULT_EPSILONS
from shellspec.approximation.radial_shell_problem import DEFAULT_STUDY_CHANNELS
from shellspec.couplings import Couplings
from shellspec.couplings import EXCEPTIONAL_TOLERANCE
from shellspec.geometry import CircleCurve
from shellspec.geometry import CurveKind
from shellspec.geometry import EllipseCurve
from shellspec.geometry import StarCurve
from shellspec.utils.shellspec_exceptions import ShellSpecException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidConfigException


# CONSTANTS

_SECTION = 'run'

_FLOAT = 'float'
_INT = 'int'
_WORD = 'word'
_LIST = 'list'
_EXPRESSION = 'expression'

PERIODICITY_TOLERANCE = 1e-10
"""Largest mismatch of a coupling expression between s = 0 and s = ell."""

KEYS = {
    'curve.kind': (_WORD, 'circle'),
    'curve.radius': (_FLOAT, 1.0),
    'curve.a': (_FLOAT, 2.0),
    'curve.b': (_FLOAT, 1.0),
    'curve.amplitude': (_FLOAT, 0.2),
    'curve.lobes': (_INT, 5),
    'couplings.eta': (_EXPRESSION, '0'),
    'couplings.tau': (_EXPRESSION, '0'),
    'couplings.lambda': (_EXPRESSION, '0'),
    'couplings.omega': (_EXPRESSION, '0'),
    'mass': (_FLOAT, 1.0),
    'nodes': (_INT, 128),
    'grid.points': (_INT, 200),
    'grid.margin': (_FLOAT, None),
    'scan.threshold': (_FLOAT, 1e-4),
    'channels.max': (_INT, 40),
    'epsilon.sequence': (_LIST, DEFAULT_EPSILONS),
    'approx.channels': (_INT, DEFAULT_STUDY_CHANNELS),
    'profile': (_WORD, 'box'),
    'zigzag.radius': (_FLOAT, 1.0),
    'zigzag.count': (_INT, 5),
    'fields.lambda': (_FLOAT, 1.0),
    'fields.epsilon': (_LIST, DEFAULT_FIELD_EPSILONS),
    'resolvent.z_real': (_FLOAT, 0.2),
    'resolvent.z_imag': (_FLOAT, 0.1),
    'resolvent.source_x': (_FLOAT, 0.0),
    'resolvent.source_y': (_FLOAT, 0.0),
    'resolvent.source_radius': (_FLOAT, 0.3),
    'tolerance.exceptional': (_FLOAT, EXCEPTIONAL_TOLERANCE)
}
"""Recognized keys with their types and defaults; a default of None means
that the value is derived from other keys."""

_BINARY_OPERATORS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow
}

_UNARY_OPERATORS = {
    ast.UAdd: operator.pos,
    ast.USub: operator.neg
}

_FUNCTIONS = {
    'cos': np.cos,
    'sin': np.sin
}


# CLASSES

class RunConfig(object):
    """Validated run configuration."""

    def __init__(self, values=None):
        """Constructor.

        Args:
            values (dict): Raw string values by key; missing keys take their
            defaults.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidConfigException`
            if a key is unknown or a value is malformed.
        """
        self._raw = dict(values or {})
        for key in self._raw:
            if key not in KEYS:
                raise ShellSpecInvalidConfigException(
                    'Unknown configuration key "%s".' % key)
        self._values = {}
        for key, (kind, default) in KEYS.items():
            if key in self._raw:
                self._values[key] = _convert(key, kind, self._raw[key])
            else:
                self._values[key] = default
        self._validate()

    @classmethod
    def from_string(cls, text):
        """Parse a configuration from text.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidConfigException`
            if the text does not follow the grammar.
        """
        parser = configparser.ConfigParser(delimiters=('=',),
                                           comment_prefixes=('#', ';'),
                                           inline_comment_prefixes=('#', ';'),
                                           interpolation=None)
        try:
            parser.read_string('[%s]\n%s' % (_SECTION, text))
        except configparser.DuplicateOptionError as e:
            raise ShellSpecInvalidConfigException(
                'Configuration key "%s" is assigned twice.' % e.option)
        except configparser.Error as e:
            raise ShellSpecInvalidConfigException(
                'Malformed configuration: %s' % e.message.splitlines()[0])
        return cls(dict(parser.items(_SECTION)))

    @classmethod
    def from_file(cls, path):
        """Parse a configuration file.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidConfigException`
            if the file cannot be read or is malformed.
        """
        try:
            with open(path, 'r') as stream:
                text = stream.read()
        except (IOError, OSError) as e:
            raise ShellSpecInvalidConfigException(
                'Cannot read configuration "%s": %s' % (path, e.strerror))
        return cls.from_string(text)

    def get(self, key):
        """Get a converted value.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidConfigException`
            if the key is unknown.
        """
        if key not in KEYS:
            raise ShellSpecInvalidConfigException(
                'Unknown configuration key "%s".' % key)
        return self._values[key]

    def get_mass(self):
        return self._values['mass']

    def get_nodes(self):
        return self._values['nodes']

    def get_grid_points(self):
        return self._values['grid.points']

    def get_grid_margin(self):
        """Get the gap margin, 1e-3·|m| unless configured."""
        margin = self._values['grid.margin']
        return 1e-3 * abs(self.get_mass()) if margin is None else margin

    def get_epsilons(self):
        return list(self._values['epsilon.sequence'])

    def get_profile(self):
        """Get the configured transverse profile.

        Returns:
            :class:`shellspec.approximation.profile.Profile`: The profile.
        """
        return profile_by_name(self._values['profile'])

    def get_curve(self):
        """Build the configured curve.

        Returns:
            :class:`shellspec.geometry.Curve`: The curve.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidConfigException`
            if the curve parameters are invalid.
        """
        kind = self._values['curve.kind']
        try:
            if kind == CurveKind.CIRCLE.value:
                return CircleCurve(self._values['curve.radius'])
            if kind == CurveKind.ELLIPSE.value:
                return EllipseCurve(self._values['curve.a'],
                                    self._values['curve.b'])
            return StarCurve(self._values['curve.radius'],
                             self._values['curve.amplitude'],
                             self._values['curve.lobes'])
        except ShellSpecException as e:
            raise ShellSpecInvalidConfigException(
                'Invalid curve configuration: %s' % str(e))

    def get_couplings(self, curve):
        """Build the configured couplings on a curve.

        Args:
            curve (:class:`shellspec.geometry.Curve`): The curve; its length
            binds `ell` and the period of function-valued couplings.

        Returns:
            :class:`shellspec.couplings.Couplings`: The couplings.
        """
        length = curve.get_length()
        values = {}
        for name in ('eta', 'tau', 'lambda', 'omega'):
            key = 'couplings.' + name
            values[name] = _bind(key, self._values[key], length)
        return Couplings.from_config_values(values, length)

    def _validate(self):
        kind = self._values['curve.kind']
        if kind not in (CurveKind.CIRCLE.value, CurveKind.ELLIPSE.value,
                        CurveKind.STAR.value):
            raise ShellSpecInvalidConfigException(
                'Configuration key "curve.kind" must be circle, ellipse or '
                'star, got "%s".' % kind)
        for key in ('nodes', 'grid.points', 'zigzag.count', 'channels.max',
                    'approx.channels'):
            if self._values[key] < 0 or (key not in ('channels.max',
                                                     'approx.channels')
                                         and self._values[key] == 0):
                raise ShellSpecInvalidConfigException(
                    'Configuration key "%s" must be positive.' % key)
        if self._values['nodes'] % 2:
            raise ShellSpecInvalidConfigException(
                'Configuration key "nodes" must be even.')
        for key in ('epsilon.sequence', 'fields.epsilon'):
            widths = self._values[key]
            if not widths or any(w <= 0 for w in widths):
                raise ShellSpecInvalidConfigException(
                    'Configuration key "%s" needs positive widths.' % key)
        try:
            profile_by_name(self._values['profile'])
        except ShellSpecException as e:
            raise ShellSpecInvalidConfigException(
                'Configuration key "profile": %s' % str(e))


# FUNCTIONS

def parse_expression(text):
    """Parse a coupling expression into its syntax tree.

    Args:
        text (str): Expression.

    Returns:
        :class:`ast.Expression`: The validated tree.

    Raises:
        :exc:`ValueError` if the expression uses unsupported syntax.
    """
    try:
        tree = ast.parse(text.strip(), mode='eval')
    except SyntaxError:
        raise ValueError('not an expression')
    for node in ast.walk(tree):
        if isinstance(node, (ast.Expression, ast.Load)):
            continue
        if isinstance(node, ast.BinOp):
            if type(node.op) not in _BINARY_OPERATORS:
                raise ValueError('unsupported operator')
        elif isinstance(node, ast.UnaryOp):
            if type(node.op) not in _UNARY_OPERATORS:
                raise ValueError('unsupported operator')
        elif isinstance(node, ast.Constant):
            if isinstance(node.value, bool) \
                or not isinstance(node.value, (int, float)):
                raise ValueError('unsupported literal')
        elif isinstance(node, ast.Name):
            if node.id not in ('pi', 'ell', 's') and node.id not in _FUNCTIONS:
                raise ValueError('unknown name "%s"' % node.id)
        elif isinstance(node, ast.Call):
            if not isinstance(node.func, ast.Name) \
                or node.func.id not in _FUNCTIONS \
                or len(node.args) != 1 or node.keywords:
                raise ValueError('unsupported call')
        else:
            raise ValueError('unsupported syntax')
    return tree


def evaluate_expression(tree, s, length):
    """Evaluate a parsed coupling expression.

    Args:
        tree (:class:`ast.Expression`): Tree from :func:`parse_expression`.
        s (:class:`numpy.ndarray`): Arc lengths.
        length (float): Length of the curve.

    Returns:
        The value, with the shape of s when the expression depends on s.
    """
    names = {'pi': np.pi, 'ell': length, 's': s}

    def visit(node):
        if isinstance(node, ast.Expression):
            return visit(node.body)
        if isinstance(node, ast.BinOp):
            return _BINARY_OPERATORS[type(node.op)](visit(node.left),
                                                    visit(node.right))
        if isinstance(node, ast.UnaryOp):
            return _UNARY_OPERATORS[type(node.op)](visit(node.operand))
        if isinstance(node, ast.Constant):
            return float(node.value)
        if isinstance(node, ast.Name):
            return names[node.id]
        return _FUNCTIONS[node.func.id](visit(node.args[0]))

    return visit(tree)


# UTILITY FUNCTIONS

def _convert(key, kind, raw):
    text = str(raw).strip()
    try:
        if kind == _FLOAT:
            return float(text)
        if kind == _INT:
            value = float(text)
            if value != int(value):
                raise ValueError('not an integer')
            return int(value)
        if kind == _LIST:
            return tuple(float(item) for item in text.split(',')
                         if item.strip())
        if kind == _EXPRESSION:
            parse_expression(text)
            return text
        if not text or not text.replace('_', '').replace('-', '').isalnum():
            raise ValueError('not a word')
        return text.lower()
    except (ValueError, OverflowError) as e:
        raise ShellSpecInvalidConfigException(
            'Configuration key "%s" has invalid value "%s" (%s).'
            % (key, text, e))


def _bind(key, text, length):
    tree = parse_expression(text)
    uses_s = any(isinstance(node, ast.Name) and node.id == 's'
                 for node in ast.walk(tree))
    if not uses_s:
        try:
            value = evaluate_expression(tree, 0.0, length)
        except (ZeroDivisionError, OverflowError):
            value = float('nan')
        if not np.isfinite(value):
            raise ShellSpecInvalidConfigException(
                'Configuration key "%s" does not evaluate to a finite number.'
                % key)
        return float(value)

    def coupling(s):
        return evaluate_expression(tree, np.asarray(s, dtype=float), length) \
            + np.zeros(np.shape(s))

    try:
        ends = coupling(np.array([0.0, length]))
    except (ZeroDivisionError, FloatingPointError):
        ends = np.array([np.nan, np.nan])
    if not np.all(np.isfinite(ends)) \
        or abs(ends[1] - ends[0]) >= PERIODICITY_TOLERANCE:
        raise ShellSpecInvalidConfigException(
            'Configuration key "%s" is not periodic along the curve: its '
            'values at s = 0 and s = ell differ.' % key)
    return coupling
