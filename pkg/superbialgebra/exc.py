class SuperalgebraError(Exception):
    '''Base class of every error raised by this package'''
    pass


class DimensionMismatch(SuperalgebraError, ValueError):
    '''Raised when two graded objects cannot be combined because an axis
    has the wrong size'''

    def __init__(self, axis, expected, got):
        self.axis = axis
        self.expected = expected
        self.got = got
        super(DimensionMismatch, self).__init__(
            'Dimension mismatch on {0}: expected {1}, got {2}'.format(
                axis, expected, got))


class ParityError(SuperalgebraError, ValueError):
    '''Raised when a homogeneous element was required'''
    pass


class SingularMatrix(SuperalgebraError, ValueError):
    '''Raised when a change of basis is not invertible'''

    def __init__(self, matrix, message=None):
        self.matrix = matrix
        super(SingularMatrix, self).__init__(
            message or 'Matrix is singular: {0}'.format(matrix))


class CannotExponentiate(SuperalgebraError, ValueError):
    '''Raised when a matrix lies outside the classes we exponentiate
    exactly'''

    def __init__(self, matrix):
        self.matrix = matrix
        super(CannotExponentiate, self).__init__(
            'Cannot exponentiate exactly: matrix is neither diagonal, '
            'nilpotent, nor a commuting sum of the two')


class UnknownLabel(SuperalgebraError, KeyError):
    '''Raised when a catalog or fixture label is not known'''

    def __init__(self, label, valid):
        self.label = label
        self.valid = sorted(valid)
        super(UnknownLabel, self).__init__(label)

    def __str__(self):
        return 'Unknown label {0!r}. Valid labels: {1}'.format(
            self.label, ', '.join(self.valid))


class ParameterOutOfRange(SuperalgebraError, ValueError):
    '''Raised when a catalog parameter violates its printed constraint'''

    def __init__(self, label, name, value, constraint):
        self.label = label
        self.name = name
        self.value = value
        self.constraint = constraint
        super(ParameterOutOfRange, self).__init__(
            '{0}: parameter {1}={2} violates {3}'.format(
                label, name, value, constraint))


class MissingParameter(SuperalgebraError, ValueError):
    '''Raised when a parameterized catalog entry is loaded without a
    value for one of its parameters and symbols were not requested'''

    def __init__(self, label, name):
        self.label = label
        self.name = name
        super(MissingParameter, self).__init__(
            '{0} needs a value for parameter {1}'.format(label, name))


class MixedJacobiViolation(SuperalgebraError, ValueError):
    '''Raised when a pair of algebras is not a Lie superbialgebra'''

    def __init__(self, g, g_dual, violations):
        self.g = g
        self.g_dual = g_dual
        self.violations = violations
        super(MixedJacobiViolation, self).__init__(
            '({0}, {1}) violates the mixed super Jacobi identity in {2} '
            'components'.format(g.name, g_dual.name, len(violations)))


class NotSkewSymmetric(SuperalgebraError, ValueError):
    '''Raised when an r-matrix with a symmetric part reaches an operation
    defined only for skew r'''
    pass


class UnknownProposition(SuperalgebraError, KeyError):
    '''Raised when a quantization preset is not known'''

    def __init__(self, prop, valid):
        self.prop = prop
        self.valid = sorted(valid)
        super(UnknownProposition, self).__init__(prop)

    def __str__(self):
        return 'Unknown proposition {0!r}. Valid: {1}'.format(
            self.prop, ', '.join(self.valid))


class UsageError(SuperalgebraError):
    '''Raised when the command line cannot be interpreted'''
    pass


class NotInvertible(SuperalgebraError, ValueError):
    '''Raised when an element has no inverse in the Laurent PBW basis'''

    def __init__(self, element):
        self.element = element
        super(NotInvertible, self).__init__(
            '{0} is not a unit: its body is not a single monomial'.format(
                element))
