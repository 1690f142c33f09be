# -*- coding: utf-8 -*-


class NewtonBoundException(Exception):
    """ Base class for all newtonbound exceptions. """
    pass


class BadInput(NewtonBoundException):
    """ Invalid input, generally a user error. """

    def __init__(self, message, index=None, field=None):
        super(BadInput, self).__init__(message)
        self.index = index
        self.field = field


class ProfileConstraintError(BadInput):
    """ Curve profile violates d >= 2g+1 or g >= 0. """
    pass


class WindowError(BadInput):
    """ Gap window outside its admissible range. """
    pass


class LengthMismatch(BadInput):
    """ Sequences of different lengths were combined. """
    pass


class MonotonicityError(BadInput):
    """ A sequence is not monotone; index is the first offending 1-based index. """
    pass


class PlateauError(BadInput):
    """ The e-sequence is not constant on the plateau window. """
    pass


class ChainError(BadInput):
    """ Chain does not start at 1, end at N or increase strictly. """
    pass


class IndexDomainError(BadInput):
    """ Index outside the admissible set [2, s] U [t, N]. """
    pass


class DegenerateVertex(BadInput):
    """ Vertex requested at an index with e_i = 0. """
    pass


class CapViolation(BadInput):
    """ Dual coefficient exceeds the supplied cap. """
    pass


class NormError(BadInput):
    """ Norm list or inflation ratio unusable for certification. """
    pass


class ConfigError(BadInput):
    """ Invalid fuzz campaign configuration. """
    pass


class CapExceeded(NewtonBoundException):
    """ Exhaustive enumeration refused because the instance is over the size cap. """
    pass


class InvariantBreach(NewtonBoundException):
    """ An exact identity that must always hold did not. """
    pass


class ProofViolation(NewtonBoundException):
    """ The inequality or its tightness equality failed on an instance. """

    def __init__(self, message, document=None):
        super(ProofViolation, self).__init__(message)
        self.document = document
