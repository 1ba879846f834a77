"""Exception types raised by the quaternion routines."""


class QuaternionError(ValueError):
    """Base class for domain errors in this package."""


class ZeroQuaternion(QuaternionError, ZeroDivisionError):
    pass


class NotImaginary(QuaternionError):
    pass


class NotUnit(QuaternionError):
    pass


class NotInImage(QuaternionError):
    pass


class BadIndex(QuaternionError):
    pass


class BadAxis(QuaternionError):
    pass


class NotSmall(QuaternionError):
    pass


class BadParameter(QuaternionError):
    pass


class NotOnSphere(QuaternionError):
    pass


class ZeroPair(QuaternionError, ZeroDivisionError):
    pass


class AtPole(QuaternionError):
    pass


class BadCount(QuaternionError):
    pass
