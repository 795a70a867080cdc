class ContractViolation(RuntimeError):
    """A constructed word failed its own verification."""


class NotInOrbit(ValueError):
    pass


class UnsupportedDegree(ValueError):
    pass


class MaxRepairExceeded(RuntimeError):
    pass
