"""Exception types shared across the package."""


class HopfTaftError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameters(HopfTaftError, ValueError):
    """User-supplied parameters violate an operation's preconditions."""


class NotPrime(InvalidParameters):
    def __init__(self, p: int):
        super().__init__(f"{p} is not prime")
        self.p = p


class NoPrimitiveRoot(InvalidParameters):
    def __init__(self, m: int, field_name: str = ""):
        where = f" in {field_name}" if field_name else ""
        super().__init__(f"no primitive {m}-th root of unity{where}")
        self.m = m


class BadRoot(InvalidParameters):
    """q is not a primitive m-th root of unity."""


class NotARoot(InvalidParameters):
    """omega does not satisfy omega^n = 1."""


class BudgetExceeded(HopfTaftError):
    def __init__(self, needed: int, budget: int, what: str = "search"):
        super().__init__(f"{what} needs {needed} candidates, budget is {budget}")
        self.needed = needed
        self.budget = budget


class InvalidMatchedPair(HopfTaftError):
    def __init__(self, report):
        super().__init__(f"matched pair axioms fail: {report.first_failure()}")
        self.report = report


class NotModuleAlgebra(HopfTaftError):
    def __init__(self, report):
        super().__init__(f"action is not a module algebra/coalgebra: {report.first_failure()}")
        self.report = report


class SymmetryFails(HopfTaftError):
    def __init__(self, report):
        super().__init__(f"smash symmetry condition fails: {report.first_failure()}")
        self.report = report


class NotIsomorphic(HopfTaftError):
    pass
