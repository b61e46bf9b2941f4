"""Exception hierarchy shared by the library and the CLI."""


class KUniformError(Exception):
    """Base class for all errors raised by this package."""


class PauliParseError(KUniformError, ValueError):
    pass


class GraphError(KUniformError, ValueError):
    """Invalid graph structure, vertex index or family parameters."""


class GraphFormatError(GraphError):
    """Malformed graph file."""


class BudgetExceeded(KUniformError):
    """Subset enumeration would exceed the allowed budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} subsets but budget is {budget}; "
            "raise the budget to continue"
        )


class CapExceeded(KUniformError):
    """Dense simulation requested for more qubits than the cap allows."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"dense oracle limited to {cap} qubits, graph has {n}")
