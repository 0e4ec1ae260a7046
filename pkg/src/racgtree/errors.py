class GraphError(ValueError):
    """Invalid graph input or a precondition on the graph was violated."""


class GraphParseError(GraphError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class InternalInconsistency(AssertionError):
    """A structural fact that the decision procedure guarantees did not hold.

    ``claim`` names the fact that failed; seeing this means the conditions
    feeding the construction were not actually verified.
    """

    def __init__(self, claim, detail=""):
        self.claim = claim
        self.detail = detail
        super().__init__(f"{claim}: {detail}" if detail else claim)


class BoundExceeded(RuntimeError):
    def __init__(self, bound, witness=None):
        self.bound = bound
        self.witness = witness
        super().__init__(f"induced cycle longer than {bound} found")


class ResourceBoundExceeded(RuntimeError):
    pass


class UnknownGenerator(KeyError):
    pass
