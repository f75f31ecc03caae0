class RingLabError(Exception):
    """Base class for every error raised by ringlab."""


class AxiomViolation(RingLabError):
    """Raw tables fail a ring axiom; ``witness`` is the least failing tuple."""

    KINDS = ("abelian-group", "identity", "associativity", "distributivity")

    def __init__(self, kind, witness, detail=""):
        if kind not in self.KINDS:
            raise ValueError(f"unknown axiom kind {kind!r}")
        self.kind = kind
        self.witness = tuple(witness)
        self.detail = detail
        msg = f"{kind} violated at {self.witness}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class BoundExceeded(RingLabError):
    pass


class NotAnIdeal(RingLabError):
    pass


class RingMismatch(RingLabError):
    pass


class ParseError(RingLabError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class SemanticError(RingLabError):
    """A well-formed expression that cannot be built."""


class IllFormedExpr(SemanticError):
    pass


class CentralityViolation(SemanticError):
    pass


class NotIdempotent(SemanticError):
    pass


class NotHomomorphism(SemanticError):
    pass


class BadCharacteristic(SemanticError):
    pass
