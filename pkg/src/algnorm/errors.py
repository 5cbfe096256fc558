"""Exception types shared across the package."""


class AlgnormError(Exception):
    pass


class ParseError(AlgnormError):
    pass


class IndexOutOfRange(AlgnormError):
    pass


class MalformedTable(ParseError):
    pass


class NotAssociative(AlgnormError):
    def __init__(self, witness, message=None):
        self.witness = witness  # triple of basis indices (i, j, l)
        super().__init__(message or f"associativity fails at basis triple {witness}")


class InfiniteCodimension(AlgnormError):
    pass


class EmptyComplement(AlgnormError):
    pass


class FiniteCodimension(AlgnormError):
    pass


class BoundedFunctional(AlgnormError):
    pass


class UnknownEntry(AlgnormError):
    pass


class FlagError(AlgnormError):
    pass


class InternalInconsistency(AlgnormError):
    pass
