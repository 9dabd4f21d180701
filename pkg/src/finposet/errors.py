"""Exception types shared across the package."""


class PosetError(Exception):
    """Base class for all domain errors raised by this package."""


class CycleError(PosetError):
    """Relation closure violates antisymmetry (the input contains a cycle)."""


class UnknownElement(PosetError):
    """An operation referenced an element id that is not in the poset."""


class EmptyPoset(PosetError):
    """The operation needs at least one element."""


class TooLarge(PosetError):
    """Input exceeds the guard size of an exhaustive operation."""


class TooWide(PosetError):
    """Requested embedding width exceeds the search guard."""


class OutOfRange(PosetError):
    """Parameter outside the admissible range."""


class InvalidWitness(PosetError):
    """A beat-point witness does not hold in the given poset."""


class InvalidEmbedding(PosetError):
    """An embedding fails verification or belongs to the wrong poset."""


class UnknownCheck(PosetError):
    """A census run was asked for a property suite that does not exist."""


class FormatError(PosetError):
    """Malformed poset or embedding text."""
