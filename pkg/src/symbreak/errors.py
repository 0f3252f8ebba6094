"""Exception types shared across the package."""


class SymbreakError(Exception):
    """Base class for all package-specific errors."""


class ParseError(SymbreakError, ValueError):
    """Malformed graph6 record. Carries the byte offset of the defect."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedSizeError(SymbreakError, ValueError):
    """Input exceeds the size range an operation supports."""


class FamilySpecError(SymbreakError, ValueError):
    """Invalid family kind or parameter."""


class DegreeError(SymbreakError, ValueError):
    """Permutations or colorings of mismatched degree combined."""


class GroupTooLargeError(SymbreakError, RuntimeError):
    """Automorphism group exceeds the element cap."""

    def __init__(self, cap):
        super().__init__(f"group exceeds element cap of {cap}")
        self.cap = cap


class BudgetExceededError(SymbreakError, RuntimeError):
    """A search ran out of its configured node or candidate budget."""


class NotDeterminingPairError(SymbreakError, ValueError):
    """A pair handed to the rule checker is not a determining set."""


class NotApplicableError(SymbreakError, ValueError):
    """Hypothesis of a conditional check does not hold for the input."""
