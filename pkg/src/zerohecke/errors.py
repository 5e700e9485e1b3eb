"""Shared exception types."""


class SizeGuardError(ValueError):
    """A computation was refused because its size guard tripped.

    Raised instead of silently attempting a computation whose cost grows like
    k! * Stir(n,k); pass the explicit override flag to proceed anyway.
    """


class TheoremViolation(RuntimeError):
    """An exact check that is guaranteed by a proved statement failed.

    This is never patched over: a singular solve, a basis defect, or a
    mismatched invariant raises so the discrepancy is visible.
    """
