"""Exception hierarchy.

Everything raised on purpose by this package derives from
:class:`EquimatError`.  Validation problems (bad input, a map that is not an
automorphism, ...) derive from :class:`ValidationError`; a failed theorem
check derives from :class:`TheoremViolation` and carries the first mismatch.
"""


class EquimatError(Exception):
    pass


class ValidationError(EquimatError, ValueError):
    pass


# perm_group
class DegreeMismatch(ValidationError):
    pass


class OrderCapExceeded(ValidationError):
    pass


# exact_linalg
class NotInSpan(EquimatError):
    """Signal raised by ``solve_in_span`` when ``b`` is not in the column span."""


# simplicial
class VertexOutOfRange(ValidationError):
    pass


class ElementNotInFace(ValidationError):
    pass


class NotAnAutomorphism(ValidationError):
    pass


# matroid
class ExchangeAxiomViolation(ValidationError):
    pass


class EmptyBasisList(ValidationError):
    pass


# poset_lattice
class NotSimple(ValidationError):
    pass


class NotALattice(ValidationError):
    pass


class NotACrosscut(ValidationError):
    pass


class NotComparable(ValidationError):
    pass


class ActionNotOrderPreserving(ValidationError):
    pass


# characters
class NotASubgroup(ValidationError):
    pass


class PartitionMismatch(ValidationError):
    pass


class NotACharacter(ValidationError):
    pass


class GroupMismatch(ValidationError):
    pass


# homology
class HomologyNotConcentrated(ValidationError):
    pass


class PreconditionFailed(ValidationError):
    pass


class TheoremViolation(EquimatError):
    """A verifier found two sides that should agree but do not.

    ``mismatch`` is a ``(class_index, degree)`` pair (or ``None``) and
    ``report`` the full comparison report built so far.
    """

    def __init__(self, message, mismatch=None, report=None):
        super().__init__(message)
        self.mismatch = mismatch
        self.report = report


class DualityViolation(TheoremViolation):
    pass


class CrosscutTheoremViolation(TheoremViolation):
    pass


class MainTheoremViolation(TheoremViolation):
    pass


class ArrangementTheoremViolation(TheoremViolation):
    pass


class CompleteGraphViolation(TheoremViolation):
    pass
