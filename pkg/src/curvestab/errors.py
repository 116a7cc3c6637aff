"""Exception hierarchy shared across the package."""

from __future__ import annotations


class CurvestabError(Exception):
    """Base class for all domain errors raised by this package."""


class MixedRadicalError(CurvestabError):
    """Two exact scalars over different irrational radicals were combined."""


class ZeroClassError(CurvestabError):
    """An operation that needs a nonzero lattice class received (0, 0)."""


class InvalidClassError(CurvestabError):
    """A class violates a precondition (non-semistable factor, bad rank)."""


class DegenerateClassError(CurvestabError):
    """Phase query for a charge-zero class at a point without a t-label."""


class MixedGenusError(CurvestabError):
    """Two arguments that must share a base curve have different genus."""


class BoundaryActionError(CurvestabError):
    """Full lifted-group action applied to a boundary point."""


class ChartDomainError(CurvestabError):
    """Chart input outside GL+(2,R) or its image C^* x H."""


class WindingAmbiguityError(CurvestabError):
    """Winding number could not be resolved at maximal precision."""


class GenusZeroError(CurvestabError):
    """Operation not defined over the rational curve."""


class MissingPhaseLabelError(CurvestabError):
    """Charge-zero heart classes exist but the point carries no t-label."""
