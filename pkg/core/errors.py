from typing import Iterable


class HookCalcError(ValueError):
    """Base class for every domain error raised by the engine"""


class PartitionError(HookCalcError):
    pass


class BoundaryWordError(HookCalcError):
    pass


class DecompositionError(HookCalcError):
    pass


class ClassSpecError(HookCalcError):
    pass


class SeriesError(HookCalcError):
    pass


class RingMismatchError(SeriesError):
    pass


class OrderMismatchError(SeriesError):
    pass


class NotInvertibleError(SeriesError):
    pass


class OrderOutOfRangeError(SeriesError):
    pass


class CatalogError(HookCalcError):
    pass


class UnknownIdentityError(CatalogError):
    def __init__(self, identity_id: str, known: Iterable[str]):
        self.identity_id = identity_id
        self.known = sorted(known)
        super().__init__(
            f"Unknown check '{identity_id}'. Known checks: {', '.join(self.known)}"
        )


class InvalidParamsError(CatalogError):
    pass
