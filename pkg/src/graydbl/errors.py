class GrayDblError(Exception):
    pass


class StructuralError(GrayDblError):
    """Malformed input: bad indices, missing maps, frame mismatches."""


class ResourceError(GrayDblError):
    """An enumeration or realization budget was exhausted."""


class UnrealizedError(GrayDblError):
    """A tensor product needed by a construction could not be realized."""
