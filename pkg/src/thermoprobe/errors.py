"""Exception types raised by thermoprobe."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class InadmissibleMeasurementError(ValueError):
    """A flux measurement cannot be inverted into a positive, finite conductivity.

    Carries the flux asymptote so callers can report how far off the
    measurement was.
    """

    def __init__(self, message, measured_flux, q_asymptote):
        super().__init__(message)
        self.measured_flux = measured_flux
        self.q_asymptote = q_asymptote


class AsymptoteExceededError(DomainError):
    """Flux at or beyond the vertical asymptote of the elasticity function."""

    def __init__(self, message, q_asymptote):
        super().__init__(message)
        self.q_asymptote = q_asymptote


class MaterialNotFoundError(KeyError):
    pass


class MaterialFileError(ValueError):
    """Malformed or invalid materials file.

    ``line`` is the 1-based line number of the offending row (None when the
    problem is the file as a whole, e.g. a missing header column).
    """

    def __init__(self, message, path=None, line=None, field=None):
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.path = path
        self.line = line
        self.field = field
