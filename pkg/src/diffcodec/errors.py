"""Exception types shared across the package."""


class DiffcodecError(Exception):
    """Base class for all package-specific failures."""


class SpectrumExhaustedError(DiffcodecError):
    """An operation asked for spectral content beyond the space's lambda cap."""


class InsufficientSpectrumError(DiffcodecError):
    """A truncated series could not be certified below the requested tail bound."""


class CertificationError(DiffcodecError):
    """A quadrature or MZ certificate failed, or an uncertified measure was used."""


class QuadratureMismatchError(DiffcodecError):
    """Sampled data was paired with a quadrature it was not sampled on."""


class CorruptStreamError(DiffcodecError):
    """A bit stream failed magic, structural, or CRC validation."""


class UnknownNodeSetError(DiffcodecError):
    """A stream's node-set hash does not match any resolvable quadrature."""


class ConfigError(DiffcodecError):
    """A run configuration failed validation."""


class CsvParseError(DiffcodecError):
    """A CSV ingest failed; carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
