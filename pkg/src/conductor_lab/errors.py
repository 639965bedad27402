"""Exception types shared across the package.

Each engine error carries a stable ``code`` used by the CLI.
"""


class ConductorLabError(Exception):
    code = "engine_error"


class EmptyGenerators(ConductorLabError, ValueError):
    code = "empty_generators"


class NotCoprime(ConductorLabError, ValueError):
    code = "not_coprime"


class NonPositiveGenerator(ConductorLabError, ValueError):
    code = "non_positive_generator"


class NotAMember(ConductorLabError, ValueError):
    code = "not_a_member"


class TruncationTooSmall(ConductorLabError):
    code = "truncation_too_small"


class UnknownPreset(ConductorLabError, KeyError):
    code = "unknown_preset"

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown preset"


class InvalidParametrization(ConductorLabError, ValueError):
    code = "invalid_parametrization"


class MalformedCurve(ConductorLabError, ValueError):
    code = "malformed_curve"


class InternalInconsistency(ConductorLabError):
    """Independent witnesses disagreed; always an engine bug."""

    code = "internal_inconsistency"


class PolarPartSyntaxError(ConductorLabError, ValueError):
    code = "polar_part_syntax"
