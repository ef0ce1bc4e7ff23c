"""Exception types. User-input problems derive from ValueError."""


class KleinThetaError(Exception):
    pass


class InvalidTypeError(KleinThetaError, ValueError):
    """A (g, n, a) triple violating the Klein surface constraints."""


class EmptyRealLocusError(KleinThetaError, ValueError):
    """The real locus is empty, so Stiefel-Whitney data is undefined."""


class NotRealError(KleinThetaError, ValueError):
    """A form or datum that is not invariant under the real structure."""


class SearchExhaustedError(KleinThetaError, RuntimeError):
    pass


class IncompatibleStructureError(KleinThetaError, ValueError):
    """An alternating form that is not of type (1,1) for the complex structure."""


class ConvergenceError(KleinThetaError, RuntimeError):
    pass


class InconclusiveProbeError(KleinThetaError, RuntimeError):
    pass


class VerificationError(KleinThetaError, AssertionError):
    """An internal consistency cross-check failed."""
