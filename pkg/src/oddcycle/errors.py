"""Exception types shared across the package.

The CLI maps these onto exit codes: InputError (and subclasses) exit 2,
InternalInconsistency exit 3, certificate violations exit 1.
"""


class InputError(ValueError):
    """An operation was handed an input that violates its preconditions."""


class ParseError(InputError):
    """Malformed colouring or certificate file. Carries the offending line."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoMonochromaticOddCycle(InputError):
    """The colouring contains no monochromatic odd cycle at all.

    Legitimate whenever n <= 2^q: every colour class can then be bipartite.
    """


class RetryExhausted(RuntimeError):
    """The randomized selector ran out of retries before reaching its target."""


class PipelineAssertError(RuntimeError):
    """A pipeline bound assert failed and the caller asked for fallback='fail'.

    ``failed`` lists the names of the asserts that did not hold.
    """

    def __init__(self, message, failed=()):
        self.failed = tuple(failed)
        super().__init__(message)


class InternalInconsistency(RuntimeError):
    """A self-check that is provably unreachable for well-formed inputs fired.

    The pipelines turn their proof-by-contradiction endgames into runtime
    checks; reaching one means the input was corrupted (e.g. an incomplete
    colouring) or there is a bug. ``witness`` carries the offending objects.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
