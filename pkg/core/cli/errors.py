class ProblemFileError(ValueError):
    """Raised when a problem file cannot be parsed or does not describe a valid problem.

    `field` is the dotted path of the offending entry (e.g. "mu.2"), empty when
    the problem is not tied to one field.
    """

    def __init__(self, message: str, field: str = ""):
        super().__init__(message)
        self.field = field
