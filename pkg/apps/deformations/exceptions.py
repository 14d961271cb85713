from apps.ratlinalg.exceptions import PJJError


class NotGenerating(PJJError):
    """A bilinear map that does not generate a linear deformation."""


class NotCocycle(PJJError):
    pass


class NotNijenhuis(PJJError):
    pass


class PreconditionNotNilpotent(PJJError):
    pass


class PreconditionNotIdempotent(PJJError):
    pass
