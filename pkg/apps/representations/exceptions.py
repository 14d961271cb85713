from apps.ratlinalg.exceptions import PJJError


class NotRepresentation(PJJError):
    pass


class NotIdeal(PJJError):
    pass


class HypothesisHpViolated(PJJError):
    """The right actions of some basis pair do not commute."""

    def __init__(self, pair, message=None):
        self.pair = pair
        super().__init__(message or f'mu(e{pair[0]}) and mu(e{pair[1]}) do not commute')
