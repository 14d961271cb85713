from apps.ratlinalg.exceptions import PJJError


class NotInDomain(PJJError):
    """A cochain handed to δ^n lies outside the constrained space A^n."""
