from apps.ratlinalg.exceptions import PJJError


class MembershipFailed(PJJError):
    """A bracket landed outside the space the closure table promises."""


class ConditionMembershipMismatch(PJJError):
    """The anticommutator criterion disagreed with direct membership."""
