from apps.ratlinalg.exceptions import PJJError


class NotPreJJ(PJJError):
    pass


class NotJJ(PJJError):
    pass


class NotCommAssoc(PJJError):
    pass


class NotMorphism(PJJError):
    pass
