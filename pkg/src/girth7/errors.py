"""Exception hierarchy shared by all girth7 modules."""


class Girth7Error(Exception):
    """Base class for every error raised by girth7."""


# field
class NonPrimeCharacteristic(Girth7Error, ValueError):
    pass


class NoIrreducibleFound(Girth7Error, RuntimeError):
    pass


class FieldMismatch(Girth7Error, ValueError):
    pass


class DivisionByZero(Girth7Error, ZeroDivisionError):
    pass


# projgeom
class IdenticalPoints(Girth7Error, ValueError):
    pass


class NotAGrid(Girth7Error, ValueError):
    pass


# incidence
class DuplicateEdge(Girth7Error, ValueError):
    pass


class UnknownVertex(Girth7Error, KeyError):
    pass


class SurgeryError(Girth7Error, ValueError):
    """Deficient vertices after a deletion do not match a matching plan."""


# matchings
class OddK(Girth7Error, ValueError):
    pass


class GridNotSquare(Girth7Error, ValueError):
    pass


class KTooSmall(Girth7Error, ValueError):
    pass


class OddLineLength(Girth7Error, ValueError):
    pass


# constructions
class InvalidParams(Girth7Error, ValueError):
    def __init__(self, predicate: str, detail: str = ""):
        self.predicate = predicate
        msg = predicate if not detail else f"{predicate}: {detail}"
        super().__init__(msg)


class KEqualsQUnsupported(Girth7Error, ValueError):
    pass


# verify
class CertificationFailed(Girth7Error):
    def __init__(self, claim: str, detail: str = ""):
        self.claim = claim
        super().__init__(f"{claim}: {detail}" if detail else claim)


# formats
class MalformedInput(Girth7Error, ValueError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at byte {offset})")
