"""Exception hierarchy. Every error carries a machine-readable ``code``."""


class SemicatError(Exception):
    code = "Error"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details

    def as_dict(self):
        out = {"error": self.code, "message": str(self)}
        if self.details:
            out["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        return out


def _jsonable(v):
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return repr(v)


def _make(name, doc):
    cls = type(name, (SemicatError,), {"code": name, "__doc__": doc})
    return cls


NonAssociative = _make("NonAssociative", "Table fails associativity on some triple.")
BadIdentity = _make("BadIdentity", "Claimed identity element is not neutral.")
IndexOutOfRange = _make("IndexOutOfRange", "Element or arrow index outside the carrier.")
DomainMismatch = _make("DomainMismatch", "Generating maps act on different point sets.")
SizeLimitExceeded = _make("SizeLimitExceeded", "A configured size cap was hit.")
NotIdempotent = _make("NotIdempotent", "Element is not idempotent.")
WrongPredicateKind = _make("WrongPredicateKind", "Predicate kind (group/monoid) does not fit.")
SamePair = _make("SamePair", "Principal congruence requested for x == y.")
IncompatiblePartition = _make("IncompatiblePartition", "Partition is not a congruence.")
NotSurjective = _make("NotSurjective", "Morphism is not onto.")
NotFitting = _make("NotFitting", "Group predicate is not flagged Fitting.")
NotGroup = _make("NotGroup", "Table is not a group.")
NotRegular = _make("NotRegular", "J-class contains no idempotent.")
NotInDomain = _make("NotInDomain", "Element lies strictly above the J-class.")
NotNormal = _make("NotNormal", "Subgroup is not normal.")
BadComposition = _make("BadComposition", "Composition table violates endpoint rules.")
NonCoterminalClass = _make("NonCoterminalClass", "Congruence class mixes hom-sets.")
NotCoterminal = _make("NotCoterminal", "Arrows do not share source and target.")
NotQuotient = _make("NotQuotient", "Morphism is not a quotient morphism.")
Injective = _make("Injective", "Morphism has trivial kernel.")
ParseError = _make("ParseError", "Input could not be parsed.")
UnknownPredicate = _make("UnknownPredicate", "No predicate registered under this name.")
UnknownName = _make("UnknownName", "No zoo object with this name.")
