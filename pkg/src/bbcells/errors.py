"""Exception hierarchy shared across the library and the CLI."""


class DomainError(Exception):
    """Base for all structured library errors; `code` keys the CLI output."""

    code = "domain-error"


class RankMismatch(DomainError):
    code = "rank-mismatch"


class MonoidHasUnits(DomainError):
    code = "monoid-has-units"


class InhomogeneousError(DomainError):
    code = "inhomogeneous-relation"

    def __init__(self, weight_a, weight_b):
        self.weight_a = tuple(weight_a)
        self.weight_b = tuple(weight_b)
        super().__init__(
            f"relation mixes terms of weight {self.weight_a} and {self.weight_b}"
        )


class NotMinimalPresentation(DomainError):
    code = "not-minimal-presentation"


class WeightOutsideMonoid(DomainError):
    code = "weight-outside-monoid"


class InfiniteDimension(DomainError):
    code = "infinite-dimension"


class NonGenericWeight(DomainError):
    code = "non-generic-weight"

    def __init__(self, partition, weight, tangent_weight):
        self.partition = tuple(partition)
        self.weight = tuple(weight)
        self.tangent_weight = tuple(tangent_weight)
        super().__init__(
            f"weight {self.weight} pairs to zero with tangent weight "
            f"{self.tangent_weight} at partition {self.partition}"
        )


class PolynomialSyntaxError(DomainError):
    code = "syntax-error"

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} (at byte {offset})")


class UnknownVariable(DomainError):
    code = "unknown-variable"

    def __init__(self, name, offset=None):
        self.name = name
        self.offset = offset
        where = f" (at byte {offset})" if offset is not None else ""
        super().__init__(f"unknown variable '{name}'{where}")


class ExponentOverflow(DomainError):
    code = "exponent-overflow"
