class DomainError(ValueError):
    """A structurally valid request that violates a mathematical precondition.

    Examples: multiplying a jump set by a non-unit, mixing graph orders,
    a residue-class shift whose modulus fails the cube-divisor gate.
    """
