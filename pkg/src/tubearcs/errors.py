"""Exception types shared across the package."""


class TubeError(ValueError):
    """Base class for invalid input to any tube/arc computation."""


class NotAdmissible(TubeError):
    """An arc [a, b] with b <= a + 1 (boundary or backward arc)."""

    def __init__(self, a, b):
        self.a = a
        self.b = b
        super().__init__(f"arc [{a},{b}] is not admissible: need b > a + 1")


class RankMismatch(TubeError):
    """Two objects live in annuli/tubes of different rank."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"rank mismatch: {_fmt_rank(left)} vs {_fmt_rank(right)}")


class NegativeExt(ArithmeticError):
    """Euler-form route produced a negative Ext dimension (internal inconsistency)."""


def _fmt_rank(r):
    return "infinity" if r is None else str(r)
