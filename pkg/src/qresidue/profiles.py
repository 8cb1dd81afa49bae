"""Canonicalization of (B, q) into a residue profile.

Each input integer is reduced to its q-free part (exponents mod q); perfect
q-th powers short-circuit into a trivial certificate.  The surviving columns
form an exponent matrix over F_q whose columns are hyperplane normals.
"""

from dataclasses import dataclass

from .arith import factorize, integer_qth_root, is_probable_prime
from .covering import Hyperplane


@dataclass(frozen=True)
class QInput:
    """An odd prime q and a nonempty list of nonzero integers."""

    q: int
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if self.q < 3 or self.q % 2 == 0 or not is_probable_prime(self.q):
            raise ValueError("q must be an odd prime")
        if not self.elements:
            raise ValueError("element set must be nonempty")
        if any(b == 0 for b in self.elements):
            raise ValueError("elements must be nonzero")


@dataclass(frozen=True)
class TrivialCertificate:
    """Position and exact root of an element that is a perfect q-th power."""

    index: int
    root: int


@dataclass(frozen=True)
class ResidueProfile:
    """Support primes p_1..p_k and the k x l exponent matrix over F_q.

    Columns are deduplicated by q-free value; provenance maps each surviving
    column to the first input element that produced it.
    """

    q: int
    support_primes: tuple[int, ...]
    exponents: tuple[tuple[int, ...], ...]  # k rows, l columns
    provenance: dict[int, int]
    qfree_values: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.support_primes)

    @property
    def l(self) -> int:
        return len(self.qfree_values)

    def column(self, j) -> tuple[int, ...]:
        return tuple(self.exponents[i][j] for i in range(self.k))


def rad_q(b: int, q: int) -> int:
    """The q-free part of |b|: every exponent reduced mod q; 1 for q-th powers."""
    if b == 0:
        raise ValueError("b must be nonzero")
    fac = factorize(abs(b))
    out = 1
    for p, e in fac.factors:
        out *= p ** (e % q)
    return out


def _qfree_factors(b, q):
    fac = factorize(abs(b))
    return [(p, e % q) for p, e in fac.factors if e % q != 0]


def build_profile(qinput: QInput):
    """ResidueProfile for (B, q), or a TrivialCertificate if B contains r^q."""
    q = qinput.q
    for idx, b in enumerate(qinput.elements):
        r = integer_qth_root(abs(b), q)
        if r is not None:
            return TrivialCertificate(idx, r if b > 0 else -r)
    columns = []  # (qfree value, {prime: exponent}, source element)
    seen = set()
    for b in qinput.elements:
        factors = _qfree_factors(b, q)
        value = 1
        for p, e in factors:
            value *= p**e
        if value in seen:
            continue
        seen.add(value)
        columns.append((value, dict(factors), b))
    support = sorted({p for _, fac, _ in columns for p in fac})
    exponents = tuple(
        tuple(fac.get(p, 0) for _, fac, _ in columns) for p in support
    )
    provenance = {j: src for j, (_, _, src) in enumerate(columns)}
    qfree = tuple(value for value, _, _ in columns)
    return ResidueProfile(q, tuple(support), exponents, provenance, qfree)


def hyperplanes_of(profile: ResidueProfile) -> list[Hyperplane]:
    """One hyperplane per column normal, with duplicate normals collapsed."""
    normals = []
    for j in range(profile.l):
        n = profile.column(j)
        if n not in normals:
            normals.append(n)
    return [Hyperplane(n, profile.q) for n in normals]
