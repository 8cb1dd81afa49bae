"""The covering criterion for q-th power residues, with brute-force cross-checks.

decide() settles whether B contains a q-th power modulo almost every prime by
testing whether the hyperplanes of its residue profile cover F_q^k.  The
independent oracle enumerates all nonzero twist vectors c and checks that the
all-ones row never lies in the row space of the twisted exponent matrix; both
routes must agree.  Constructive witnesses are available in both directions.
"""

import random
from dataclasses import dataclass
from enum import Enum
from itertools import product

from . import fqlinalg
from .arith import integer_qth_root
from .covering import CoveringResult, GuardError, covers
from .profiles import QInput, ResidueProfile, TrivialCertificate, build_profile, hyperplanes_of

ORACLE_ENUMERATION_LIMIT = 10**7


class Verdict(Enum):
    TRIVIALLY_YES = "trivially_yes"
    YES = "yes"
    NO = "no"


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    profile: ResidueProfile | None
    trivial: TrivialCertificate | None = None
    covering: CoveringResult | None = None

    @property
    def uncovered(self) -> tuple[int, ...] | None:
        if self.covering is not None and not self.covering.covered:
            return self.covering.witness
        return None


@dataclass(frozen=True)
class SkalbaCertificate:
    """Vectors c, f with sum(f) != 0 mod q and prod qfree_j^(c_j f_j) = root^q."""

    c: tuple[int, ...]
    f: tuple[int, ...]
    product: int
    root: int


def decide(qinput: QInput) -> Decision:
    profile = build_profile(qinput)
    if isinstance(profile, TrivialCertificate):
        return Decision(Verdict.TRIVIALLY_YES, None, trivial=profile)
    result = covers(hyperplanes_of(profile), profile.k, profile.q)
    verdict = Verdict.YES if result.covered else Verdict.NO
    return Decision(verdict, profile, covering=result)


def twisted_matrix(profile: ResidueProfile, c) -> list[list[int]]:
    """M(c): entry (i, j) is exponent[i][j] * c_j mod q."""
    q = profile.q
    return [
        [profile.exponents[i][j] * c[j] % q for j in range(profile.l)]
        for i in range(profile.k)
    ]


def _check_c(profile, c):
    if len(c) != profile.l:
        raise ValueError("c must have one entry per profile column")
    if any(cj % profile.q == 0 for cj in c):
        raise ValueError("entries of c must be nonzero mod q")


def skalba_condition_holds(profile: ResidueProfile, c) -> bool:
    """True iff the all-ones row is not in the row space of M(c)."""
    _check_c(profile, c)
    M = twisted_matrix(profile, c)
    ones = [1] * profile.l
    return fqlinalg.row_space_contains(M, ones, profile.q) is None


def skalba_oracle(profile: ResidueProfile) -> bool:
    """Brute force over every c in (F_q \\ {0})^l; independent of the covering route."""
    q, l = profile.q, profile.l
    if (q - 1) ** l > ORACLE_ENUMERATION_LIMIT:
        raise GuardError(
            f"(q-1)^l = {(q - 1) ** l} exceeds oracle limit {ORACLE_ENUMERATION_LIMIT}"
        )
    return all(
        skalba_condition_holds(profile, c) for c in product(range(1, q), repeat=l)
    )


def skalba_solve(profile: ResidueProfile, c) -> SkalbaCertificate | None:
    """Constructive certificate for one twist vector c, or None if it fails.

    Picks f in Null(M(c)) with nonzero coordinate sum (scanning the basis, then
    pairwise sums) and verifies the integer identity exactly.
    """
    _check_c(profile, c)
    q = profile.q
    if not skalba_condition_holds(profile, c):
        return None
    basis = fqlinalg.null_space_basis(twisted_matrix(profile, c), q)
    f = next((v for v in basis if sum(v) % q != 0), None)
    if f is None:
        f = next(
            (
                [(a + b) % q for a, b in zip(basis[0], v)]
                for v in basis[1:]
                if sum(x + y for x, y in zip(basis[0], v)) % q != 0
            ),
            None,
        )
    if f is None:
        raise RuntimeError("no null vector with nonzero sum despite condition holding")
    prod = 1
    for j in range(profile.l):
        prod *= profile.qfree_values[j] ** (c[j] * f[j] % q)
    root = integer_qth_root(prod, q)
    if root is None or root**q != prod:
        raise RuntimeError(
            f"certificate product {prod} is not an exact {q}-th power; "
            "this contradicts the covering criterion"
        )
    return SkalbaCertificate(tuple(cj % q for cj in c), tuple(f), prod, root)


def counterexample_c(profile: ResidueProfile, d) -> tuple[int, ...]:
    """Failing twist c_j = (sum_i exponent[i][j] d_i)^-1 from an uncovered witness d."""
    q = profile.q
    sums = [
        sum(profile.exponents[i][j] * d[i] for i in range(profile.k)) % q
        for j in range(profile.l)
    ]
    if any(s == 0 for s in sums):
        raise ValueError("d is annihilated by some column; not an uncovered witness")
    c = tuple(pow(s, -1, q) for s in sums)
    assert fqlinalg.vec_mat(list(d), twisted_matrix(profile, c), q) == [1] * profile.l
    return c


def zero_entry_witness(profile: ResidueProfile, c, d) -> int:
    """Column index annihilating d, i.e. the zero entry of d^T M(c)."""
    _check_c(profile, c)
    q = profile.q
    for j in range(profile.l):
        if sum(profile.exponents[i][j] * d[i] for i in range(profile.k)) % q == 0:
            return j
    raise RuntimeError("no column annihilates d; the covering assignment is wrong")


def exponent_twist(qinput: QInput, a) -> QInput:
    """Replace each b_j by b_j^(a_j) for nonzero exponents a_j; verdict-invariant."""
    if len(a) != len(qinput.elements):
        raise ValueError("a must have one entry per element")
    if any(not 1 <= aj <= qinput.q - 1 for aj in a):
        raise ValueError("twist exponents must lie in [1, q-1]")
    return QInput(qinput.q, tuple(b**aj for b, aj in zip(qinput.elements, a)))


# --- covering-vs-oracle agreement sweeps -----------------------------------

_SYNTHETIC_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def profile_from_columns(q, columns) -> ResidueProfile:
    """Synthetic profile with the given nonzero exponent columns over F_q."""
    k = len(columns[0])
    primes = [p for p in _SYNTHETIC_PRIMES if p != q][:k]
    exponents = tuple(
        tuple(col[i] % q for col in columns) for i in range(k)
    )
    qfree = []
    for col in columns:
        v = 1
        for p, e in zip(primes, col):
            v *= p ** (e % q)
        qfree.append(v)
    provenance = {j: v for j, v in enumerate(qfree)}
    return ResidueProfile(q, tuple(primes), exponents, provenance, tuple(qfree))


def _agreement(profile):
    covering = covers(hyperplanes_of(profile), profile.k, profile.q).covered
    oracle = skalba_oracle(profile)
    return covering, oracle


def oracle_check_exhaustive(q, k_max, l_max):
    """Compare both routes on every nonzero-column matrix with k<=k_max, l<=l_max.

    Returns (instances checked, list of disagreeing column tuples).
    """
    checked = 0
    disagreements = []
    for k in range(1, k_max + 1):
        nonzero = [v for v in product(range(q), repeat=k) if any(v)]
        for l in range(1, l_max + 1):
            for cols in product(nonzero, repeat=l):
                profile = profile_from_columns(q, list(cols))
                covering, oracle = _agreement(profile)
                checked += 1
                if covering != oracle:
                    disagreements.append(cols)
    return checked, disagreements


def oracle_check_random(q, k_max, l_max, trials, seed):
    """Compare both routes on random nonzero-column matrices."""
    rng = random.Random(seed)
    checked = 0
    disagreements = []
    for _ in range(trials):
        k = rng.randint(1, k_max)
        l = rng.randint(1, l_max)
        cols = []
        for _ in range(l):
            col = tuple(rng.randrange(q) for _ in range(k))
            while not any(col):
                col = tuple(rng.randrange(q) for _ in range(k))
            cols.append(col)
        profile = profile_from_columns(q, cols)
        covering, oracle = _agreement(profile)
        checked += 1
        if covering != oracle:
            disagreements.append(tuple(cols))
    return checked, disagreements
