"""Per-prime Euler-criterion checks, counterexample search, and density census.

Only split primes (p = 1 mod q) carry information: otherwise the q-th power
map is a bijection on F_p* and every element is a residue.  The census
compares empirical failure rates against the equidistribution prediction
U / (q^k (q-1)), where U counts vectors of F_q^k missed by every hyperplane
of the residue profile; for a single support prime this is the classical 1/q.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .arith import factorize
from .covering import uncovered_count
from .profiles import QInput, TrivialCertificate, build_profile, hyperplanes_of

SEGMENT_SIZE = 10**6
SCAN_BOUND_LIMIT = 10**7
_FAILING_LIST_CAP = 25


@dataclass(frozen=True)
class ResidueSymbol:
    """Index j with b^((p-1)/q) = zeta^j mod p, for the canonical zeta."""

    value: int
    q: int

    @property
    def trivial(self) -> bool:
        return self.value == 0


@dataclass(frozen=True)
class PrimeCheckReport:
    p: int
    splits: bool
    per_element: tuple[tuple[int, bool], ...]
    outcome: bool


@dataclass(frozen=True)
class DensityReport:
    bound: int
    primes_checked: int
    excluded_primes: int
    split_primes: int
    failing_count: int
    failing_primes: tuple[int, ...]  # truncated
    empirical_density: Fraction
    predicted_density: Fraction


def primes_up_to(bound):
    """Yield all primes <= bound via a segmented sieve of Eratosthenes."""
    if bound < 2:
        return
    root = isqrt(bound)
    base_sieve = bytearray([1]) * (root + 1)
    base_sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(root) + 1):
        if base_sieve[i]:
            base_sieve[i * i :: i] = bytearray(len(base_sieve[i * i :: i]))
    base_primes = [i for i in range(2, root + 1) if base_sieve[i]]
    yield from base_primes
    low = root + 1
    while low <= bound:
        high = min(low + SEGMENT_SIZE - 1, bound)
        seg = bytearray([1]) * (high - low + 1)
        for p in base_primes:
            start = max(p * p, (low + p - 1) // p * p)
            seg[start - low :: p] = bytearray(len(seg[start - low :: p]))
        for i, flag in enumerate(seg):
            if flag:
                yield low + i
        low = high + 1


def least_primitive_root(p: int) -> int:
    order_factors = [f for f, _ in factorize(p - 1).factors]
    g = 2
    while True:
        if all(pow(g, (p - 1) // f, p) != 1 for f in order_factors):
            return g
        g += 1


def canonical_zeta(p: int, q: int) -> int:
    """g^((p-1)/q) mod p for the least primitive root g; has exact order q."""
    if p % q != 1:
        raise ValueError("p must be 1 mod q")
    return pow(least_primitive_root(p), (p - 1) // q, p)


def residue_symbol(b: int, p: int, q: int) -> ResidueSymbol:
    if p % q != 1:
        raise ValueError("p must be 1 mod q")
    if b % p == 0:
        raise ValueError("p must not divide b")
    s = pow(b, (p - 1) // q, p)
    zeta = canonical_zeta(p, q)
    cur = 1
    for j in range(q):
        if cur == s:
            return ResidueSymbol(j, q)
        cur = cur * zeta % p
    raise RuntimeError(f"{s} is not in the order-{q} subgroup mod {p}")


def has_qth_power_mod_p(B, p, q) -> PrimeCheckReport:
    """Does some element of B have a q-th root mod p?  Requires p valid."""
    if p == q:
        raise ValueError("p = q is excluded")
    for b in B:
        if b % p == 0:
            raise ValueError(f"p = {p} divides element {b}; excluded prime")
    splits = p % q == 1
    if not splits:
        per_element = tuple((b, True) for b in B)
        return PrimeCheckReport(p, False, per_element, True)
    per_element = tuple((b, pow(b, (p - 1) // q, p) == 1) for b in B)
    return PrimeCheckReport(p, True, per_element, any(r for _, r in per_element))


def _excluded(p, q, prod):
    return p == q or prod % p == 0


def find_counterexample_prime(B, q, bound) -> int | None:
    """First prime <= bound (outside the excluded set) where no element is a residue."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    prod = 1
    for b in B:
        prod *= b
    for p in primes_up_to(bound):
        if _excluded(p, q, prod):
            continue
        if not has_qth_power_mod_p(B, p, q).outcome:
            return p
    return None


def predicted_failure_density(B, q) -> Fraction:
    """Equidistribution prediction U / (q^k (q-1)); 0 for trivially-yes sets."""
    profile = build_profile(QInput(q, tuple(B)))
    if isinstance(profile, TrivialCertificate):
        return Fraction(0)
    U = uncovered_count(hyperplanes_of(profile), profile.k, profile.q)
    return Fraction(U, q**profile.k * (q - 1))


def census(B, q, bound) -> DensityReport:
    """Scan all primes <= bound and tabulate failure density vs the prediction."""
    if bound < 100:
        raise ValueError("bound must be >= 100")
    prod = 1
    for b in B:
        prod *= b
    checked = excluded = split = 0
    failing = []
    for p in primes_up_to(bound):
        if _excluded(p, q, prod):
            excluded += 1
            continue
        checked += 1
        if p % q != 1:
            continue
        split += 1
        if not any(pow(b, (p - 1) // q, p) == 1 for b in B):
            failing.append(p)
    empirical = Fraction(len(failing), checked) if checked else Fraction(0)
    return DensityReport(
        bound=bound,
        primes_checked=checked,
        excluded_primes=excluded,
        split_primes=split,
        failing_count=len(failing),
        failing_primes=tuple(failing[:_FAILING_LIST_CAP]),
        empirical_density=empirical,
        predicted_density=predicted_failure_density(B, q),
    )


def qth_root_mod_p(b, p, q) -> int | None:
    """Some r with r^q = b mod p, or None if b is not a q-th power residue."""
    if p == q:
        raise ValueError("p = q is excluded")
    if b % p == 0:
        raise ValueError("p must not divide b")
    a = b % p
    if p % q != 1:
        # q-th power map is a bijection on F_p*
        return pow(a, pow(q, -1, p - 1), p)
    if pow(a, (p - 1) // q, p) != 1:
        return None
    s, t = 0, p - 1
    while t % q == 0:
        s += 1
        t //= q
    if s == 1:
        r = pow(a, pow(q, -1, t), p)
    else:
        r = _amm_root(a, p, q, s, t)
    assert pow(r, q, p) == a
    return r


def _amm_root(a, p, q, s, t):
    # Adleman-Manders-Miller: split a across the CRT decomposition of F_p*
    # into its order-t part and its Sylow q-part of order q^s.
    qs = q**s
    inv_t = pow(t, -1, qs)
    B = inv_t  # B*t = 1 mod qs
    A = (1 - B * t) // qs
    y1 = pow(a, A * qs % (p - 1), p)  # order divides t
    root1 = pow(y1, pow(q, -1, t) if t > 1 else 0, p)
    y2 = pow(a, B * t % (p - 1), p)  # lies in the Sylow q-subgroup
    n = 2
    while pow(n, (p - 1) // q, p) == 1:
        n += 1
    g = pow(n, t, p)  # generator of the Sylow q-subgroup
    zeta = pow(g, qs // q, p)
    table = {pow(zeta, i, p): i for i in range(q)}
    ginv = pow(g, -1, p)
    mu = 0
    for i in range(s):
        w = pow(y2 * pow(ginv, mu, p) % p, q ** (s - 1 - i), p)
        mu += table[w] * q**i
    assert mu % q == 0  # a is a residue, so its Sylow component is a q-th power
    root2 = pow(g, mu // q, p)
    return root1 * root2 % p
