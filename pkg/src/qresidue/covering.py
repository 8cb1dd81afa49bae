"""Hyperplane coverings of F_q^k: coverage tests, minimal covers, witnesses."""

from dataclasses import dataclass
from itertools import product

POINT_ENUMERATION_LIMIT = 10**8


class GuardError(ValueError):
    """An enumeration guard was exceeded."""


@dataclass(frozen=True)
class Hyperplane:
    """Proper subspace of F_q^k cut out by normal . x = 0; normal is nonzero."""

    normal: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(x % self.q for x in self.normal))
        if all(x == 0 for x in self.normal):
            raise ValueError("hyperplane normal must be nonzero")

    @property
    def ambient_dim(self) -> int:
        return len(self.normal)

    def contains(self, v) -> bool:
        return sum(a * b for a, b in zip(self.normal, v)) % self.q == 0


@dataclass(frozen=True)
class CoveringResult:
    """Either a full point-to-hyperplane assignment or an uncovered witness."""

    covered: bool
    witness: tuple[int, ...] | None
    assignment: dict[tuple[int, ...], int] | None


def _check_family(hyperplanes, k, q):
    for h in hyperplanes:
        if h.ambient_dim != k or h.q != q:
            raise ValueError("hyperplane dimension/modulus mismatch")
    if q**k > POINT_ENUMERATION_LIMIT:
        raise GuardError(f"q^k = {q**k} exceeds enumeration limit {POINT_ENUMERATION_LIMIT}")


def covers(hyperplanes, k, q) -> CoveringResult:
    """Enumerate all q^k points lexicographically; full assignment or first gap.

    An empty family covers nothing: even the zero vector has no containing
    subspace, so the witness is then (0, ..., 0).
    """
    _check_family(hyperplanes, k, q)
    assignment = {}
    zero = (0,) * k
    for v in product(range(q), repeat=k):
        idx = next((i for i, h in enumerate(hyperplanes) if h.contains(v)), None)
        if idx is None:
            return CoveringResult(False, v, None)
        if v != zero:
            assignment[v] = idx
    return CoveringResult(True, None, assignment)


def uncovered_count(hyperplanes, k, q) -> int:
    """Number of vectors of F_q^k lying on none of the hyperplanes."""
    _check_family(hyperplanes, k, q)
    if not hyperplanes:
        return q**k
    return sum(
        1
        for v in product(range(q), repeat=k)
        if not any(h.contains(v) for h in hyperplanes)
    )


def minimal_cover(hyperplanes, k, q) -> list[int] | None:
    """Minimum-cardinality covering sub-family, by exact branch and bound.

    Returns indices into the input list, or None if the family does not cover.
    For k >= 2 any cover has size >= q+1, which serves as a stopping bound.
    """
    result = covers(hyperplanes, k, q)
    if not result.covered:
        return None
    points = [v for v in product(range(q), repeat=k) if any(x for x in v)]
    point_sets = [frozenset(p for p in points if h.contains(p)) for h in hyperplanes]
    universe = frozenset(points)
    lower_bound = q + 1 if k >= 2 else 1
    best = list(range(len(hyperplanes)))

    def branch(chosen, covered):
        nonlocal best
        if covered == universe:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + 1 >= len(best):
            return
        if len(best) == lower_bound:
            return
        # branch on the lexicographically first uncovered point
        target = min(universe - covered)
        for i, ps in enumerate(point_sets):
            if target in ps and i not in chosen:
                branch(chosen + [i], covered | ps)

    branch([], frozenset())
    return best


def synthesize_covering(k, q) -> list[Hyperplane]:
    """The pencil covering of F_q^k by q+1 hyperplanes.

    Normals: x_1 = 0, x_2 = 0 and x_1 + t x_2 = 0 for t = 1..q-1, zero-padded
    to dimension k.  Every point has v_1 = 0, v_2 = 0, or v_1 = -t v_2.
    """
    if k < 2:
        raise ValueError("pencil covering requires k >= 2")
    pad = (0,) * (k - 2)
    normals = [(1, 0) + pad, (0, 1) + pad]
    normals += [(1, t) + pad for t in range(1, q)]
    return [Hyperplane(n, q) for n in normals]


def normalize_hyperplane(h: Hyperplane) -> Hyperplane:
    """Scale so the first nonzero coordinate is 1 (canonical projective form)."""
    lead = next(x for x in h.normal if x != 0)
    inv = pow(lead, -1, h.q)
    return Hyperplane(tuple(x * inv % h.q for x in h.normal), h.q)
