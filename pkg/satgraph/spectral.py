"""
Spectral radius of graphs and of quotient matrices of vertex partitions.

The spectral radius of a graph is the largest eigenvalue of its adjacency matrix. It is
computed by power iteration on the adjacency matrix plus the identity. The shift keeps
bipartite graphs (whose spectrum is symmetric about 0) from oscillating. The same routine
serves quotient matrices after symmetrizing them by the block sizes.

`exact_spectral_radius` is an independent exact-arithmetic computation for small graphs,
used to validate the floating-point one.
"""
import logging
from fractions import Fraction
from math import sqrt
from typing import Any, Dict, List, Optional, Sequence, Tuple

from attr import attrib, attrs, validators

from satgraph.bitsets import bitset, full, iter_bits, popcount
from satgraph.graph import Graph
from satgraph.preconditions import check_arg, check_state

import numpy as np

log = logging.getLogger(__name__)  # pylint:disable=invalid-name

DEFAULT_TOLERANCE = 1e-10
MAX_ITERATIONS = 10 ** 6
# how close lambda_1 must be to a bound for the bound to count as attained
BOUND_TOLERANCE = 1e-8


class SpectralConvergenceError(RuntimeError):
    """
    Raised when power iteration does not converge within `MAX_ITERATIONS`.
    """


def adjacency_matrix(g: Graph) -> np.ndarray:
    ret = np.zeros((g.n, g.n))
    for (u, v) in g.edges():
        ret[u, v] = 1.0
        ret[v, u] = 1.0
    return ret


def _dominant_eigenvalue(matrix: np.ndarray, tol: float) -> float:
    """
    The largest eigenvalue of a symmetric non-negative matrix.

    Iteration stops once successive Rayleigh quotients differ by at most
    ``tol * max(1, lambda)`` and the residual norm is within the same bound.
    """
    size = matrix.shape[0]
    shifted = matrix + np.eye(size)
    x = np.ones(size) / sqrt(size)
    previous: Optional[float] = None
    for iteration in range(MAX_ITERATIONS):
        y = shifted @ x
        estimate = float(x @ y)
        residual = float(np.linalg.norm(y - estimate * x))
        scale = tol * max(1.0, estimate)
        if previous is not None and abs(estimate - previous) <= scale and residual <= scale:
            log.debug("Power iteration converged after %s iterations", iteration)
            return estimate - 1.0
        previous = estimate
        x = y / np.linalg.norm(y)
    raise SpectralConvergenceError(
        f"Power iteration did not converge to tolerance {tol} within {MAX_ITERATIONS} "
        f"iterations"
    )


def spectral_radius(g: Graph, tol: float = DEFAULT_TOLERANCE) -> float:
    """
    The largest eigenvalue of the adjacency matrix of *g*.

    Each connected component is handled separately and the largest result is returned.
    """
    check_arg(g.n >= 1, "The spectral radius of the empty graph is undefined")
    check_arg(tol > 0, "Tolerance must be positive but got %s", (tol,))
    matrix = adjacency_matrix(g)
    ret = 0.0
    for component in g.components():
        if popcount(component) == 1:
            continue
        indices = list(iter_bits(component))
        ret = max(ret, _dominant_eigenvalue(matrix[np.ix_(indices, indices)], tol))
    return ret


@attrs(frozen=True, slots=True)
class DegreeBounds:
    """
    The average degree *lower* and maximum degree *upper* of a graph, which bound its
    spectral radius from below and above.

    The lower bound is attained exactly when the graph is *regular*. The upper bound is
    attained exactly when some component is regular of the maximum degree
    (*max_degree_component_regular*), which for a connected graph again means regular.
    """

    lower: float = attrib(converter=float)
    upper: float = attrib(converter=float)
    spectral_radius: float = attrib(converter=float)
    regular: bool = attrib(validator=validators.instance_of(bool))
    max_degree_component_regular: bool = attrib(validator=validators.instance_of(bool))

    def lower_is_tight(self, tol: float = BOUND_TOLERANCE) -> bool:
        return abs(self.spectral_radius - self.lower) <= tol * max(1.0, self.spectral_radius)

    def upper_is_tight(self, tol: float = BOUND_TOLERANCE) -> bool:
        return abs(self.upper - self.spectral_radius) <= tol * max(1.0, self.spectral_radius)

    def holds(self, tol: float = BOUND_TOLERANCE) -> bool:
        """
        Whether both bounds hold and each is tight exactly when it should be.
        """
        slack = tol * max(1.0, self.spectral_radius)
        return (
            self.lower - slack <= self.spectral_radius <= self.upper + slack
            and self.lower_is_tight(tol) == self.regular
            and self.upper_is_tight(tol) == self.max_degree_component_regular
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "average_degree": self.lower,
            "max_degree": self.upper,
            "spectral_radius": self.spectral_radius,
            "regular": self.regular,
            "max_degree_component_regular": self.max_degree_component_regular,
            "lower_bound_tight": self.lower_is_tight(),
            "upper_bound_tight": self.upper_is_tight(),
        }


def degree_bounds_check(g: Graph, tol: float = DEFAULT_TOLERANCE) -> DegreeBounds:
    check_arg(g.n >= 1, "Degree bounds of the empty graph are undefined")
    profile = g.degree_profile()
    return DegreeBounds(
        lower=2 * g.m / g.n,
        upper=profile.max_degree,
        spectral_radius=spectral_radius(g, tol),
        regular=g.is_regular(),
        max_degree_component_regular=any(
            all(profile.degrees[v] == profile.max_degree for v in iter_bits(component))
            for component in g.components()
        ),
    )


@attrs(frozen=True, slots=True)
class Partition:
    """
    An ordered partition of the vertices of a graph on *n* vertices into nonempty blocks.

    Blocks are vertex bitsets.
    """

    n: int = attrib(validator=validators.instance_of(int))
    blocks: Tuple[int, ...] = attrib(converter=tuple)

    def __attrs_post_init__(self) -> None:
        check_arg(self.blocks, "A partition needs at least one block")
        covered = 0
        for (i, block) in enumerate(self.blocks):
            check_arg(block > 0, "Block %s is empty", (i,))
            check_arg(
                not block & covered, "Block %s overlaps an earlier block", (i,)
            )
            covered |= block
        check_arg(
            covered == full(self.n),
            "Blocks cover %s but a partition must cover all %s vertices",
            (sorted(iter_bits(covered)), self.n),
        )

    @staticmethod
    def from_vertex_lists(n: int, blocks: Sequence[Sequence[int]]) -> "Partition":
        for block in blocks:
            check_arg(
                len(set(block)) == len(block), "Block %s lists a vertex twice", (list(block),)
            )
            for v in block:
                check_arg(0 <= v < n, "Vertex %s is out of range for %s vertices", (v, n))
        return Partition(n, [bitset(block) for block in blocks])

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        return tuple(popcount(block) for block in self.blocks)


@attrs(frozen=True, slots=True)
class QuotientMatrix:
    """
    The *t* x *t* matrix whose entry *(i, j)* is the number of edges between blocks *i*
    and *j* divided by the size of block *i*.

    Row *i* therefore holds the average number of neighbors a vertex of block *i* has in
    each block. For an equitable partition these are exact neighbor counts.
    """

    entries: Tuple[Tuple[float, ...], ...] = attrib(
        converter=lambda rows: tuple(tuple(float(x) for x in row) for row in rows)
    )
    block_sizes: Tuple[int, ...] = attrib(converter=tuple)

    def __attrs_post_init__(self) -> None:
        t = len(self.block_sizes)
        check_arg(t >= 1, "A quotient matrix needs at least one block")
        check_arg(
            len(self.entries) == t and all(len(row) == t for row in self.entries),
            "Expected a %s x %s matrix",
            (t, t),
        )
        for i in range(t):
            for j in range(t):
                check_arg(self.entries[i][j] >= 0, "Entry (%s, %s) is negative", (i, j))
                check_arg(
                    abs(
                        self.block_sizes[i] * self.entries[i][j]
                        - self.block_sizes[j] * self.entries[j][i]
                    )
                    <= 1e-9 * max(1.0, self.block_sizes[i] * self.entries[i][j]),
                    "Entries (%s, %s) and (%s, %s) count different numbers of edges",
                    (i, j, j, i),
                )

    @property
    def t(self) -> int:
        return len(self.block_sizes)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries)

    def to_json(self) -> Dict[str, Any]:
        return {
            "t": self.t,
            "block_sizes": list(self.block_sizes),
            "entries": [list(row) for row in self.entries],
        }


def _check_partition_fits(g: Graph, p: Partition) -> None:
    check_arg(
        p.n == g.n,
        "Partition is of %s vertices but the graph has %s",
        (p.n, g.n),
    )


def quotient_matrix(g: Graph, p: Partition) -> QuotientMatrix:
    """
    The quotient matrix of *g* with respect to *p*, whether or not *p* is equitable.
    """
    _check_partition_fits(g, p)
    sizes = p.block_sizes
    return QuotientMatrix(
        [
            [
                sum(popcount(g.adjacency[v] & target) for v in iter_bits(source)) / size
                for target in p.blocks
            ]
            for (source, size) in zip(p.blocks, sizes)
        ],
        sizes,
    )


def is_equitable(g: Graph, p: Partition) -> Optional[QuotientMatrix]:
    """
    The quotient matrix of *p* if *p* is equitable for *g*, otherwise ``None``.

    A partition is equitable if, for every pair of blocks *i* and *j*, all vertices of
    block *i* have the same number of neighbors in block *j*.
    """
    _check_partition_fits(g, p)
    for source in p.blocks:
        for target in p.blocks:
            if len({popcount(g.adjacency[v] & target) for v in iter_bits(source)}) > 1:
                return None
    return quotient_matrix(g, p)


def quotient_spectral_radius(q: QuotientMatrix, tol: float = DEFAULT_TOLERANCE) -> float:
    """
    The largest eigenvalue of *q*.

    *q* is similar to the symmetric matrix ``D^(1/2) q D^(-1/2)`` for ``D`` the diagonal
    matrix of block sizes, which is what is iterated on. For two blocks the result is
    cross-checked against the larger root of the characteristic quadratic.
    """
    check_arg(tol > 0, "Tolerance must be positive but got %s", (tol,))
    roots = np.sqrt(np.array(q.block_sizes, dtype=float))
    symmetric = (roots[:, None] * q.as_array()) / roots[None, :]
    # average the two triangles so that rounding cannot leave it slightly asymmetric
    symmetric = (symmetric + symmetric.T) / 2
    ret = _dominant_eigenvalue(symmetric, tol)
    if q.t == 2:
        ((a, b), (c, d)) = q.entries
        half_trace = (a + d) / 2
        closed_form = half_trace + sqrt(max(0.0, half_trace ** 2 - (a * d - b * c)))
        check_state(
            abs(closed_form - ret) <= max(10 * tol, 1e-9) * max(1.0, closed_form),
            "Power iteration gave %s but the characteristic quadratic gives %s",
            (ret, closed_form),
        )
    return ret


def saturated_spectral_floor(k: int) -> float:
    """
    ``(k - 2 + sqrt(k^2 + 4k - 4)) / 2``, the spectral radius of `build_k_minus(k)`.

    Every graph on more than *k* vertices which is saturated for k-edge-connectivity or
    for k-connectivity has spectral radius at least this.
    """
    check_arg(k >= 1, "k must be at least 1 but got %s", (k,))
    return (k - 2 + sqrt(k * k + 4 * k - 4)) / 2


def floor_is_met(g: Graph, k: int, tol: float = BOUND_TOLERANCE) -> bool:
    return spectral_radius(g) >= saturated_spectral_floor(k) - tol * max(
        1.0, saturated_spectral_floor(k)
    )


# exact characteristic polynomial machinery; polynomials are coefficient lists, constant
# term first


def characteristic_polynomial(g: Graph) -> List[int]:
    """
    The integer coefficients of ``det(xI - A)`` for *A* the adjacency matrix of *g*, constant
    term first.

    Computed by the Faddeev-LeVerrier recurrence, in which every division is exact.
    """
    n = g.n
    matrix = [[1 if (g.adjacency[i] >> j) & 1 else 0 for j in range(n)] for i in range(n)]
    coefficients = [0] * (n + 1)
    coefficients[n] = 1
    # running = A * M_{i-1} + c_{n-i+1} I
    running = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        product_matrix = [
            [sum(matrix[r][s] * running[s][c] for s in range(n)) for c in range(n)]
            for r in range(n)
        ]
        running = [
            [
                product_matrix[r][c] + (coefficients[n - i + 1] if r == c else 0)
                for c in range(n)
            ]
            for r in range(n)
        ]
        trace = sum(
            sum(matrix[r][s] * running[s][r] for s in range(n)) for r in range(n)
        )
        check_state(trace % i == 0, "Faddeev-LeVerrier division must be exact")
        coefficients[n - i] = -trace // i
    return coefficients


def _trim(p: List[Fraction]) -> List[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = _trim(list(a))
    b = _trim(b)
    quotient = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        quotient[shift] = factor
        for (i, coefficient) in enumerate(b):
            a[i + shift] -= factor * coefficient
        a = _trim(a[:-1]) if len(a) > 1 else [Fraction(0)]
    return (_trim(quotient), a)


def _derivative(p: List[Fraction]) -> List[Fraction]:
    return _trim([i * p[i] for i in range(1, len(p))] or [Fraction(0)])


def _gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    while any(b):
        (_, remainder) = _divmod(a, b)
        (a, b) = (b, remainder)
    return a


def _evaluate(p: List[Fraction], x: Fraction) -> Fraction:
    ret = Fraction(0)
    for coefficient in reversed(p):
        ret = ret * x + coefficient
    return ret


def _sign_changes(values: Sequence[Fraction]) -> int:
    signs = [value > 0 for value in values if value != 0]
    return sum(1 for (a, b) in zip(signs, signs[1:]) if a != b)


def _sturm_sequence(p: List[Fraction]) -> List[List[Fraction]]:
    ret = [p, _derivative(p)]
    while len(ret[-1]) > 1 or ret[-1][0] != 0:
        (_, remainder) = _divmod(ret[-2], ret[-1])
        if not any(remainder):
            break
        ret.append([-c for c in remainder])
    return ret


def exact_spectral_radius(g: Graph, precision: Fraction = Fraction(1, 10 ** 12)) -> float:
    """
    The spectral radius of *g* by exact rational arithmetic, to within *precision*.

    The characteristic polynomial is reduced to its square-free part, and its largest root
    is located by bisection on ``[-1, max degree + 1]`` using Sturm sequences to count
    the distinct roots above a point. Its cost grows quickly with the number of vertices, so
    it is meant as an oracle for small graphs.
    """
    check_arg(g.n >= 1, "The spectral radius of the empty graph is undefined")
    polynomial = [Fraction(c) for c in characteristic_polynomial(g)]
    (square_free, _) = _divmod(polynomial, _gcd(polynomial, _derivative(polynomial)))
    sequence = _sturm_sequence(square_free)
    changes_at_infinity = _sign_changes([p[-1] for p in sequence])

    def roots_above(x: Fraction) -> int:
        return _sign_changes([_evaluate(p, x) for p in sequence]) - changes_at_infinity

    low = Fraction(-1)
    high = Fraction(g.degree_profile().max_degree + 1)
    check_state(roots_above(low) >= 1 and roots_above(high) == 0, "Root not bracketed")
    while high - low > precision:
        middle = (low + high) / 2
        if roots_above(middle) >= 1:
            low = middle
        else:
            high = middle
    return float((low + high) / 2)
