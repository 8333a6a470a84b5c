"""Posets, order-polytope volumes, the trigonometric cube map, and Monte Carlo.

Four largely independent volume routes live here:

  * linear-extension counting for the zigzag posets (exact rationals);
  * closed-form volumes from the series coefficients (exact pi multiples);
  * indicator Monte Carlo over a bounding box, with deterministic chunked
    seeding so results do not depend on how work is scheduled;
  * the n-cube integral of 1 / (1 +- (x_1...x_n)^2), whose value equals the
    scaled polytope volume via the change of variables x_i = sin u_i / cos u_{i+1}.

The forward map, its Jacobian 1 -+ (x_1...x_n)^2, and the contraction-mapping
inverse are implemented over plain float tuples; Monte Carlo is vectorized
with numpy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .euler_sums import PiMultiple, s_coeff
from .special_numbers import zigzag

# Fixed Monte Carlo chunk size; chunk i of a run draws from a generator
# seeded by (seed, i), so estimates are reproducible under any scheduling.
CHUNK_SAMPLES = 65536

# Linear-extension enumeration is desk-scale only.
EXTENSION_LIMIT = 10

HALF_PI = math.pi / 2


@dataclass(frozen=True)
class PartialOrder:
    """A partial order on {1..n} given by cover pairs (i, j) meaning i < j."""

    n: int
    covers: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "covers", frozenset(self.covers))
        if self.n < 1:
            raise ValueError("a partial order needs at least one element")
        for i, j in self.covers:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"cover pair ({i}, {j}) out of range 1..{self.n}")
            if i == j:
                raise ValueError(f"reflexive pair ({i}, {j})")
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        successors: dict[int, list[int]] = {i: [] for i in range(1, self.n + 1)}
        for i, j in self.covers:
            successors[i].append(j)
        state = dict.fromkeys(successors, 0)  # 0 new, 1 on stack, 2 done
        for start in successors:
            if state[start]:
                continue
            stack = [(start, iter(successors[start]))]
            state[start] = 1
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    if state[nxt] == 1:
                        raise ValueError("cover relations contain a cycle")
                    if state[nxt] == 0:
                        state[nxt] = 1
                        stack.append((nxt, iter(successors[nxt])))
                        advanced = True
                        break
                if not advanced:
                    state[node] = 2
                    stack.pop()


def chain_poset(n: int) -> PartialOrder:
    """The zigzag order 1 < 2 > 3 < 4 > ... on {1..n}."""
    if n < 1:
        raise ValueError("n must be positive")
    covers = set()
    for i in range(1, n):
        covers.add((i, i + 1) if i % 2 == 1 else (i + 1, i))
    return PartialOrder(n, frozenset(covers))


def cyclic_poset(n: int) -> PartialOrder:
    """The zigzag order with the extra wrap relation 1 < n; requires even n."""
    if n < 2 or n % 2 != 0:
        raise ValueError("the cyclic zigzag order requires even n >= 2")
    covers = set(chain_poset(n).covers)
    covers.add((1, n))
    return PartialOrder(n, frozenset(covers))


def linear_extension_count(poset: PartialOrder) -> int:
    """Number of permutations sigma with sigma(i) < sigma(j) whenever i < j.

    Enumerates extensions by repeatedly placing an element whose
    predecessors are already placed, memoized on the placed-set bitmask.
    """
    if poset.n > EXTENSION_LIMIT:
        raise ValueError(f"extension counting supports n <= {EXTENSION_LIMIT}")
    n = poset.n
    preds = [0] * n
    for i, j in poset.covers:
        preds[j - 1] |= 1 << (i - 1)
    full = (1 << n) - 1
    memo: dict[int, int] = {full: 1}

    def count(placed: int) -> int:
        cached = memo.get(placed)
        if cached is not None:
            return cached
        total = 0
        for e in range(n):
            bit = 1 << e
            if not placed & bit and preds[e] & placed == preds[e]:
                total += count(placed | bit)
        memo[placed] = total
        return total

    return count(0)


def order_polytope_volume(poset: PartialOrder) -> Fraction:
    """Volume of the open order polytope: linear extensions over n factorial."""
    return Fraction(linear_extension_count(poset), math.factorial(poset.n))


@dataclass(frozen=True)
class PolytopeSpec:
    """Which polytope: cyclic (wrap-around constraint) or chain, unit or pi/2 box.

    cyclic/half_pi is the region u_i > 0, u_i + u_{i+1} < pi/2 with cyclic
    indexing; cyclic/unit is its rescaling by 2/pi; the chain variants drop
    the wrap-around constraint u_n + u_1.
    """

    kind: str
    n: int
    scale: str = "half_pi"

    def __post_init__(self) -> None:
        if self.kind not in ("cyclic", "chain"):
            raise ValueError("kind must be 'cyclic' or 'chain'")
        if self.scale not in ("unit", "half_pi"):
            raise ValueError("scale must be 'unit' or 'half_pi'")
        if self.n < 1:
            raise ValueError("dimension must be positive")

    @property
    def bound(self) -> float:
        """Box edge: the pairwise constraint bound."""
        return 1.0 if self.scale == "unit" else HALF_PI

    def contains(self, points: np.ndarray) -> np.ndarray:
        """Vectorized open-region membership for an (m, n) array of points.

        Boundary points count as outside.
        """
        u = np.asarray(points, dtype=float)
        inside = (u > 0.0).all(axis=1)
        bound = self.bound
        last = self.n if self.kind == "cyclic" else self.n - 1
        for i in range(last):
            inside &= u[:, i] + u[:, (i + 1) % self.n] < bound
        return inside


def volume_formula(spec: PolytopeSpec) -> PiMultiple:
    """Exact volume from the series coefficients and zigzag counts.

    cyclic/half_pi: s_coeff(n) pi^n.      cyclic/unit: 2^n s_coeff(n).
    chain/unit:     A(n)/n!.              chain/half_pi: (pi/2)^n A(n)/n!.
    """
    n = spec.n
    if spec.kind == "cyclic":
        if n < 2:
            raise ValueError("the cyclic volume formula requires n >= 2")
        if spec.scale == "half_pi":
            return PiMultiple(s_coeff(n), n)
        return PiMultiple(s_coeff(n) * 2**n, 0)
    chain_vol = Fraction(zigzag(n), math.factorial(n))
    if spec.scale == "unit":
        return PiMultiple(chain_vol, 0)
    return PiMultiple(chain_vol / 2**n, n)


@dataclass(frozen=True)
class McEstimate:
    """A Monte Carlo estimate: mean, standard error, and provenance."""

    mean: float
    std_error: float
    samples: int
    seed: int

    def as_json_dict(self) -> dict:
        return {
            "mean": self.mean,
            "std_error": self.std_error,
            "samples": self.samples,
            "seed": self.seed,
        }


def _uniform_chunks(seed: int, samples: int, dim: int) -> Iterator[np.ndarray]:
    """Uniform (0,1) sample chunks; chunk i uses a Philox stream keyed (seed, i)."""
    produced = 0
    index = 0
    while produced < samples:
        size = min(CHUNK_SAMPLES, samples - produced)
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence((seed, index))))
        yield rng.random((size, dim))
        produced += size
        index += 1


def mc_volume(spec: PolytopeSpec, samples: int, seed: int) -> McEstimate:
    """Indicator Monte Carlo volume over the bounding box (0, bound)^n.

    Deterministic for fixed (seed, samples) regardless of scheduling, by the
    fixed chunked seeding.
    """
    if samples < 10**4:
        raise ValueError("use at least 10^4 samples")
    bound = spec.bound
    hits = 0
    for chunk in _uniform_chunks(seed, samples, spec.n):
        hits += int(spec.contains(chunk * bound).sum())
    p_hat = hits / samples
    box = bound**spec.n
    std_error = math.sqrt(p_hat * (1.0 - p_hat) / samples) * box
    return McEstimate(p_hat * box, std_error, samples, seed)


def cube_integrand(x: Sequence[float], n: int) -> float:
    """1 / (1 - (prod x)^2) for even n, 1 / (1 + (prod x)^2) for odd n."""
    t = math.prod(x)
    sign = -1.0 if n % 2 == 0 else 1.0
    return 1.0 / (1.0 + sign * t * t)


def mc_cube_integral(n: int, samples: int, seed: int) -> McEstimate:
    """Mean-of-integrand estimate of the n-cube integral equal to S(n)."""
    if n < 2:
        raise ValueError("the cube integral route requires n >= 2")
    if samples < 10**4:
        raise ValueError("use at least 10^4 samples")
    sign = -1.0 if n % 2 == 0 else 1.0
    total = 0.0
    total_sq = 0.0
    for chunk in _uniform_chunks(seed, samples, n):
        t = chunk.prod(axis=1)
        f = 1.0 / (1.0 + sign * t * t)
        total += float(f.sum())
        total_sq += float((f * f).sum())
    mean = total / samples
    variance = max(total_sq / samples - mean * mean, 0.0)
    return McEstimate(mean, math.sqrt(variance / samples), samples, seed)


def t_to_v_transform(t: Sequence[float]) -> tuple[float, ...]:
    """Flip even-indexed coordinates: v_i = t_i (i odd), 1 - t_i (i even), 1-based.

    An involution with Jacobian +-1; it carries the alternating-chain
    inequalities to the pairwise constraints v_i + v_{i+1} < 1.
    """
    return tuple(x if i % 2 == 0 else 1.0 - x for i, x in enumerate(t))


def forward_map(u: Sequence[float]) -> tuple[float, ...]:
    """x_i = sin(u_i) / cos(u_{i+1}) with cyclic indexing; maps into (0,1)^n.

    The input must lie strictly inside the open region u_i > 0,
    u_i + u_{i+1} < pi/2 (cyclically); anything else raises.
    """
    n = len(u)
    if n < 1:
        raise ValueError("empty point")
    for i in range(n):
        if not (u[i] > 0.0 and u[i] + u[(i + 1) % n] < HALF_PI):
            raise ValueError("point is not strictly inside the open polytope")
    return tuple(math.sin(u[i]) / math.cos(u[(i + 1) % n]) for i in range(n))


def jacobian_formula(x: Sequence[float]) -> float:
    """Jacobian determinant at image point x: 1 - (prod x)^2 for even n, 1 + for odd."""
    t = math.prod(x)
    return 1.0 - t * t if len(x) % 2 == 0 else 1.0 + t * t


def jacobian_fd(u: Sequence[float], h: float = 1e-6) -> float:
    """Central-difference Jacobian determinant of the forward map at u."""
    n = len(u)
    jac = np.empty((n, n))
    for j in range(n):
        up = list(u)
        down = list(u)
        up[j] += h
        down[j] -= h
        fu = forward_map(up)
        fd = forward_map(down)
        for i in range(n):
            jac[i, j] = (fu[i] - fd[i]) / (2.0 * h)
    return float(np.linalg.det(jac))


def contraction_map(x: float, u: float) -> float:
    """The basic contraction f_x(u) = arcsin(x cos u) on (0, pi/2), for 0 < x < 1."""
    return math.asin(x * math.cos(u))


def inverse_map(
    x: Sequence[float], tol: float = 1e-13, max_iter: int = 200
) -> tuple[float, ...]:
    """The unique preimage of x in (0,1)^n under the forward map.

    Iterates the composite f_{x_1} o ... o f_{x_n} on u_1 from pi/4 until
    successive iterates differ by less than tol, then back-substitutes
    u_i = f_{x_i}(u_{i+1}).  The composite is a strict contraction, but its
    rate approaches 1 near the corner (1,...,1), so slow inputs raise
    instead of returning a silently unconverged point.
    """
    n = len(x)
    if n < 1:
        raise ValueError("empty point")
    for xi in x:
        if not 0.0 < xi < 1.0:
            raise ValueError("all coordinates must lie in the open interval (0, 1)")
    u1 = math.pi / 4
    for _ in range(max_iter):
        nxt = u1
        for xi in reversed(x):
            nxt = contraction_map(xi, nxt)
        if abs(nxt - u1) < tol:
            u1 = nxt
            break
        u1 = nxt
    else:
        raise RuntimeError(
            f"fixed-point iteration did not converge in {max_iter} iterations "
            "(contraction rate approaches 1 near the all-ones corner)"
        )
    u = [0.0] * n
    u[0] = u1
    nxt = u1
    for i in range(n - 1, 0, -1):
        nxt = contraction_map(x[i], nxt)
        u[i] = nxt
    return tuple(u)


def arctangent_check() -> tuple[PiMultiple, float]:
    """The n = 1 case: S(1) = pi/4 exactly, and a quadrature of the arctangent integral.

    Returns the exact pi multiple and a 64-node Gauss-Legendre evaluation of
    the integral of 1/(1+x^2) over (0,1); the two agree to well under 1e-10.
    """
    nodes, weights = np.polynomial.legendre.leggauss(64)
    xs = 0.5 * (nodes + 1.0)
    ws = 0.5 * weights
    numeric = float(np.sum(ws / (1.0 + xs * xs)))
    return PiMultiple(Fraction(1, 4), 1), numeric
