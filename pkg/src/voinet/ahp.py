"""Pairwise comparison matrices and principal-eigenvector priority weights.

Attribute priorities are derived with the analytic hierarchy process:
pairwise scores on the Saaty scale populate a positive reciprocal matrix,
the normalized principal eigenvector gives the weights, and the
consistency ratio gates the quality of the chosen scores.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

SAATY_MIN = 1.0 / 9.0
SAATY_MAX = 9.0

RECIPROCITY_TOL = 1e-12

# Random consistency index per matrix size. Values for n >= 4 are the
# standard published table; sizes without an entry are rejected.
RANDOM_INDEX: dict[int, float] = {
    3: 0.58,
    4: 0.90,
    5: 1.12,
    6: 1.24,
    7: 1.32,
    8: 1.41,
    9: 1.45,
    10: 1.49,
}

CONSISTENCY_LIMIT = 0.1


@dataclass(frozen=True)
class ComparisonMatrix:
    """Positive reciprocal matrix of pairwise attribute scores.

    Entries must lie on the Saaty scale [1/9, 9], the diagonal must be
    exactly 1, and ``entries[j][k] * entries[k][j]`` must equal 1 within
    ``RECIPROCITY_TOL``.
    """

    labels: tuple[str, ...]
    entries: np.ndarray

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) < 2:
            raise ValueError(f"need at least 2 attributes, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate attribute labels in {labels}")
        entries = np.array(self.entries, dtype=float)
        n = len(labels)
        if entries.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} matrix, got shape {entries.shape}")
        for j in range(n):
            if entries[j, j] != 1.0:
                raise ValueError(f"diagonal entry for {labels[j]!r} is {entries[j, j]}, must be 1")
            for k in range(n):
                score = entries[j, k]
                if not (SAATY_MIN <= score <= SAATY_MAX):
                    raise ValueError(
                        f"score {score:g} for pair ({labels[j]}, {labels[k]}) is outside "
                        f"the Saaty range [1/9, 9]"
                    )
                if j < k and abs(entries[j, k] * entries[k, j] - 1.0) > RECIPROCITY_TOL:
                    raise ValueError(
                        f"entries for pair ({labels[j]}, {labels[k]}) are not reciprocal: "
                        f"{entries[j, k]!r} vs {entries[k, j]!r}"
                    )
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class EigenSolution:
    """Dominant eigenvalue and the unit-sum normalized eigenvector."""

    lambda_max: float
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        weights = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if abs(sum(weights) - 1.0) > 1e-12:
            raise ValueError(f"weights sum to {sum(weights)!r}, expected 1")
        if any(w < 0.0 or w > 1.0 for w in weights):
            raise ValueError(f"weights outside [0, 1]: {weights}")


@dataclass(frozen=True)
class ConsistencyReport:
    """Consistency check of an eigensolution against the random index."""

    consistency_index: float
    random_index: float
    consistency_ratio: float
    acceptable: bool


def build_matrix(
    labels: Sequence[str], upper_triangle: Mapping[tuple[str, str], float]
) -> ComparisonMatrix:
    """Build a comparison matrix from its upper-triangle scores.

    Args:
        labels: attribute names, in matrix row order.
        upper_triangle: score for each pair (labels[j], labels[k]) with
            j < k; the diagonal is fixed at 1 and the lower triangle is
            filled with reciprocals.

    Raises:
        ValueError: if a score is off the Saaty scale, a pair is missing
            or unknown, or fewer than 2 labels are given.
    """
    labels = tuple(labels)
    if len(labels) < 2:
        raise ValueError(f"need at least 2 attributes, got {len(labels)}")
    index = {label: i for i, label in enumerate(labels)}
    if len(index) != len(labels):
        raise ValueError(f"duplicate attribute labels in {labels}")
    n = len(labels)
    entries = np.eye(n)
    seen = set()
    for (a, b), score in upper_triangle.items():
        if a not in index or b not in index:
            raise ValueError(f"unknown attribute pair ({a}, {b}); labels are {labels}")
        j, k = index[a], index[b]
        if j >= k:
            raise ValueError(f"pair ({a}, {b}) is not in the upper triangle; list it as ({b}, {a})")
        if not (SAATY_MIN <= score <= SAATY_MAX):
            raise ValueError(
                f"score {score:g} for pair ({a}, {b}) is outside the Saaty range [1/9, 9]"
            )
        entries[j, k] = score
        entries[k, j] = 1.0 / score
        seen.add((j, k))
    missing = [(labels[j], labels[k]) for j in range(n) for k in range(j + 1, n) if (j, k) not in seen]
    if missing:
        raise ValueError(f"missing comparison scores for pairs {missing}")
    return ComparisonMatrix(labels, entries)


def principal_eigenvector(
    m: ComparisonMatrix,
    tol: float = 1e-10,
    max_iter: int = 10_000,
    start: Sequence[float] | None = None,
) -> EigenSolution:
    """Dominant eigenpair of a comparison matrix by power iteration.

    The iterate is renormalized to unit sum each step and the eigenvalue
    is estimated with the Rayleigh quotient. Iteration stops when
    ``max|M w - lambda w| <= tol * lambda``.

    Args:
        m: a valid comparison matrix.
        tol: relative residual tolerance, > 0.
        max_iter: iteration cap.
        start: optional initial guess, any positive vector; defaults to
            the uniform vector. Scaling the guess does not change the
            result.

    Raises:
        RuntimeError: if the residual does not reach tol within max_iter.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    n = m.n
    if start is None:
        w = np.full(n, 1.0 / n)
    else:
        w = np.array(start, dtype=float)
        if w.shape != (n,) or np.any(w <= 0):
            raise ValueError(f"start vector must be {n} positive entries")
        w = w / w.sum()
    entries = m.entries
    residual = np.inf
    for _ in range(max_iter):
        y = entries @ w
        lam = float(w @ y) / float(w @ w)
        residual = float(np.max(np.abs(y - lam * w)))
        if residual <= tol * lam:
            return EigenSolution(lambda_max=lam, weights=tuple(w))
        w = y / y.sum()
    raise RuntimeError(
        f"power iteration did not converge in {max_iter} iterations (residual {residual:.3e})"
    )


def consistency(sol: EigenSolution, n: int) -> ConsistencyReport:
    """Consistency index and ratio of an eigensolution for size n.

    The ratio compares the consistency index (lambda_max - n)/(n - 1)
    against the random index for n; matrices with a ratio below 0.1 are
    acceptably consistent.

    Raises:
        ValueError: if no random-index entry exists for n.
    """
    if n not in RANDOM_INDEX:
        raise ValueError(
            f"no random consistency index for n={n}; supported sizes are "
            f"{sorted(RANDOM_INDEX)}"
        )
    c_i = (sol.lambda_max - n) / (n - 1)
    r_i = RANDOM_INDEX[n]
    c_r = c_i / r_i
    return ConsistencyReport(
        consistency_index=c_i,
        random_index=r_i,
        consistency_ratio=c_r,
        acceptable=c_r < CONSISTENCY_LIMIT,
    )
