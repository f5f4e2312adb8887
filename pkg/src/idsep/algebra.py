"""Operator subalgebras generated from finite sets, and factorization tests.

A subalgebra is represented by its monomial basis: the identity, the
generators (closed under adjoints) and all products up to a degree bound,
deduplicated by matrix equality.  Two commuting subalgebras A and B are said
to factorize on a pure state when <x1 x2> = <x1><x2> for all x1 in A and
x2 in B; the test below evaluates this over all monomial pairs plus a seeded
batch of random hermitian combinations, since pairwise factorization of
monomials alone does not imply factorization of their linear spans.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NonCommutingError, NormalizationError
from .hilbert import DEFAULT_TOL, Ket, OperatorMatrix, bell_states

#: Frobenius-norm tolerance for monomial deduplication and zero-dropping.
DEDUP_TOL = 1e-10

#: Default number of random hermitian combinations sampled per subalgebra.
DEFAULT_SAMPLES = 64

VERDICT_SEPARABLE = "separable_wrt"
VERDICT_ENTANGLED = "entangled_wrt"


@dataclass
class Subalgebra:
    """Finite generating set plus its monomial basis up to a degree bound."""

    generators: list[OperatorMatrix]
    degree_bound: int
    monomials: list[OperatorMatrix]
    degrees: list[int]
    label: str = ""

    @property
    def dim(self) -> int:
        return self.monomials[0].dim


def _is_duplicate(mat: np.ndarray, pool: list[np.ndarray]) -> bool:
    return any(np.linalg.norm(mat - other) <= DEDUP_TOL for other in pool)


def generate(
    generators: list[OperatorMatrix], degree_bound: int, label: str = ""
) -> Subalgebra:
    """Monomial basis of the unital algebra spanned by products of generators.

    The generator set is first closed under adjoints.  Products of length up
    to ``degree_bound`` are collected; matrix-equal duplicates (within
    DEDUP_TOL, Frobenius) and vanishing products are dropped.
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be at least 1")
    if not generators:
        raise ValueError("need at least one generator")
    dim = generators[0].dim
    space = generators[0].space
    for g in generators:
        if g.dim != dim:
            raise DimensionMismatch("generators act on different dimensions")

    gen_mats: list[np.ndarray] = []
    for g in generators:
        for mat in (g.matrix, g.matrix.conj().T):
            if np.linalg.norm(mat) > DEDUP_TOL and not _is_duplicate(mat, gen_mats):
                gen_mats.append(mat)

    monomials: list[np.ndarray] = [np.eye(dim, dtype=np.complex128)]
    degrees: list[int] = [0]
    frontier: list[np.ndarray] = [monomials[0]]
    for depth in range(1, degree_bound + 1):
        new_frontier: list[np.ndarray] = []
        for word in frontier:
            for gen in gen_mats:
                prod = word @ gen
                if np.linalg.norm(prod) <= DEDUP_TOL:
                    continue
                if _is_duplicate(prod, monomials) or _is_duplicate(prod, new_frontier):
                    continue
                new_frontier.append(prod)
        monomials.extend(new_frontier)
        degrees.extend([depth] * len(new_frontier))
        frontier = new_frontier
        if not frontier:
            break

    ops = [OperatorMatrix(space, m) for m in monomials]
    return Subalgebra(
        generators=list(generators),
        degree_bound=degree_bound,
        monomials=ops,
        degrees=degrees,
        label=label,
    )


def subalgebras_commute(a: Subalgebra, b: Subalgebra, exact_mask=None) -> float:
    """Largest operator norm of [x, y] over monomial pairs.

    ``exact_mask`` (degree -> boolean column mask) restricts each commutator
    to the basis states on which a product of that degree acts exactly; this
    is how truncated Fock spaces are handled.
    """
    if a.dim != b.dim:
        raise DimensionMismatch("subalgebras act on different dimensions")
    worst = 0.0
    for x, dx in zip(a.monomials, a.degrees):
        for y, dy in zip(b.monomials, b.degrees):
            if dx == 0 or dy == 0:
                continue  # identity commutes with everything
            comm = x.matrix @ y.matrix - y.matrix @ x.matrix
            if exact_mask is not None:
                mask = exact_mask(dx + dy)
                if not mask.any():
                    continue
                comm = comm[:, mask]
            worst = max(worst, float(np.linalg.norm(comm, 2)))
    return worst


@dataclass
class FactorizationReport:
    """Outcome of a factorization test between two commuting subalgebras.

    ``pairs`` rows are (label1, label2, <x1 x2>, <x1>, <x2>, violation) with
    every element normalized to unit operator norm, so violations are
    scale-free.  Labels "X.mN" are monomials; "X.sN" are sampled hermitian
    combinations.  The hermitian-only maximum is tracked separately because
    general monomials need not be hermitian.
    """

    max_violation: float
    witness_pair: tuple[str, str]
    verdict: str
    tol: float
    commutator_norm: float
    max_violation_hermitian: float
    witness_pair_hermitian: tuple[str, str] | None
    pairs: list[tuple[str, str, complex, complex, complex, float]] = field(
        default_factory=list
    )


def _content_key(alg: Subalgebra) -> tuple[int, str]:
    digest = hashlib.sha256()
    for m in alg.monomials:
        digest.update(np.round(m.matrix, 9).tobytes())
    return (len(alg.monomials), digest.hexdigest())


def _evaluation_elements(
    alg: Subalgebra,
    side: str,
    rng: np.random.Generator,
    sample_count: int,
) -> list[tuple[str, np.ndarray, bool]]:
    """Unit-norm monomials plus random hermitian combinations, labeled."""
    normalized: list[np.ndarray] = []
    elements: list[tuple[str, np.ndarray, bool]] = []
    for i, mono in enumerate(alg.monomials):
        mat = mono.matrix / mono.spectral_norm()
        if _is_duplicate(mat, normalized):
            continue
        normalized.append(mat)
        hermitian = np.abs(mat - mat.conj().T).max() <= DEDUP_TOL
        elements.append((f"{side}.m{i}", mat, hermitian))
    n = len(normalized)
    coeffs = rng.standard_normal((sample_count, n)) + 1j * rng.standard_normal(
        (sample_count, n)
    )
    for j in range(sample_count):
        combo = sum(c * m for c, m in zip(coeffs[j], normalized))
        combo = 0.5 * (combo + combo.conj().T)
        norm = np.linalg.norm(combo, 2)
        if norm <= DEDUP_TOL:
            continue
        elements.append((f"{side}.s{j}", combo / norm, True))
    return elements


def factorization_test(
    state: Ket,
    a: Subalgebra,
    b: Subalgebra,
    tol: float = DEFAULT_TOL,
    sample_count: int = DEFAULT_SAMPLES,
    seed: int = 42,
    exact_mask=None,
) -> FactorizationReport:
    """Check <x1 x2> = <x1><x2> on ``state`` over two commuting subalgebras.

    Raises NonCommutingError when the subalgebras fail to commute within tol;
    verdicts are only meaningful for commuting pairs.  The random-combination
    sampling is deterministic in ``seed`` and symmetric under swapping the
    two subalgebras.
    """
    if a.dim != state.dim or b.dim != state.dim:
        raise DimensionMismatch("state and subalgebras live in different dimensions")
    # input validation never demands more than float precision can deliver
    gate = max(tol, DEFAULT_TOL)
    if abs(state.norm() - 1.0) > gate:
        raise NormalizationError("factorization_test requires a normalized state")
    commutator_norm = subalgebras_commute(a, b, exact_mask=exact_mask)
    if commutator_norm > gate:
        raise NonCommutingError(
            f"subalgebras do not commute (worst norm {commutator_norm:.3e})"
        )

    rng = np.random.default_rng(seed)
    if _content_key(a) <= _content_key(b):
        elements_a = _evaluation_elements(a, "A", rng, sample_count)
        elements_b = _evaluation_elements(b, "B", rng, sample_count)
    else:
        elements_b = _evaluation_elements(b, "B", rng, sample_count)
        elements_a = _evaluation_elements(a, "A", rng, sample_count)

    psi = state.amplitudes
    # Cache M|psi> and Mdag|psi> once per element; then each pair is two dots.
    cache_a = [
        (lab, mat @ psi, mat.conj().T @ psi, herm) for lab, mat, herm in elements_a
    ]
    cache_b = [(lab, mat @ psi, herm) for lab, mat, herm in elements_b]

    pairs = []
    max_violation, witness = 0.0, ("", "")
    max_h, witness_h = 0.0, None
    for lab1, v1, v1d, herm1 in cache_a:
        w1 = complex(np.vdot(psi, v1))
        for lab2, v2, herm2 in cache_b:
            w2 = complex(np.vdot(psi, v2))
            w12 = complex(np.vdot(v1d, v2))  # <psi| x1 x2 |psi>
            violation = abs(w12 - w1 * w2)
            pairs.append((lab1, lab2, w12, w1, w2, violation))
            if violation > max_violation:
                max_violation, witness = violation, (lab1, lab2)
            if herm1 and herm2 and violation > max_h:
                max_h, witness_h = violation, (lab1, lab2)

    verdict = VERDICT_ENTANGLED if max_violation > tol else VERDICT_SEPARABLE
    return FactorizationReport(
        max_violation=max_violation,
        witness_pair=witness,
        verdict=verdict,
        tol=tol,
        commutator_norm=commutator_norm,
        max_violation_hermitian=max_h,
        witness_pair_hermitian=witness_h,
        pairs=pairs,
    )


def bell_subalgebras(degree_bound: int = 4) -> tuple[Subalgebra, Subalgebra]:
    """The two commuting subalgebras generated by Bell-state projectors.

    The first is generated by the projectors onto the two "plus" Bell states,
    the second by those onto the two "minus" ones (identity adjoined).  All
    four projectors are mutually orthogonal, so each subalgebra is
    commutative and the two commute with each other.
    """
    states = bell_states()
    plus = generate(
        [states["psi_plus"].outer(), states["phi_plus"].outer()],
        degree_bound,
        label="plus Bell projectors",
    )
    minus = generate(
        [states["psi_minus"].outer(), states["phi_minus"].outer()],
        degree_bound,
        label="minus Bell projectors",
    )
    return plus, minus
