"""Finite-dimensional complex linear algebra for quantum states and observables.

Kets and dense operators over labeled orthonormal bases, tensor products,
Schmidt decomposition, partial trace and von Neumann entropy.  Entropies are
in bits (base-2 logarithm).  Tensor products are row-major: the left factor
supplies the major index.  All objects are treated as immutable after
construction and are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    NormalizationError,
    NotPositiveSemidefinite,
    TraceError,
    WeightError,
)

#: Default numeric tolerance for equality assertions and input validation.
DEFAULT_TOL = 1e-9

#: Eigenvalues at or below this floor are treated as exact zeros in entropies,
#: avoiding 0*log(0).
EIGENVALUE_FLOOR = 1e-12


@dataclass(frozen=True)
class HilbertSpace:
    """A finite-dimensional complex space with an ordered, labeled basis."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise ValueError("a Hilbert space needs at least one basis label")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be unique")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @classmethod
    def of_dim(cls, dim: int, prefix: str = "e") -> "HilbertSpace":
        if dim < 1:
            raise ValueError("dimension must be positive")
        return cls(tuple(f"{prefix}{i}" for i in range(dim)))

    def tensor(self, other: "HilbertSpace") -> "HilbertSpace":
        """Product space; labels are joined left-major as "a,b"."""
        return HilbertSpace(
            tuple(f"{a},{b}" for a in self.labels for b in other.labels)
        )

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis label {label!r}") from None


class Ket:
    """State vector holding complex amplitudes in the basis of its space."""

    __slots__ = ("space", "amplitudes")

    def __init__(self, space: HilbertSpace, amplitudes) -> None:
        amps = np.array(amplitudes, dtype=np.complex128)
        if amps.ndim != 1:
            raise DimensionMismatch("ket amplitudes must be one-dimensional")
        if amps.shape[0] != space.dim:
            raise DimensionMismatch(
                f"expected {space.dim} amplitudes, got {amps.shape[0]}"
            )
        self.space = space
        self.amplitudes = amps

    @property
    def dim(self) -> int:
        return self.space.dim

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "Ket":
        n = self.norm()
        if n <= EIGENVALUE_FLOOR:
            raise NormalizationError("cannot normalize a (near-)zero vector")
        return Ket(self.space, self.amplitudes / n)

    def inner(self, other: "Ket") -> complex:
        """<self|other>, antilinear in self."""
        if other.dim != self.dim:
            raise DimensionMismatch("kets live in different dimensions")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def outer(self, other: "Ket | None" = None) -> "OperatorMatrix":
        """|self><other| (|self><self| when other is omitted)."""
        bra = self if other is None else other
        if bra.dim != self.dim:
            raise DimensionMismatch("kets live in different dimensions")
        return OperatorMatrix(
            self.space, np.outer(self.amplitudes, np.conj(bra.amplitudes))
        )

    def __add__(self, other: "Ket") -> "Ket":
        if other.dim != self.dim:
            raise DimensionMismatch("kets live in different dimensions")
        return Ket(self.space, self.amplitudes + other.amplitudes)

    def __sub__(self, other: "Ket") -> "Ket":
        return self + (-1.0) * other

    def __mul__(self, scalar: complex) -> "Ket":
        return Ket(self.space, self.amplitudes * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "Ket":
        return self * (1.0 / complex(scalar))

    def __neg__(self) -> "Ket":
        return self * (-1.0)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Ket(dim={self.dim}, amplitudes={np.round(self.amplitudes, 6)})"


class OperatorMatrix:
    """Dense complex matrix acting on a HilbertSpace."""

    __slots__ = ("space", "matrix")

    def __init__(
        self,
        space: HilbertSpace,
        matrix,
        assert_hermitian: bool = False,
        tol: float = DEFAULT_TOL,
    ) -> None:
        mat = np.array(matrix, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DimensionMismatch("operator matrix must be square")
        if mat.shape[0] != space.dim:
            raise DimensionMismatch(
                f"operator of size {mat.shape[0]} does not fit space of dim {space.dim}"
            )
        if assert_hermitian and np.abs(mat - mat.conj().T).max() > tol:
            raise ValueError("matrix declared hermitian but is not, within tol")
        self.space = space
        self.matrix = mat

    @property
    def dim(self) -> int:
        return self.space.dim

    def dagger(self) -> "OperatorMatrix":
        return OperatorMatrix(self.space, self.matrix.conj().T)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def is_hermitian(self, tol: float = DEFAULT_TOL) -> bool:
        return bool(np.abs(self.matrix - self.matrix.conj().T).max() <= tol)

    def spectral_norm(self) -> float:
        """Operator norm (largest singular value)."""
        return float(np.linalg.norm(self.matrix, 2))

    def apply(self, ket: Ket) -> Ket:
        if ket.dim != self.dim:
            raise DimensionMismatch("operator and ket dimensions differ")
        return Ket(ket.space, self.matrix @ ket.amplitudes)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if other.dim != self.dim:
            raise DimensionMismatch("operator dimensions differ")
        return OperatorMatrix(self.space, self.matrix @ other.matrix)

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if other.dim != self.dim:
            raise DimensionMismatch("operator dimensions differ")
        return OperatorMatrix(self.space, self.matrix + other.matrix)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return self + (-1.0) * other

    def __mul__(self, scalar: complex) -> "OperatorMatrix":
        return OperatorMatrix(self.space, self.matrix * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "OperatorMatrix":
        return self * (1.0 / complex(scalar))

    def __neg__(self) -> "OperatorMatrix":
        return self * (-1.0)

    def __repr__(self) -> str:  # pragma: no cover
        return f"OperatorMatrix(dim={self.dim})"


@dataclass
class SchmidtForm:
    """Result of a Schmidt decomposition.

    ``coefficients`` are nonnegative and descending; the vector lists are
    orthonormal and of equal length min(d1, d2).
    """

    coefficients: np.ndarray
    left_vectors: list[Ket]
    right_vectors: list[Ket]

    def reconstruct_amplitudes(self) -> np.ndarray:
        """Amplitudes of sum_j c_j |u_j> (x) |v_j> in the product basis."""
        d1 = self.left_vectors[0].dim
        d2 = self.right_vectors[0].dim
        out = np.zeros(d1 * d2, dtype=np.complex128)
        for c, u, v in zip(self.coefficients, self.left_vectors, self.right_vectors):
            out += c * np.kron(u.amplitudes, v.amplitudes)
        return out


def identity_op(space: HilbertSpace) -> OperatorMatrix:
    return OperatorMatrix(space, np.eye(space.dim))


def basis_ket(space: HilbertSpace, which: int | str) -> Ket:
    """Basis vector selected by index or label."""
    index = space.index_of(which) if isinstance(which, str) else int(which)
    if not 0 <= index < space.dim:
        raise DimensionMismatch(f"basis index {index} out of range")
    amps = np.zeros(space.dim, dtype=np.complex128)
    amps[index] = 1.0
    return Ket(space, amps)


def qubit() -> HilbertSpace:
    return HilbertSpace(("0", "1"))


def sigma_x() -> OperatorMatrix:
    return OperatorMatrix(qubit(), [[0, 1], [1, 0]])


def sigma_y() -> OperatorMatrix:
    return OperatorMatrix(qubit(), [[0, -1j], [1j, 0]])


def sigma_z() -> OperatorMatrix:
    return OperatorMatrix(qubit(), [[1, 0], [0, -1]])


def tensor_ket(v: Ket, w: Ket) -> Ket:
    """Kronecker product of two kets, left index major."""
    return Ket(v.space.tensor(w.space), np.kron(v.amplitudes, w.amplitudes))


def tensor_op(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    """Kronecker product of two operators: (A (x) B)(v (x) w) = Av (x) Bw."""
    return OperatorMatrix(a.space.tensor(b.space), np.kron(a.matrix, b.matrix))


def bell_states() -> dict[str, Ket]:
    """The four maximally entangled two-qubit states.

    Keys: psi_plus, psi_minus (antisymmetric-flavored pair of |01>, |10>) and
    phi_plus, phi_minus (pair of |00>, |11>).
    """
    q = qubit()
    zero, one = basis_ket(q, 0), basis_ket(q, 1)
    s = 1.0 / np.sqrt(2.0)
    return {
        "psi_plus": s * (tensor_ket(zero, one) + tensor_ket(one, zero)),
        "psi_minus": s * (tensor_ket(zero, one) - tensor_ket(one, zero)),
        "phi_plus": s * (tensor_ket(zero, zero) + tensor_ket(one, one)),
        "phi_minus": s * (tensor_ket(zero, zero) - tensor_ket(one, one)),
    }


def schmidt_decompose(
    state: Ket, d1: int, d2: int, tol: float = DEFAULT_TOL
) -> SchmidtForm:
    """Schmidt decomposition of a normalized bipartite ket.

    The amplitude vector is reshaped to a d1 x d2 matrix (left index major)
    and singular-value decomposed; the singular values are the Schmidt
    coefficients, in descending order.
    """
    if d1 * d2 != state.dim:
        raise DimensionMismatch(f"cannot split dim {state.dim} as {d1} x {d2}")
    if abs(state.norm() - 1.0) > tol:
        raise NormalizationError("schmidt_decompose requires a normalized state")
    mat = state.amplitudes.reshape(d1, d2)
    u, s, vh = np.linalg.svd(mat)
    k = min(d1, d2)
    left_space = HilbertSpace.of_dim(d1, prefix="u")
    right_space = HilbertSpace.of_dim(d2, prefix="v")
    left = [Ket(left_space, u[:, j]) for j in range(k)]
    right = [Ket(right_space, vh[j, :]) for j in range(k)]
    return SchmidtForm(coefficients=s[:k], left_vectors=left, right_vectors=right)


def is_separable_pure(state: Ket, d1: int, d2: int, tol: float = DEFAULT_TOL) -> bool:
    """True iff the state is a product state across the d1 x d2 split.

    Criterion: the second Schmidt coefficient does not exceed tol.
    """
    form = schmidt_decompose(state, d1, d2, tol=tol)
    if form.coefficients.shape[0] < 2:
        return True
    return bool(form.coefficients[1] <= tol)


def partial_trace(
    rho: OperatorMatrix,
    d1: int,
    d2: int,
    keep: str = "first",
    tol: float = DEFAULT_TOL,
) -> OperatorMatrix:
    """Trace out one factor of a density matrix on a d1 x d2 product space."""
    if keep not in ("first", "second"):
        raise ValueError("keep must be 'first' or 'second'")
    if d1 * d2 != rho.dim:
        raise DimensionMismatch(f"cannot split dim {rho.dim} as {d1} x {d2}")
    mat = rho.matrix
    if np.abs(mat - mat.conj().T).max() > tol:
        raise ValueError("partial_trace expects a hermitian matrix")
    if abs(np.trace(mat) - 1.0) > tol:
        raise TraceError("partial_trace expects a unit-trace matrix")
    blocks = mat.reshape(d1, d2, d1, d2)
    if keep == "first":
        reduced = np.einsum("ijkj->ik", blocks)
        space = HilbertSpace.of_dim(d1, prefix="p")
    else:
        reduced = np.einsum("ijil->jl", blocks)
        space = HilbertSpace.of_dim(d2, prefix="p")
    return OperatorMatrix(space, reduced)


def von_neumann_entropy(rho: OperatorMatrix, tol: float = DEFAULT_TOL) -> float:
    """Entropy -sum_p p log2(p) over eigenvalues above EIGENVALUE_FLOOR."""
    mat = rho.matrix
    if np.abs(mat - mat.conj().T).max() > tol:
        raise ValueError("entropy expects a hermitian matrix")
    evals = np.linalg.eigvalsh(mat)
    if evals.min() < -tol:
        raise NotPositiveSemidefinite(
            f"matrix has negative eigenvalue {evals.min():.3e}"
        )
    p = evals[evals > EIGENVALUE_FLOOR]
    if p.size == 0:
        return 0.0
    return float(max(0.0, -np.sum(p * np.log2(p))))


def expectation(state: Ket, op: OperatorMatrix) -> complex:
    """<state|op|state>; real within tol when op is hermitian."""
    if op.dim != state.dim:
        raise DimensionMismatch("state and operator dimensions differ")
    return complex(np.vdot(state.amplitudes, op.matrix @ state.amplitudes))


def mixed_expectation(
    decomposition: Sequence[tuple[float, Ket]],
    op: OperatorMatrix,
    tol: float = DEFAULT_TOL,
) -> complex:
    """Expectation of op on an explicitly given convex mixture of pure states."""
    weights = np.array([w for w, _ in decomposition], dtype=float)
    if weights.size == 0 or weights.min() < -tol or abs(weights.sum() - 1.0) > tol:
        raise WeightError("weights must be nonnegative and sum to one")
    return complex(sum(w * expectation(psi, op) for w, psi in decomposition))
