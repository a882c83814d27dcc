"""Pure-state vectors, basis indexing, and local-unitary actions.

Convention: qubit 1 is the most significant bit of the basis index, so the
amplitude of |i1 i2 ... in> sits at array position sum_k i_k * 2**(n-k).
Reshaping the vector to shape (2,)*n therefore maps qubit k to axis k-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidPermutation,
    NonFinite,
    NonUnitary,
    QubitOutOfRange,
    ZeroVector,
)

MIN_QUBITS = 2
MAX_QUBITS = 6

_UNITARY_TOL = 1e-12
_ZERO_FLOOR = 1e-300


def index_of_bits(bits: Sequence[int]) -> int:
    """Array position of basis label (i1, ..., in), qubit 1 most significant."""
    pos = 0
    for b in bits:
        pos = (pos << 1) | int(b)
    return pos


def bits_of_index(index: int, n: int) -> tuple[int, ...]:
    """Basis label (i1, ..., in) of an array position."""
    return tuple((index >> (n - k)) & 1 for k in range(1, n + 1))


@dataclass(frozen=True, eq=False)
class PureState:
    """Dense complex amplitude vector over the computational basis."""

    n_qubits: int
    amps: np.ndarray
    normalized: bool = False

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to (2,)*n; axis k-1 is qubit k."""
        return self.amps.reshape((2,) * self.n_qubits)

    def amplitude(self, bits: Sequence[int]) -> complex:
        return complex(self.amps[index_of_bits(bits)])


@dataclass(frozen=True, eq=False)
class LocalUnitary:
    """2x2 unitary acting on one qubit; `special` marks unit determinant."""

    matrix: np.ndarray
    qubit: int
    special: bool = False


def make_state(n: int, amps: Iterable[complex]) -> PureState:
    """Build a state from raw amplitudes; no normalization is applied."""
    if not MIN_QUBITS <= n <= MAX_QUBITS:
        raise QubitOutOfRange(f"n_qubits must be in [{MIN_QUBITS}, {MAX_QUBITS}], got {n}")
    vec = np.asarray(list(amps) if not isinstance(amps, np.ndarray) else amps,
                     dtype=np.complex128).ravel().copy()
    if vec.size != (1 << n):
        raise DimensionMismatch(f"need {1 << n} amplitudes for n={n}, got {vec.size}")
    if not np.all(np.isfinite(vec.view(np.float64))):
        raise NonFinite("amplitudes must be finite")
    if np.max(np.abs(vec)) < _ZERO_FLOOR:
        raise ZeroVector("all amplitudes vanish")
    vec.setflags(write=False)
    return PureState(n_qubits=n, amps=vec, normalized=False)


def normalize(state: PureState) -> PureState:
    """Rescale to unit Euclidean norm, preserving direction."""
    norm = state.norm
    if norm < _ZERO_FLOOR:
        raise ZeroVector("cannot normalize a zero vector")
    vec = state.amps / norm
    vec.setflags(write=False)
    return PureState(state.n_qubits, vec, normalized=True)


def local_unitary(matrix: np.ndarray, qubit: int, special: bool = False) -> LocalUnitary:
    """Validate and wrap a 2x2 unitary for one qubit."""
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (2, 2):
        raise NonUnitary(f"expected a 2x2 matrix, got shape {m.shape}")
    if np.max(np.abs(m.conj().T @ m - np.eye(2))) > _UNITARY_TOL:
        raise NonUnitary("matrix is not unitary within 1e-12")
    if special and abs(np.linalg.det(m) - 1.0) > _UNITARY_TOL:
        raise NonUnitary("special unitary must have unit determinant")
    m = m.copy()
    m.setflags(write=False)
    return LocalUnitary(matrix=m, qubit=qubit, special=special)


def apply_local_unitary(state: PureState, u: LocalUnitary) -> PureState:
    """Act with u.matrix on the indicated qubit."""
    n = state.n_qubits
    if not 1 <= u.qubit <= n:
        raise QubitOutOfRange(f"qubit {u.qubit} outside 1..{n}")
    if np.max(np.abs(u.matrix.conj().T @ u.matrix - np.eye(2))) > _UNITARY_TOL:
        raise NonUnitary("matrix is not unitary within 1e-12")
    ax = u.qubit - 1
    psi = np.tensordot(u.matrix, state.tensor(), axes=([1], [ax]))
    psi = np.moveaxis(psi, 0, ax)
    vec = np.ascontiguousarray(psi).reshape(-1)
    vec.setflags(write=False)
    return PureState(n, vec, normalized=state.normalized)


def permute_qubits(state: PureState, perm: Sequence[int]) -> PureState:
    """Relabel qubits: the qubit at position k moves to position perm[k-1]."""
    n = state.n_qubits
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidPermutation(f"{perm} is not a permutation of 1..{n}")
    # output axis j-1 receives the input axis that maps to position j
    axes = [perm.index(j) for j in range(1, n + 1)]
    vec = np.ascontiguousarray(state.tensor().transpose(axes)).reshape(-1)
    vec.setflags(write=False)
    return PureState(n, vec, normalized=state.normalized)


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for old, new in enumerate(perm, start=1):
        inv[new - 1] = old
    return tuple(inv)


def random_state(n: int, seed) -> PureState:
    """Unit vector with i.i.d. standard complex Gaussian amplitudes."""
    if not MIN_QUBITS <= n <= MAX_QUBITS:
        raise QubitOutOfRange(f"n_qubits must be in [{MIN_QUBITS}, {MAX_QUBITS}], got {n}")
    rng = np.random.default_rng(seed)
    vec = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return normalize(make_state(n, vec))


def random_special_unitary(seed, qubit: int) -> LocalUnitary:
    """Haar-like SU(2) sample: U = [[a, -conj(b)], [b, conj(a)]], |a|^2+|b|^2 = 1."""
    rng = np.random.default_rng(seed)
    a, b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    r = np.hypot(abs(a), abs(b))
    a, b = a / r, b / r
    m = np.array([[a, -np.conj(b)], [b, np.conj(a)]])
    return local_unitary(m, qubit, special=True)


def inner(lhs: PureState, rhs: PureState) -> complex:
    """Hermitian inner product <lhs|rhs>."""
    if lhs.n_qubits != rhs.n_qubits:
        raise DimensionMismatch("states have different qubit counts")
    return complex(np.vdot(lhs.amps, rhs.amps))
