"""Quantum correlation networks for the finite Kitaev chain.

Exact diagonalization of the p-wave chain, pairwise correlation networks
(mutual information, concurrence, l1 coherence), network metrics, and the
closed-form factorization / zero-mode structure.
"""

from kitnet._core import (
    CapacityError,
    ChainSpec,
    ConvergenceError,
    CorrelationNetwork,
    DomainError,
    InvalidStateError,
    QuantumState,
    SymmetryViolationError,
    UnsupportedBoundaryError,
    build_network,
    concurrence,
    detect_parity_switches,
    factorization_angle,
    factorization_potential,
    factorized_odd_state,
    fidelity,
    ground_energy_analytic,
    ground_state,
    l1_coherence,
    locate_c1_point,
    min_bdg_gap,
    mutual_information,
    permutation_invariance_deviation,
    quasiparticle_spectrum,
    reduce_to_pair,
    reduce_to_site,
    von_neumann_entropy,
    zero_mode_potentials,
)

__all__ = [
    "CapacityError",
    "ChainSpec",
    "ConvergenceError",
    "CorrelationNetwork",
    "DomainError",
    "InvalidStateError",
    "QuantumState",
    "SymmetryViolationError",
    "UnsupportedBoundaryError",
    "build_network",
    "concurrence",
    "detect_parity_switches",
    "factorization_angle",
    "factorization_potential",
    "factorized_odd_state",
    "fidelity",
    "ground_energy_analytic",
    "ground_state",
    "l1_coherence",
    "locate_c1_point",
    "min_bdg_gap",
    "mutual_information",
    "permutation_invariance_deviation",
    "quasiparticle_spectrum",
    "reduce_to_pair",
    "reduce_to_site",
    "von_neumann_entropy",
    "zero_mode_potentials",
]

__version__ = "0.1.0"
