"""Quantum mechanics on the non-commutative plane over a truncated Fock space."""

from ._core import (
    ConfigError,
    ConsistencyError,
    ConvergenceError,
    DegenerateOscillatorError,
    MeasurementError,
    ModelParams,
    NcqmError,
    NumericalError,
    QuantumState,
    TruncationError,
    UsageError,
    ValidationError,
    alpha,
    coherent_state,
    energy,
    evolve,
    excited_state,
    ground_probability,
    ground_state,
    lambdas,
    lz_expectation,
    min_ground_cutoff,
    plane_wave,
    probability,
    probability_grid,
    run_suite,
    spectrum,
    suite_names,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
