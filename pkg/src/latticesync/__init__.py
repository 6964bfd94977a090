"""Laplacian spectra and synchronizability of r-nearest-neighbor cycles and tori."""
from latticesync.errors import (
    BadDimensionCount,
    DegenerateSize,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidOverhead,
    LatticeSyncError,
    MixedParity,
    NonConvergence,
    NotSymmetric,
    SpecError,
    TooLarge,
)
from latticesync.oracle import OracleResult, jacobi_eigenvalues, verify_closed_form
from latticesync.spectra import (
    Spectrum,
    cycle_eigenvalue,
    dirichlet_sum,
    full_spectrum,
    torus_eigenvalue,
)
from latticesync.sync import (
    DiscrepancyRecord,
    PaperCase,
    SyncReport,
    connectivity,
    extremes_separable,
    paper_closed_form_R,
    sync_exact,
    verify_theorems,
)
from latticesync.topology import (
    Family,
    GraphSpec,
    build_adjacency,
    build_laplacian,
    validate_spec,
)

__version__ = "0.1.0"
