"""Heat kernels and heat-trace coefficients for mixed Dirichlet/Neumann problems."""

from ._zaremba import (
    BoundaryCondition,
    DomainError,
    NumericalError,
    SectorSpec,
    VertexCondition,
    __version__,
    bessel_j,
    bessel_j_zeros,
    dirichlet_kernel,
    eigenvalues,
    erfcx,
    extract_constant,
    extract_strip_coefficient,
    heat_trace,
    mixed_diagonal,
    neumann_kernel,
    psi,
    robin_w,
    sigma0_b2,
    strip_trace,
    verify,
)

__all__ = [
    "BoundaryCondition",
    "DomainError",
    "NumericalError",
    "SectorSpec",
    "VertexCondition",
    "__version__",
    "bessel_j",
    "bessel_j_zeros",
    "dirichlet_kernel",
    "eigenvalues",
    "erfcx",
    "extract_constant",
    "extract_strip_coefficient",
    "heat_trace",
    "mixed_diagonal",
    "neumann_kernel",
    "psi",
    "robin_w",
    "sigma0_b2",
    "strip_trace",
    "verify",
]
