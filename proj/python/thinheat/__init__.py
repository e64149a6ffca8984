"""Spectral heat flow on thin rectangular plates."""

from ._core import (
    EigenPair,
    EigenRow,
    ErrorCurve,
    GridField,
    GridField1D,
    IOError,
    NumericError,
    SpectralState,
    __version__,
    choose_truncation,
    convergence_report_json,
    eigen_convergence,
    eigenfunction1d,
    eigenfunction_physical,
    eigenfunction_rescaled,
    eigenvalue,
    eigenvalue1d,
    embed,
    epsilon_threshold,
    evolve,
    evolve1d,
    fd_mean,
    fd_solve,
    geometric_t_grid,
    inner_product,
    inner_product1d,
    norm_const,
    ordered_spectrum,
    parse_csv,
    parse_csv1d,
    parseval_defect,
    project,
    reconstruct,
    sample,
    sample1d,
    sample_physical,
    solution_error,
    solve,
    solve_physical,
    state_from_json,
    state_to_json,
    to_csv,
    to_csv1d,
    vertical_average,
)

__all__ = [
    "EigenPair",
    "EigenRow",
    "ErrorCurve",
    "GridField",
    "GridField1D",
    "IOError",
    "NumericError",
    "SpectralState",
    "__version__",
    "choose_truncation",
    "convergence_report_json",
    "eigen_convergence",
    "eigenfunction1d",
    "eigenfunction_physical",
    "eigenfunction_rescaled",
    "eigenvalue",
    "eigenvalue1d",
    "embed",
    "epsilon_threshold",
    "evolve",
    "evolve1d",
    "fd_mean",
    "fd_solve",
    "geometric_t_grid",
    "inner_product",
    "inner_product1d",
    "norm_const",
    "ordered_spectrum",
    "parse_csv",
    "parse_csv1d",
    "parseval_defect",
    "project",
    "reconstruct",
    "sample",
    "sample1d",
    "sample_physical",
    "solution_error",
    "solve",
    "solve_physical",
    "state_from_json",
    "state_to_json",
    "to_csv",
    "to_csv1d",
    "vertical_average",
]
