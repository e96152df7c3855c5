"""Influence of variable sets on Boolean functions, with exact spectral machinery."""
__version__ = "0.1.0"

from .core import (
    MAX_VARIABLES,
    BooleanFunction,
    DomainError,
    ParseError,
    VariableSubset,
    build_from_anf,
    build_from_bits,
    build_from_hex,
    expectation,
    is_degenerate_on,
    restrict,
    variance,
    weight,
)
from .spectra import (
    RealSpectrum,
    WeightDistribution,
    autocorrelation_spectrum,
    fourier_transform,
    inverse_fourier,
    level_l1,
    subspace_identity_check,
    tail_weight,
    walsh_spectrum,
    weight_distribution,
)
from .influence import (
    InfluenceValue,
    bl_influence,
    fb_influence,
    gs_influence,
    influence,
    influence_variable,
    mu_probability,
    pseudo_influence,
    subset_count,
    t_bl_influence,
    t_influence,
    t_pseudo_influence,
    union_decomposition,
)
from .characterizations import (
    CharacterizationReport,
    bent_by_influence,
    characterize,
    concentration_threshold,
    fei_ratio,
    fourier_entropy,
    is_bent,
    junta_distance,
    junta_influence_bound_check,
    pc_order,
    resiliency_order,
)
from .geometry import PathCensus, edge_boundary, path_census, t_influence_by_paths, walsh_from_paths_check
