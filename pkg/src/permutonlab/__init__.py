"""permutonlab: pattern densities, permuton models, avoidance certification,
rectangular distances, and the resnap removal algorithm."""

from .errors import BoundaryError, InputError, PreconditionError
from .perms import (
    PatternCount,
    Permutation,
    all_permutations,
    apply_symmetry,
    avoids,
    count_occurrences,
    format_permutation,
    identity,
    parse_pattern,
    parse_permutation,
    pattern_of_points,
    pattern_of_values,
    reverse_identity,
)
from .models import (
    Atom,
    DigitSwapPermuton,
    Fiber,
    LPProfile,
    MarginalReport,
    MoleculeProfile,
    Piece,
    StepPermuton,
    Track,
    TrackPermuton,
    UniformPermuton,
    build_step,
    build_zigzag,
    canonical,
    digit_swap_eval,
    fiber_at,
    fiber_lp_profile,
    identity_permuton,
    load_model,
    lp_distance,
    model_from_dict,
    model_to_dict,
    molecule_profile,
    sample_permutation,
    save_model,
    transpose_tracks,
    validate_marginals,
)
from .analysis import (
    AvoidanceCertificate,
    DensityEstimate,
    DistanceResult,
    SWReport,
    certify_avoidance,
    cut_distance_bruteforce,
    density_monte_carlo,
    rect_distance_interval,
    rect_mass,
    sw_generate,
)
from .removal import (
    ExperimentRow,
    PerturbationSpec,
    RemovalReport,
    displacement_cost,
    exact_removal,
    perturb,
    removal_experiment,
    resnap,
)

__version__ = "0.1.0"
