"""partbias: exact counting and asymptotics of biased restricted partitions."""

from .core import PartSystem, falling_product, gcd_chain, validate_system
from .counter import (BiasCount, brute_force_oracle, count_bias,
                      count_restricted, ratio_table)
from .asymptote import (AsymptoticReport, asymptotic_ratio,
                        leading_coefficient_greater,
                        leading_coefficient_total, report)
from .geometry import (LatticeBasis, VForm, bias_volume,
                       complement_identity_check, ehrhart_estimate,
                       lattice_basis, partition_to_k, vform_closed_form,
                       vform_volume)
from .progression import (ProgressionSpec, bias_direction_scan, build_sets,
                          c_limit_beta, c_limit_exact, c_limit_quadrature,
                          conjecture_table, gamma_form)

__version__ = "0.1.0"

__all__ = [
    "PartSystem", "validate_system", "gcd_chain", "falling_product",
    "BiasCount", "count_restricted", "count_bias", "ratio_table",
    "brute_force_oracle",
    "AsymptoticReport", "asymptotic_ratio", "leading_coefficient_total",
    "leading_coefficient_greater", "report",
    "LatticeBasis", "lattice_basis", "partition_to_k", "VForm",
    "vform_volume", "vform_closed_form", "complement_identity_check",
    "bias_volume", "ehrhart_estimate",
    "ProgressionSpec", "build_sets", "c_limit_exact", "c_limit_beta",
    "c_limit_quadrature", "gamma_form", "conjecture_table",
    "bias_direction_scan",
    "__version__",
]
