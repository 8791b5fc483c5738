"""Aperiodic Z-complementary sets: exact correlation, verification, bounds and construction."""

from .boolean import PolyFunction, add, sequence_of, truncate
from .construct import (
    ConstructionError,
    ConstructionParams,
    build_offset_egbf,
    build_quadratic_gbf,
    build_zcs,
)
from .correlation import QarySequence, aacf, accf, correlation_table, cyclic_shift
from .cyclo import CycloValue, complex_estimate, cyclotomic_polynomial, is_zero
from .family import Flock, ZcsFamily
from .fileformat import family_from_json, family_to_json, parse_family, render_family
from .search import SearchSpec, exhaustive_max_set_size, lemma2_check, random_orthogonal_pair
from .verify import (
    bounds,
    classify_optimality,
    max_zcz_width,
    set_correlation,
    verify_zcs,
    welch_matrix_check,
)

__version__ = "0.1.0"
