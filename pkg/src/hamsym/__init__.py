"""Extremal bounds for Hamming symmetric set families.

Closed-form bounds, polynomial-method independence certificates and
clique-based searches for extremal families at small n.
"""

from .bounds import (
    BoundResult,
    MonomialClassSpec,
    binomial,
    conjecture_bound,
    delsarte_bound,
    monomial_class_count,
    monomial_class_enumerate,
    symmetric_family_bound,
)
from .errors import FamilyFormatError, ParameterError, ResourceLimitError
from .family import (
    DistanceSet,
    QaryFamily,
    ScalarProductSet,
    SetFamily,
    SignedVector,
    complete_intersecting_family,
    contains_half,
    distance_set,
    hamming_distance,
    is_hamming_symmetric,
    qary_distance_set,
    scalar_product,
    scalar_product_set,
    set_from_word,
    signed_vector,
    translate_family,
    word_from_set,
)
from .familyio import format_family, parse_family, read_family, write_family
from .polymethod import (
    AnnihilatorSpec,
    IndependenceCertificate,
    MultilinearPoly,
    build_annihilator,
    build_certificate,
    evaluate,
    exact_rank,
    linear_form,
    multiply_reduce,
    parity_class,
    shifted_form_product,
)
from .search import (
    SearchReport,
    conjecture_explorer,
    enumerate_symmetric_distance_sets,
    exhaustive_family_sweep,
    max_family,
    sharpness_survey,
)

__version__ = "0.1.0"
