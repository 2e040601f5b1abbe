"""Word equations ``w(X, A) = B`` over uniquely divisible groups."""
from .backends import (
    NCSeries,
    RealBackend,
    SeriesBackend,
    UnipotentMatrix,
    UTBackend,
    series_rational_power,
    series_solve_product,
    ut_rational_power,
    ut_solve_product,
)
from .certificates import (
    CertificateReport,
    certify_three_apart,
    certify_X2AXnX,
    certify_XAXnAX,
    certify_XnAXm,
    is_perfect_square,
    verify_factorization,
)
from .gp import GpElement, GpGroup, make_group
from .modp import (
    PrimeProfile,
    find_nonzero_solution,
    find_suitable_prime,
    prime_profile,
    sum_of_squares_witness,
)
from .poly import (
    BivarPoly,
    UnivarPoly,
    affine_image,
    eval_mod,
    poly_compose_identity,
    substitute_squares,
    word_polynomial,
)
from .radical import evaluate, riccati_forms, solve_decomposable, verify_solution
from .words import (
    Morphism,
    Word,
    apply_morphism,
    compose,
    decompose,
    enumerate_words,
    parse_word,
    render_word,
)

__version__ = "0.1.0"
