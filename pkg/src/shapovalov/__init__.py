"""Exact Gram matrices of the s-form and the Shapovalov form, with Smith normal forms."""

from .matrix import CrossCheckError, ExactMatrix
from .partitions import Multipartition, Partition, enumerate_multipartitions, enumerate_partitions
from .symfunc import SymPoly, higher_homogeneous, transition_matrix
from .forms import CartanSpec, cartan, gram_entry, gram_power, gram_s_form, shapovalov_gram
from .snf import SnfResult, smith_normal_form, snf_pointwise_product
from .divisors import (
    D_r,
    check_conjecture,
    formula_invariants,
    hecke_block_invariants,
    predicted_prime_power,
    predicted_shapovalov,
)

__version__ = "0.1.0"

__all__ = [
    "CartanSpec", "CrossCheckError", "D_r", "ExactMatrix", "Multipartition", "Partition",
    "SnfResult", "SymPoly", "cartan", "check_conjecture", "enumerate_multipartitions",
    "enumerate_partitions", "formula_invariants", "gram_entry", "gram_power", "gram_s_form",
    "hecke_block_invariants", "higher_homogeneous", "predicted_prime_power", "predicted_shapovalov",
    "shapovalov_gram", "smith_normal_form", "snf_pointwise_product", "transition_matrix",
]
