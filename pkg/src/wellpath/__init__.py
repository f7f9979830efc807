"""Well-labelled Motzkin and positive paths, labelled binary trees and matchings."""
from wellpath.bijections import (
    StepAddInput,
    add_step,
    add_step_inv,
    chen_labelling,
    phi,
    phi_inv,
    phi_prime,
    phi_prime_inv,
    psi,
    psi_inv,
    psi_prime,
    psi_prime_inv,
)
from wellpath.matchings import Matching, validate_matching
from wellpath.paths import PathClass, WellLabelledPath, classify, validate_path
from wellpath.trees import Leaf, MarkedTree, Node

__all__ = [
    "Leaf", "MarkedTree", "Matching", "Node", "PathClass", "StepAddInput",
    "WellLabelledPath", "add_step", "add_step_inv", "chen_labelling", "classify",
    "phi", "phi_inv", "phi_prime", "phi_prime_inv", "psi", "psi_inv",
    "psi_prime", "psi_prime_inv", "validate_matching", "validate_path",
]
