"""Large vertex-flames of finite rooted digraphs, with certificates."""

from .bubbles import (
    cut_side,
    is_anti_bubble,
    is_bubble,
    largest_bubble,
    smallest_anti_bubble,
    unite_bubbles,
)
from .digraph import PathSystem, RootedDigraph, boundary, build_digraph, restrict_in
from .estimator import LargeFlame
from .flame import (
    FlameCertificate,
    certify,
    flame_check,
    g_membership,
    largeness_check,
    lovasz_reduce,
    no_collapse_step,
    omega_construct,
    verify_certificate,
)
from .linkage import cover_extension, pym_infan, pym_merge, pym_rooted
from .menger import (
    augmenting_step,
    classify_separation,
    extreme_separations,
    kappa,
    kappa_and_system,
    linked_from_root,
)

__version__ = "0.1.0"

__all__ = [
    "FlameCertificate",
    "LargeFlame",
    "PathSystem",
    "RootedDigraph",
    "augmenting_step",
    "boundary",
    "build_digraph",
    "certify",
    "classify_separation",
    "cover_extension",
    "cut_side",
    "extreme_separations",
    "flame_check",
    "g_membership",
    "is_anti_bubble",
    "is_bubble",
    "kappa",
    "kappa_and_system",
    "largeness_check",
    "largest_bubble",
    "linked_from_root",
    "lovasz_reduce",
    "no_collapse_step",
    "omega_construct",
    "pym_infan",
    "pym_merge",
    "pym_rooted",
    "restrict_in",
    "smallest_anti_bubble",
    "unite_bubbles",
    "verify_certificate",
]
