from .degree import (
    canonicalize,
    chow_pushforward,
    covering_and_degree,
    degree_coefficient,
    cmu_sum_target,
    multiplicity,
    segre_multinomial,
    series_degree,
    tree_multiplicity,
)
from .jordan_rank import UnstableSample, partition_from_ranks, rank_profile, rank_profile_partition
from .membership import MembershipResult, membership_verify
from .param import c_sequence, param_at, param_vector
from .records import ComponentRecord, enumerate_components, make_record
from .zmap import trace_checks, z_map

__all__ = [
    "ComponentRecord", "MembershipResult", "UnstableSample",
    "c_sequence", "canonicalize", "chow_pushforward", "covering_and_degree",
    "degree_coefficient", "enumerate_components", "cmu_sum_target", "make_record",
    "membership_verify", "multiplicity", "param_at", "param_vector",
    "partition_from_ranks", "rank_profile", "rank_profile_partition",
    "segre_multinomial", "series_degree", "trace_checks", "tree_multiplicity", "z_map",
]
