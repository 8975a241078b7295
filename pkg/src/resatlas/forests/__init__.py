from .jordan import (
    height_partition,
    inverse_jordan,
    inverse_jordan_trees,
    jordan_partition,
    partitions_of_partition,
)
from .trees import (
    Forest,
    Tree,
    aut_generators,
    aut_order,
    chain,
    complete,
    enumerate_forests,
    enumerate_trees,
    minimal_contraction,
    parse_shapes,
    wedderburn_etherington,
)
from .weights import (
    GroupElem,
    act,
    eliminate_root,
    enumerate_weights,
    field_label,
    finals_of,
    galois,
    galois_orbit_and_field,
    group_order,
    is_admissible,
    orbit,
    orbit_rep,
    permute,
    shift,
    weight_from_finals,
    weight_orbits,
)
