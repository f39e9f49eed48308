from .base import (
    EdgeRef,
    Multigraph,
    connected_components,
    contract_edge,
    cycle_graph,
    delete_edge,
    edgeless_graph,
    empty_graph,
    extract_edge,
    path_graph,
)
from .canonical import CanonicalKey, canonical_form, canonical_key
