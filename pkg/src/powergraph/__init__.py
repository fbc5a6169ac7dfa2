"""Power graphs and enhanced power graphs of finite groups.

Build groups as Cayley tables, form the (enhanced) power graph, take the
complement, drop isolated vertices, and check connectivity and diameter.
"""

from .analysis import (
    ComponentPartition,
    bfs_distances,
    connected_components,
    diameter,
    isolated_by_characterization,
    isolated_by_definition,
    maximal_cliques,
)
from .dsl import build_group, parse
from .errors import CapacityError, GroupSpecError, InvalidGroupError, InvalidParameterError, PowerGraphError
from .graphs import (
    InducedSubgraphMap,
    SimpleGraph,
    complement,
    drop_isolated,
    enhanced_power_graph,
    power_graph,
    to_dot,
)
from .group import (
    CyclicSubgroup,
    GroupTable,
    alternating_group,
    check_group_axioms,
    closure_from_permutations,
    cyclic_group,
    dihedral_group,
    direct_product,
    element_order,
    generated_cyclic,
    max_order_element,
    maximal_cyclic_subgroups,
    quaternion_group,
    symmetric_group,
)
from .verify import (
    CatalogSpec,
    VerificationReport,
    default_catalog,
    run_catalog,
    verify_corollary,
    verify_remark,
    verify_remark_converse,
    verify_theorem,
)
from .witnesses import WitnessBundle, extract_witnesses, validate_witnesses, witness_path

__version__ = "0.1.0"
