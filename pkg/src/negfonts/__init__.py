"""Negativity fonts, K-way partial transposes, and polynomial invariants
for 2-, 3-, and 4-qubit pure states."""

from .catalog import CATALOG, catalog_names, catalog_state
from .classify import ClassReport, ClassSignature, classify, family_expected, font_minimize
from .fonts import (
    FontSpec,
    all_font_dets,
    count_nonzero_fonts,
    d2,
    d3,
    d4,
    enumerate_fonts,
    font_counts,
    font_det,
)
from .invariants import (
    FourQubitReport,
    ThreeQubitReport,
    TripleInvariants,
    aggregate_invariants,
    delta24,
    i2_pair,
    i4,
    i26,
    i26_symmetric,
    i3_conditional,
    i48,
    j12,
    n_global_sq_relation,
    n_pair_sq,
    n_triple_sq,
    pair_det_sum,
    pair_det_sums,
    t_p_invariants,
    tau4,
    tau48_from_i48,
    three_qubit_report,
    three_tangle,
    three_way_invariant,
    triple_invariants,
)
from .ptrans import (
    decomposition_residual,
    density_from_pure,
    global_pt,
    hermitian_eigenvalues,
    kway_pt,
    negative_eigenvalues,
    negativity,
)
from .states import (
    LocalUnitary,
    PureState,
    apply_local_unitary,
    bits_of_index,
    index_of_bits,
    inner,
    local_unitary,
    make_state,
    normalize,
    permute_qubits,
    random_special_unitary,
    random_state,
)

__version__ = "0.1.0"
