"""Polarization of binary-input channels, alignment certificates, and
secrecy/broadcast/quantum region tools."""

__version__ = "0.1.0"

from .channels import (
    AlphabetOverflowError,
    ChannelError,
    ChannelScalars,
    Dmc,
    Ordering,
    Preprocessor,
    PriorDmc,
    binary_convolve,
    binary_entropy,
    bsc_bec_ordering,
    canonicalize,
    compose,
    generalized_bhatt,
    make_bec,
    make_bsc,
    make_channel,
    scalars,
)
from .polarize import (
    PolarizedSets,
    ZInterval,
    complement_label,
    index_label,
    polarized_sets,
    split,
    split_prior,
    synthesize,
    synthesize_prior,
    z_bounds,
)
from .cq import (
    ComponentOverflowError,
    CqChannel,
    CqState,
    OverlapTableError,
    channel_fidelity,
    cq_split,
    cq_state,
    cq_synthesize,
    embed_classical,
    fidelity,
    fidelity_gram,
)
from .counterpart import counterpart, counterpart_closed_form
from .alignment import (
    Outcome,
    Verdict,
    check_alignment,
    check_nonalignment,
    classify,
)
from .wiretap import (
    KeyNeed,
    WiretapRegime,
    WiretapSets,
    WiretapSolution,
    cs_bec_bsc,
    cs_bsc_bec,
    key_need_bec_bsc,
    key_need_bsc_bec,
    wiretap_sets,
)
from .broadcast import RatePair, bc_alignment, bc_channels, superposition_rates
from .quantum import (
    EntanglementSets,
    PauliChannel,
    coherent_info,
    ent_needed,
    ent_zero,
    entanglement_sets,
    induced_channels,
)

__all__ = [name for name in dir() if not name.startswith("_")]
