"""Level-k certificates for alignment of polarized index sets.

Two complementary tests over the depth-k branches of a channel pair:

* nonalignment: some branch of V is at least as informative as the same
  branch of W, which forces a linear-size overlap between W's bad set and
  V's good set — the two channels' polarized sets cannot nest.
* alignment: along every branch, W's Bhattacharyya value plus the
  fidelity of V's counterpart on the complementary branch stays at most 1,
  which certifies that W's bad (unreliable) index set is contained in V's.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .channels import Dmc, PriorDmc, scalars
from .counterpart import counterpart
from .cq import CqChannel, channel_fidelity, cq_split
from .polarize import check_label, complement_label, split, split_prior

LB_MARGIN = 1e-9
UB_TOL = 1e-12
DEFAULT_K_LB = 4
DEFAULT_K_UB = 2


class Outcome(Enum):
    ALIGNED = "aligned"
    ALIGNED_LESS_NOISY = "aligned-less-noisy"
    NOT_ALIGNED = "not-aligned"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    """Combined certificate result.

    ALIGNED certifies that every index unreliable for W is also unreliable
    for V (containment of the bad sets / R-set nesting). NOT_ALIGNED
    certifies a linear-size overlap between W's bad set and V's good set.
    lb_witness is the lexicographically first firing branch; ub_margins
    maps each depth-k_ub branch b to 1 - Z(W_b) - F((V^c)_bbar).
    """

    outcome: Outcome
    lb_fired: bool
    lb_level: int | None
    lb_witness: str | None
    ub_holds: bool
    ub_level: int
    ub_margins: dict[str, float]


def _info(ch) -> float:
    if isinstance(ch, PriorDmc):
        return scalars(ch.channel, prior=ch.p).i
    return scalars(ch).i


def _children(ch):
    if isinstance(ch, PriorDmc):
        return split_prior(ch, 0), split_prior(ch, 1)
    return split(ch, 0), split(ch, 1)


def branch_infos(ch, k: int) -> dict[str, float]:
    """Mutual information of every depth-k branch, keyed by label."""
    level = {"": ch}
    for _ in range(k):
        nxt = {}
        for label, c in level.items():
            c0, c1 = _children(c)
            nxt[label + "0"] = c0
            nxt[label + "1"] = c1
        level = nxt
    return {label: _info(c) for label, c in sorted(level.items())}


def check_nonalignment(w, v, k: int, margin: float = LB_MARGIN):
    """True iff some depth-k branch b has I(V_b) >= I(W_b) + margin.

    Accepts Dmc or PriorDmc for either argument. Returns (fired, witness)
    with the lexicographically first witness, or (False, None).
    """
    iw = branch_infos(w, k)
    iv = branch_infos(v, k)
    for b in sorted(iw):
        if iv[b] - iw[b] >= margin:
            return True, b
    return False, None


def _cq_branch_fidelities(ch: CqChannel, k: int) -> dict[str, float]:
    level = {"": ch}
    for _ in range(k):
        nxt = {}
        for label, c in level.items():
            nxt[label + "0"] = cq_split(c, 0)
            nxt[label + "1"] = cq_split(c, 1)
        level = nxt
    return {label: channel_fidelity(c) for label, c in sorted(level.items())}


def _branch_z(w: Dmc, k: int) -> dict[str, float]:
    level = {"": w}
    for _ in range(k):
        nxt = {}
        for label, c in level.items():
            nxt[label + "0"] = split(c, 0)
            nxt[label + "1"] = split(c, 1)
        level = nxt
    return {label: scalars(c).z for label, c in sorted(level.items())}


def check_alignment(w: Dmc, v: Dmc, k: int, tol: float = UB_TOL):
    """True iff Z(W_b) + F((V^c)_bbar) <= 1 + tol for every depth-k branch.

    Returns (holds, margins) where margins[b] = 1 - Z(W_b) - F((V^c)_bbar).
    """
    zw = _branch_z(w, k)
    fvc = _cq_branch_fidelities(counterpart(v), k)
    margins = {b: 1.0 - zw[b] - fvc[complement_label(b)] for b in sorted(zw)}
    holds = all(m >= -tol for m in margins.values())
    return holds, margins


def classify(w: Dmc, v: Dmc, k_lb: int = DEFAULT_K_LB,
             k_ub: int = DEFAULT_K_UB) -> Verdict:
    """Run the alignment test at depth k_ub, then the nonalignment test at
    increasing depths up to k_lb; report the combined verdict."""
    for k in (k_lb, k_ub):
        check_label("0" * k)
    ub_holds, ub_margins = check_alignment(w, v, k_ub)
    lb_fired, lb_level, lb_witness = False, None, None
    if not ub_holds:
        # the certificate persists to deeper levels, so scan shallow-first
        for k in range(k_lb + 1):
            fired, witness = check_nonalignment(w, v, k)
            if fired:
                lb_fired, lb_level, lb_witness = True, k, witness
                break
    if ub_holds:
        outcome = Outcome.ALIGNED
    elif lb_fired:
        outcome = Outcome.NOT_ALIGNED
    else:
        outcome = Outcome.INCONCLUSIVE
    return Verdict(outcome=outcome, lb_fired=lb_fired, lb_level=lb_level,
                   lb_witness=lb_witness, ub_holds=ub_holds, ub_level=k_ub,
                   ub_margins=ub_margins)
