import numpy as np

from polaralign import Dmc, canonicalize


def random_channel(rng, max_symbols=32):
    """Random canonical binary-input channel with at most max_symbols outputs."""
    m = int(rng.integers(2, max_symbols + 1))
    w0 = rng.dirichlet(np.ones(m))
    w1 = rng.dirichlet(np.ones(m))
    return canonicalize(Dmc(w0, w1))


def bisect_predicate(pred, lo, hi, tol=1e-8):
    """Flip point of a predicate that differs at the two endpoints."""
    plo = pred(lo)
    assert pred(hi) != plo, f"predicate constant on [{lo}, {hi}]"
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if pred(mid) == plo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
