"""Exhaustive oracles for tiny graphs (hard cap: 12 vertices).

The plain-domination oracle enumerates every labeling f: V -> {0,...,k+1}
and checks the defining inequality directly.  The independent oracle
enumerates every independent set together with every k/k+1 weighting of it;
valid independent functions use no other labels, so this enumeration is
complete.  Both return the true minimum and the lexicographically least
optimal labeling in vertex-identifier order.
"""

from __future__ import annotations

import itertools
import time
from functools import lru_cache

import numpy as np

from ..errors import BadParameters, TooLarge
from ..graph import Graph
from ..labeling import KLabeling, verify_kirdf, verify_krdf
from .common import SolveResult, labels_from_dense

HARD_CAP = 12
_BLOCK_LIMIT = 300_000
_BIG = np.int32(1 << 29)


@lru_cache(maxsize=32)
def _digit_cache(radix: int, length: int):
    """Mixed-radix digit columns for the ``length`` least significant digits.

    Column j holds digit j (j=0 most significant within the block) for every
    block index 0..radix**length-1.  Cached arrays are shared; callers must
    not write into them.
    """
    size = radix**length
    digits = []
    for j in range(length):
        reps = radix ** (length - 1 - j)
        col = np.tile(np.repeat(np.arange(radix, dtype=np.int32), reps), size // (reps * radix))
        digits.append(col)
    weight = np.zeros(size, dtype=np.int32)
    for col in digits:
        weight += col
    active = [col > 0 for col in digits]
    return digits, active, weight


def _rdf_brute(g: Graph, k: int) -> tuple[int, list[int], int]:
    """Minimum over all (k+2)^n labelings; returns (opt, labels, count).

    Labelings are scanned in lexicographic order of the label vector (vertex
    0 most significant), in blocks over the trailing vertices, so the first
    index attaining the minimum is the canonical witness.
    """
    n = g.n
    radix = k + 2
    if n == 0:
        return 0, [], 1
    adj = g.adjacency_indices()

    low = n
    while low > 1 and radix**low > _BLOCK_LIMIT:
        low -= 1
    top = n - low
    digits, active, block_weight = _digit_cache(radix, low)

    # Per-vertex slack over the low block: f(N[v] & low) - |AN(v) & low|.
    # The condition at v is then  slack[v] >= k - (hi sum - hi actives),
    # short-circuited when v's own label already reaches k.
    slack = []
    self_ok = []
    for v in range(n):
        arr = np.zeros(radix**low, dtype=np.int32)
        for u in (v, *adj[v]):
            if u >= top:
                arr += digits[u - top]
        for u in adj[v]:
            if u >= top:
                arr -= active[u - top]
        slack.append(arr)
        self_ok.append(digits[v - top] >= k if v >= top else None)

    best = None  # (total_weight, top_tuple, low_index)
    count = 0
    for t in itertools.product(range(radix), repeat=top):
        count += radix**low
        w_hi = sum(t)
        if best is not None and w_hi >= best[0]:
            continue
        mask = None
        for v in range(n):
            if v < top and t[v] >= k:
                continue
            s_hi = sum(t[u] for u in (v, *adj[v]) if u < top)
            a_hi = sum(1 for u in adj[v] if u < top and t[u] > 0)
            cond = slack[v] >= k - (s_hi - a_hi)
            if self_ok[v] is not None:
                cond |= self_ok[v]
            mask = cond if mask is None else (mask & cond)
        wq = block_weight if mask is None else np.where(mask, block_weight, _BIG)
        m = int(wq.min())
        if m >= int(_BIG):
            continue
        total = w_hi + m
        if best is None or total < best[0]:
            best = (total, t, int(wq.argmin()))

    assert best is not None  # the all-(k+1) labeling is always valid
    total, t, idx = best
    labels = list(t)
    for j in range(low):
        labels.append(int(digits[j][idx]))
    return total, labels, count


def _irdf_brute(g: Graph, k: int) -> tuple[int, list[int], int]:
    """Minimum over all independent sets with all k/k+1 weightings."""
    n = g.n
    if n == 0:
        return 0, [], 1
    masks = g.adjacency_masks()
    adj = g.adjacency_indices()
    best_w = None
    best_labels: list[int] | None = None
    count = 0
    for s in range(1 << n):
        # independence
        ok = True
        rest = s
        while rest:
            i = (rest & -rest).bit_length() - 1
            if masks[i] & s:
                ok = False
                break
            rest &= rest - 1
        if not ok:
            continue
        members = [i for i in range(n) if (s >> i) & 1]
        for heavy_bits in range(1 << len(members)):
            count += 1
            heavy = 0
            for j, i in enumerate(members):
                if (heavy_bits >> j) & 1:
                    heavy |= 1 << i
            w = k * len(members) + bin(heavy).count("1")
            if best_w is not None and w > best_w:
                continue
            valid = True
            for v in range(n):
                if (s >> v) & 1:
                    continue
                an = 0
                total = 0
                for u in adj[v]:
                    if (s >> u) & 1:
                        an += 1
                        total += k + 1 if (heavy >> u) & 1 else k
                if total < k + an:
                    valid = False
                    break
            if not valid:
                continue
            labels = [
                (k + 1 if (heavy >> v) & 1 else k) if (s >> v) & 1 else 0
                for v in range(n)
            ]
            if best_w is None or w < best_w or (w == best_w and labels < best_labels):
                best_w, best_labels = w, labels
    assert best_w is not None
    return best_w, best_labels, count


def brute_force(g: Graph, k: int, mode: str) -> SolveResult:
    """Exhaustive optimum for ``mode`` in {"RDF", "IRDF"} on graphs with at
    most 12 vertices.  The returned witness is re-verified before returning.
    """
    if k < 1:
        raise BadParameters(f"k must be >= 1, got {k}")
    if mode not in ("RDF", "IRDF"):
        raise BadParameters(f"mode must be RDF or IRDF, got {mode!r}")
    if g.n > HARD_CAP:
        raise TooLarge(f"brute force capped at {HARD_CAP} vertices, got {g.n}")
    start = time.perf_counter()
    if mode == "RDF":
        opt, dense, count = _rdf_brute(g, k)
    else:
        opt, dense, count = _irdf_brute(g, k)
    witness = labels_from_dense(g, k, dense)
    report = verify_krdf(g, witness) if mode == "RDF" else verify_kirdf(g, witness)
    assert report.valid, f"oracle produced an invalid witness: {report.violations}"
    return SolveResult(
        optimum=opt,
        witness=witness,
        nodes_explored=count,
        proven_optimal=True,
        elapsed=time.perf_counter() - start,
    )
