"""Reachability, weak/strong connectivity and temporal partitions."""

import random
from collections import defaultdict
from itertools import count

from ..semiring import COMBINATORIAL, REACHABILITY
from ..tmatrix import mat_binary, mat_closure, mat_intersect, mat_symmetrize, mat_vec_mul
from ..tq import FOREVER
from .measures import degrees

DEFAULT_SEED = 1

# draws that follow the original recipe (a shuffle of 1..n) before widening the range
SHUFFLE_DRAWS = 8
WIDE_RANGE = 2**62


def reachability(A):
    """Strict reachability matrix: every nonempty walk."""
    return mat_closure(mat_binary(A, REACHABILITY), strict=True)


def reach_degrees(A, direction="in"):
    """Number of nodes reaching (``in``) or reached from (``out``) each node."""
    return degrees(mat_binary(reachability(A), COMBINATORIAL), direction)


def weak_connectivity(A, seed=DEFAULT_SEED):
    """Weak connectivity matrix and its partition into components."""
    R = mat_binary(A, REACHABILITY)
    W = mat_closure(mat_symmetrize(R), strict=True)
    return W, eq_mat_to_part(W, seed)


def strong_connectivity(A, seed=DEFAULT_SEED):
    """Strong connectivity matrix and its partition into components.

    Nodes that lie on no cycle at an instant belong to no class there.
    """
    R = reachability(A)
    S = mat_intersect(R, R.transpose())
    return S, eq_mat_to_part(S, seed)


def eq_mat_to_part(E, seed=DEFAULT_SEED):
    """Turn a temporal equivalence matrix into a temporal partition.

    Each node gets a distinct random weight; at every instant a node's label
    is the total weight of its class.  A draw is rejected and repeated when
    two different classes collide on the same label, so labels identify
    classes exactly.  The input is not checked to be an equivalence.
    """
    n = E.n
    B = mat_binary(E, COMBINATORIAL)
    rng = random.Random(seed)
    start = E.start()
    for attempt in count():
        if attempt < SHUFFLE_DRAWS:
            weights = list(range(1, n + 1))
            rng.shuffle(weights)
        else:
            weights = rng.sample(range(1, WIDE_RANGE), n)
        p = mat_vec_mul(B, [[(start, FOREVER, w)] for w in weights])
        if _labels_identify_classes(p, weights):
            return renumber_partition(p)


def _labels_identify_classes(p, weights):
    points = sorted({t for q in p for s, f, _ in q for t in (s, f)})
    pos = [0] * len(p)
    seen = {}
    for s in points[:-1]:
        groups = defaultdict(list)
        for u, q in enumerate(p):
            i = pos[u]
            while i < len(q) and q[i][1] <= s:
                i += 1
            pos[u] = i
            if i < len(q) and q[i][0] <= s:
                groups[q[i][2]].append(u)
        for label, members in groups.items():
            # merged classes would add up to a multiple of the label
            if sum(weights[u] for u in members) != label:
                return False
            key = frozenset(members)
            if seen.setdefault(label, key) != key:
                return False
    return True


def renumber_partition(p):
    """Relabel classes 1, 2, ... in order of first appearance."""
    classes = {}
    out = []
    for a in p:
        r = []
        for s, f, c in a:
            if c not in classes:
                classes[c] = 1 + len(classes)
            k = classes[c]
            if r and r[-1][1] == s and r[-1][2] == k:
                r[-1] = (r[-1][0], f, k)
            else:
                r.append((s, f, k))
        out.append(r)
    return out
