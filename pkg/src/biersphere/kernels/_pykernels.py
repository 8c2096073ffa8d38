"""Pure-Python implementations of the hot per-complex kernels.

The compiled extension (_ckernels) mirrors every function here, including
iteration orders and tie-breaking, so the two backends are interchangeable
and produce identical outputs.  Keep both files in sync.
"""

from __future__ import annotations


def face_counts(facets, m):
    """Count the distinct faces of the complex generated by ``facets``.

    Returns a tuple ``counts`` of length m+1 where counts[c] is the number
    of faces with exactly c vertices; counts[0] == 1 for the empty face.
    """
    seen = {0}
    for f in facets:
        s = f
        while s:
            seen.add(s)
            s = (s - 1) & f
    counts = [0] * (m + 1)
    for s in seen:
        counts[s.bit_count()] += 1
    return tuple(counts)


def is_pure_pseudomanifold(facets, k):
    """True iff all facets have k vertices and every (k-1)-subset of a
    facet lies in exactly two facets."""
    ridge_count = {}
    for f in facets:
        if f.bit_count() != k:
            return False
        s = f
        while s:
            bit = s & -s
            r = f ^ bit
            ridge_count[r] = ridge_count.get(r, 0) + 1
            s ^= bit
    return all(c == 2 for c in ridge_count.values())


def dsatur_chromatic(adj):
    """Exact chromatic number of the graph given by adjacency bitmasks.

    Branch and bound: greedy clique lower bound, DSATUR greedy upper bound,
    then DSATUR-ordered backtracking per candidate color count.  Returns
    (chi, colors) with a deterministic witness using colors 0..chi-1.
    """
    n = len(adj)
    if n == 0:
        return 0, ()
    deg = [a.bit_count() for a in adj]

    clique = []
    cand = (1 << n) - 1
    for v in sorted(range(n), key=lambda u: (-deg[u], u)):
        if cand >> v & 1:
            clique.append(v)
            cand &= adj[v]
    lb = len(clique)

    ub, greedy = _dsatur_greedy(adj, deg)
    if lb == ub:
        return ub, tuple(greedy)

    for k in range(lb, ub):
        colors = [-1] * n
        for i, v in enumerate(clique):
            colors[v] = i
        if _extend_coloring(adj, deg, colors, k, n - lb, lb - 1):
            return k, tuple(colors)
    return ub, tuple(greedy)


def _dsatur_greedy(adj, deg):
    n = len(adj)
    colors = [-1] * n
    satmask = [0] * n
    for _ in range(n):
        best = -1
        best_key = None
        for v in range(n):
            if colors[v] >= 0:
                continue
            key = (satmask[v].bit_count(), deg[v], -v)
            if best < 0 or key > best_key:
                best, best_key = v, key
        c = 0
        while satmask[best] >> c & 1:
            c += 1
        colors[best] = c
        nb = adj[best]
        while nb:
            bit = nb & -nb
            satmask[bit.bit_length() - 1] |= 1 << c
            nb ^= bit
    return max(colors) + 1, colors


def _extend_coloring(adj, deg, colors, k, remaining, maxc):
    if remaining == 0:
        return True
    n = len(adj)
    best = -1
    best_key = None
    for v in range(n):
        if colors[v] >= 0:
            continue
        used = 0
        nb = adj[v]
        while nb:
            bit = nb & -nb
            c = colors[bit.bit_length() - 1]
            if c >= 0:
                used |= 1 << c
            nb ^= bit
        key = (used.bit_count(), deg[v], -v)
        if best < 0 or key > best_key:
            best, best_key = v, key

    v = best
    forbidden = 0
    nb = adj[v]
    while nb:
        bit = nb & -nb
        c = colors[bit.bit_length() - 1]
        if c >= 0:
            forbidden |= 1 << c
        nb ^= bit
    top = min(k - 1, maxc + 1)
    for c in range(top + 1):
        if forbidden >> c & 1:
            continue
        colors[v] = c
        if _extend_coloring(adj, deg, colors, k, remaining - 1, max(maxc, c)):
            return True
        colors[v] = -1
    return False


def gfp_char_search(facets, n, d, p, budget):
    """Backtracking existence search for a mod-p characteristic map.

    ``facets`` are tuples of vertex indices 0..n-1; every vertex must get a
    nonzero vector in GF(p)^d (encoded as an integer with base-p digits)
    such that each facet's vectors are linearly independent.  Vertices are
    assigned in decreasing facet-degree order; the first vertex is pinned
    to e_1, which is sound because GL(d, p) acts transitively on nonzero
    vectors.  Returns (assignment | None, nodes, completed) where
    ``completed`` is False iff the node budget was exhausted.
    """
    if n == 0:
        return (), 0, True
    nonzero = p**d - 1
    if nonzero == 0:
        return None, 0, True
    deg = [0] * n
    for f in facets:
        for v in f:
            deg[v] += 1
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    by_vertex = [[] for _ in range(n)]
    for f in facets:
        for v in f:
            by_vertex[v].append(f)

    assign = [0] * n
    state = {"nodes": 0, "capped": False}

    def dependent(vecs):
        if p == 2:
            pivots = {}
            for enc in vecs:
                v = enc
                while v:
                    h = v.bit_length() - 1
                    if h not in pivots:
                        pivots[h] = v
                        break
                    v ^= pivots[h]
                if v == 0:
                    return True
            return False
        rows = []
        for enc in vecs:
            rows.append([enc // p**j % p for j in range(d)])
        pivots = {}
        for row in rows:
            for pos, prow in pivots.items():
                if row[pos]:
                    c = row[pos]
                    for j in range(d):
                        row[j] = (row[j] - c * prow[j]) % p
            lead = -1
            for j in range(d):
                if row[j]:
                    lead = j
                    break
            if lead < 0:
                return True
            inv = pow(row[lead], p - 2, p)
            pivots[lead] = [x * inv % p for x in row]
        return False

    def bt(i):
        if i == n:
            return True
        v = order[i]
        cands = (1,) if i == 0 else range(1, nonzero + 1)
        for enc in cands:
            state["nodes"] += 1
            if state["nodes"] > budget:
                state["capped"] = True
                return False
            assign[v] = enc
            ok = True
            for f in by_vertex[v]:
                vecs = [assign[u] for u in f if assign[u]]
                if dependent(vecs):
                    ok = False
                    break
            if ok and bt(i + 1):
                return True
            assign[v] = 0
            if state["capped"]:
                return False
        return False

    if bt(0):
        return tuple(assign), state["nodes"], True
    return None, state["nodes"], not state["capped"]


def find_hole(adj):
    """Brute-force search for an induced cycle of length >= 4.

    Scans vertex subsets in increasing bitmask order and returns the first
    one inducing a cycle, as a tuple of vertex indices in cyclic order
    (starting at the smallest index, toward its smaller neighbor), or None.
    """
    n = len(adj)
    for mask in range(1 << n):
        k = mask.bit_count()
        if k < 4:
            continue
        ok = True
        s = mask
        while s:
            bit = s & -s
            if (adj[bit.bit_length() - 1] & mask).bit_count() != 2:
                ok = False
                break
            s ^= bit
        if not ok:
            continue
        start = (mask & -mask).bit_length() - 1
        nbrs = adj[start] & mask
        first = (nbrs & -nbrs).bit_length() - 1
        cycle = [start, first]
        prev, cur = start, first
        while True:
            nxt_mask = adj[cur] & mask & ~(1 << prev)
            nxt = (nxt_mask & -nxt_mask).bit_length() - 1
            if nxt == start:
                break
            cycle.append(nxt)
            prev, cur = cur, nxt
        if len(cycle) == k:
            return tuple(cycle)
    return None
