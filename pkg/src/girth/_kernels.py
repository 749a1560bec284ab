"""BFS and hitting-set inner loops over CSR arrays.

Conventions shared by every kernel:

* graphs arrive as ``indptr``/``indices`` int64 arrays (CSR, neighbours of
  ``u`` are ``indices[indptr[u]:indptr[u + 1]]``);
* ``dist`` is caller-owned scratch filled with -1 on entry and restored to -1
  on exit, so a bounded search costs O(touched) rather than O(n);
* ``queue`` doubles as the list of touched vertices for that reset;
* cycles are written to an ``out`` buffer and their length is returned, 0
  meaning "no cycle".
"""
from __future__ import annotations

import numpy as np

from ._jit import kernel


@kernel
def _trace_cycle(a, b, dist, parent, out, tmp):
    # Cycle closed by non-tree edge (a, b): a -> ... -> lca -> ... -> b.
    na = 0
    nb = 0
    x = a
    y = b
    while dist[x] > dist[y]:
        out[na] = x
        na += 1
        x = parent[x]
    while dist[y] > dist[x]:
        tmp[nb] = y
        nb += 1
        y = parent[y]
    while x != y:
        out[na] = x
        na += 1
        x = parent[x]
        tmp[nb] = y
        nb += 1
        y = parent[y]
    out[na] = x
    na += 1
    for i in range(nb - 1, -1, -1):
        out[na] = tmp[i]
        na += 1
    return na


@kernel
def bfs_cycle(indptr, indices, root, bound, pos, limit, dist, parent, queue, out, tmp):
    """Stop-early BFS from ``root``; returns (cycle length, dequeued count).

    Only vertices ``w`` with ``pos[w] <= limit`` take part in the search, which
    lets the same kernel walk an induced subgraph without materialising it.
    """
    dist[root] = 0
    parent[root] = -1
    queue[0] = root
    head = 0
    tail = 1
    a = -1
    b = -1
    while head < tail and head < bound:
        x = queue[head]
        head += 1
        px = parent[x]
        dx = dist[x]
        for j in range(indptr[x], indptr[x + 1]):
            v = indices[j]
            if pos[v] > limit:
                continue
            if dist[v] < 0:
                dist[v] = dx + 1
                parent[v] = x
                queue[tail] = v
                tail += 1
            elif v != px:
                a = x
                b = v
                break
        if a >= 0:
            break
    length = 0
    if a >= 0:
        length = _trace_cycle(a, b, dist, parent, out, tmp)
    for i in range(tail):
        dist[queue[i]] = -1
    return length, head


@kernel
def multi_source_bfs_cycle(indptr, indices, roots, bound, pos, limit,
                           dist, parent, queue, out, tmp, best):
    """Run ``bfs_cycle`` from each root; keep the shortest, earliest root on ties."""
    best_len = 0
    best_root = -1
    total = 0
    for i in range(roots.shape[0]):
        root = roots[i]
        length, visited = bfs_cycle(indptr, indices, root, bound, pos, limit,
                                    dist, parent, queue, out, tmp)
        total += visited
        if length > 0 and (best_len == 0 or length < best_len):
            best_len = length
            best_root = root
            for q in range(length):
                best[q] = out[q]
    return best_len, best_root, total


@kernel
def incremental_bfs_cycle(indptr, indices, order, count, cap, pos,
                          dist, parent, queue, out, tmp, best):
    """Searches over the growing induced subgraph on ``order[:i + 1]``.

    ``pos[order[i]] == i`` for the first ``count`` entries and every other
    vertex has ``pos >= count``, so step ``i`` sees exactly the prefix.
    """
    best_len = 0
    best_root = -1
    total = 0
    for i in range(count):
        u = order[i]
        length, visited = bfs_cycle(indptr, indices, u, cap, pos, i,
                                    dist, parent, queue, out, tmp)
        total += visited
        if length > 0 and (best_len == 0 or length < best_len):
            best_len = length
            best_root = u
            for q in range(length):
                best[q] = out[q]
    return best_len, best_root, total


@kernel
def exact_girth(indptr, indices, dist, parent, queue, out, tmp, best):
    """Full BFS from every root minimising d(a) + d(b) + 1 over non-tree edges.

    Returns (girth or 0, witness length, root of the witness, dequeues).
    """
    n = indptr.shape[0] - 1
    value = n + 1
    best_len = 0
    best_root = -1
    total = 0
    for root in range(n):
        dist[root] = 0
        parent[root] = -1
        queue[0] = root
        head = 0
        tail = 1
        while head < tail:
            x = queue[head]
            dx = dist[x]
            if 2 * dx + 1 >= value:
                break
            head += 1
            px = parent[x]
            for j in range(indptr[x], indptr[x + 1]):
                v = indices[j]
                if dist[v] < 0:
                    dist[v] = dx + 1
                    parent[v] = x
                    queue[tail] = v
                    tail += 1
                elif v != px:
                    c = dx + dist[v] + 1
                    if c < value:
                        value = c
                        best_len = _trace_cycle(x, v, dist, parent, out, tmp)
                        best_root = root
                        for q in range(best_len):
                            best[q] = out[q]
        total += head
        for i in range(tail):
            dist[queue[i]] = -1
    if best_len == 0:
        return 0, 0, -1, total
    return value, best_len, best_root, total


@kernel
def edge_deletion_girth(indptr, indices, dist, queue):
    """Girth as min over edges (u, v) of d_{G - uv}(u, v) + 1; 0 when acyclic."""
    n = indptr.shape[0] - 1
    best = n + 1
    for u in range(n):
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            if v <= u:
                continue
            dist[u] = 0
            queue[0] = u
            head = 0
            tail = 1
            found = -1
            while head < tail and found < 0:
                x = queue[head]
                head += 1
                if dist[x] + 2 >= best:
                    break
                for j in range(indptr[x], indptr[x + 1]):
                    w = indices[j]
                    if (x == u and w == v) or (x == v and w == u):
                        continue
                    if dist[w] < 0:
                        dist[w] = dist[x] + 1
                        queue[tail] = w
                        tail += 1
                        if w == v:
                            found = dist[w]
                            break
            if found > 0 and found + 1 < best:
                best = found + 1
            for i in range(tail):
                dist[queue[i]] = -1
    if best == n + 1:
        return 0
    return best


@kernel
def ball_size(indptr, indices, u, radius, cap, dist, queue):
    """min(|B(u, radius)|, cap), expanding at most ``cap`` vertices."""
    dist[u] = 0
    queue[0] = u
    head = 0
    tail = 1
    while head < tail and head < cap and tail < cap:
        x = queue[head]
        head += 1
        if dist[x] >= radius:
            break
        for j in range(indptr[x], indptr[x + 1]):
            v = indices[j]
            if dist[v] < 0:
                dist[v] = dist[x] + 1
                queue[tail] = v
                tail += 1
    for i in range(tail):
        dist[queue[i]] = -1
    if tail < cap:
        return tail
    return cap


@kernel
def radius_table(indptr, indices, x, dist, queue, r_out):
    """Largest r(u) with |B(u, r(u))| <= x for every u; returns total dequeues."""
    n = indptr.shape[0] - 1
    total = 0
    for u in range(n):
        dist[u] = 0
        queue[0] = u
        head = 0
        tail = 1
        r = -1
        while head < tail and r < 0:
            w = queue[head]
            head += 1
            for j in range(indptr[w], indptr[w + 1]):
                v = indices[j]
                if dist[v] < 0:
                    dist[v] = dist[w] + 1
                    queue[tail] = v
                    tail += 1
                    if tail > x:
                        r = dist[v] - 1
                        break
        if r < 0:
            # whole component fits: r(u) is the eccentricity
            r = dist[queue[tail - 1]]
        r_out[u] = r
        total += head
        for i in range(tail):
            dist[queue[i]] = -1
    return total


@kernel
def closest_sets(indptr, indices, size, dist, queue, out, out_len):
    """Row u of ``out`` gets the first ``size`` vertices discovered from u.

    ``out_len[u]`` is smaller than ``size`` only when u's component is.
    Returns total dequeues.
    """
    n = indptr.shape[0] - 1
    total = 0
    for u in range(n):
        dist[u] = 0
        queue[0] = u
        head = 0
        tail = 1
        while head < tail and tail < size:
            w = queue[head]
            head += 1
            for j in range(indptr[w], indptr[w + 1]):
                v = indices[j]
                if dist[v] < 0:
                    dist[v] = dist[w] + 1
                    queue[tail] = v
                    tail += 1
                    if tail >= size:
                        break
        for i in range(tail):
            out[u, i] = queue[i]
            dist[queue[i]] = -1
        out_len[u] = tail
        total += head
    return total


@kernel
def component_labels(indptr, indices, labels, queue):
    """Label connected components in vertex-id order; returns the count."""
    n = indptr.shape[0] - 1
    count = 0
    for s in range(n):
        if labels[s] >= 0:
            continue
        labels[s] = count
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            x = queue[head]
            head += 1
            for j in range(indptr[x], indptr[x + 1]):
                v = indices[j]
                if labels[v] < 0:
                    labels[v] = count
                    queue[tail] = v
                    tail += 1
        count += 1
    return count


@kernel
def greedy_hitting_set(set_ptr, set_elems, n):
    """Greedy max-multiplicity hitting set with multiplicity buckets.

    Returns (chosen elements in pick order, covering element per set,
    operation count).  Ties on multiplicity go to the smallest element id.
    """
    k = set_ptr.shape[0] - 1
    total_size = set_elems.shape[0]
    ops = 0

    t = np.zeros(n, np.int64)
    for j in range(total_size):
        t[set_elems[j]] += 1
    ops += total_size + n

    # element -> sets incidence
    inc_ptr = np.zeros(n + 1, np.int64)
    for u in range(n):
        inc_ptr[u + 1] = inc_ptr[u] + t[u]
    fill = inc_ptr[:n].copy()
    inc = np.empty(total_size, np.int64)
    for i in range(k):
        for j in range(set_ptr[i], set_ptr[i + 1]):
            u = set_elems[j]
            inc[fill[u]] = i
            fill[u] += 1
    ops += total_size

    # bucket L_c holds elements with t == c as a doubly linked list
    head = np.full(k + 1, -1, np.int64)
    nxt = np.full(n, -1, np.int64)
    prv = np.full(n, -1, np.int64)
    top = 0
    for u in range(n - 1, -1, -1):
        c = t[u]
        if c > 0:
            nxt[u] = head[c]
            if head[c] >= 0:
                prv[head[c]] = u
            head[c] = u
            if c > top:
                top = c
    ops += n + k

    retired = np.zeros(k, np.bool_)
    covered = np.full(k, -1, np.int64)
    chosen = np.empty(n, np.int64)
    n_chosen = 0
    remaining = k

    # Sorted snapshot of the top bucket.  While the pointer stays at a level
    # nothing can enter that bucket (everything above is empty and counts
    # only fall), so the smallest live id is found by a forward cursor.
    snap = np.empty(n, np.int64)
    snap_len = 0
    snap_level = -1
    cur = 0

    while remaining > 0:
        while True:
            if snap_level == top:
                while cur < snap_len and t[snap[cur]] != top:
                    cur += 1
                    ops += 1
                if cur < snap_len:
                    break
                snap_level = -1
                top -= 1
                ops += 1
                continue
            if head[top] < 0:
                top -= 1
                ops += 1
                continue
            snap_len = 0
            w = head[top]
            while w >= 0:
                snap[snap_len] = w
                snap_len += 1
                w = nxt[w]
            snap[:snap_len] = np.sort(snap[:snap_len])
            lg = 1
            while (1 << lg) < snap_len:
                lg += 1
            ops += snap_len * lg
            snap_level = top
            cur = 0

        u = snap[cur]
        cur += 1
        chosen[n_chosen] = u
        n_chosen += 1
        for q in range(inc_ptr[u], inc_ptr[u + 1]):
            i = inc[q]
            if retired[i]:
                continue
            retired[i] = True
            covered[i] = u
            remaining -= 1
            for j in range(set_ptr[i], set_ptr[i + 1]):
                v = set_elems[j]
                c = t[v]
                # unlink from L_c
                if prv[v] >= 0:
                    nxt[prv[v]] = nxt[v]
                else:
                    head[c] = nxt[v]
                if nxt[v] >= 0:
                    prv[nxt[v]] = prv[v]
                prv[v] = -1
                nxt[v] = -1
                c -= 1
                t[v] = c
                if c > 0:
                    nxt[v] = head[c]
                    if head[c] >= 0:
                        prv[head[c]] = v
                    head[c] = v
                ops += 1
    return chosen[:n_chosen].copy(), covered, ops
