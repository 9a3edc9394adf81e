#! /usr/bin/python3
#
# MIT License
#
# Copyright (C) 2026 The sumcolor authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""Closed-form chromatic index and chromatic edge strength.

For a multicycle on n vertices with m edges, maximum degree Delta and
k = floor(n/2), both the chromatic index and the edge strength equal Delta
when n is even and max(Delta, ceil(m/k)) when n is odd. For a bipartite
multigraph both equal Delta.
"""

from .common import MalformedInstance, NotBipartite
from .instance import CyclicInstance, Multigraph, Multipath

from collections import deque, namedtuple

__all__ = [
    'StrengthReport', 'ceil_div', 'chromatic_index_multicycle',
    'edge_strength_multicycle', 'is_bipartite', 'edge_strength_bipartite',
    'strength_multigraph', 'strength_report',
]

StrengthReport = namedtuple('StrengthReport', ['delta', 'load_bound', 'chromatic_index', 'edge_strength'])

def ceil_div(a, b):
    """Return ceil(a/b) for nonnegative a and positive b."""
    return -(-a // b)

def _load_bound(m, tau):
    return ceil_div(m, tau) if tau else 0

def chromatic_index_multicycle(g):
    """Return chi'(g): Delta for even n, max(Delta, ceil(m/k)) for odd n."""
    delta = g.delta
    if g.n % 2 == 0:
        return delta
    return max(delta, ceil_div(g.m, g.k))

def edge_strength_multicycle(g):
    """Return the StrengthReport of a multicycle. The edge strength equals
    the chromatic index.
    """
    if not isinstance(g, CyclicInstance) or 0 in g.mult:
        raise MalformedInstance('edge strength formula needs a multicycle with every multiplicity >= 1')
    chi = chromatic_index_multicycle(g)
    return StrengthReport(g.delta, _load_bound(g.m, g.k), chi, chi)

def _normalize_cycle(cycle):
    """Rotate a vertex cycle to start at its smallest vertex and orient it
    toward the smaller neighbor.
    """
    i = cycle.index(min(cycle))
    cycle = cycle[i:] + cycle[:i]
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = cycle[:1] + cycle[:0:-1]
    return tuple(cycle)

def is_bipartite(g):
    """Two-color g by breadth-first search. Return (True, None) when g is
    bipartite, otherwise (False, witness) where witness is an odd cycle as a
    tuple of vertices.
    """
    if not isinstance(g, Multigraph):
        g = g.to_multigraph()
    inc = g.incidence()
    edges = g.edges
    side = [None] * g.nv
    parent = [None] * g.nv
    for root in range(g.nv):
        if side[root] is not None:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for e in inc[x]:
                u, v = edges[e]
                y = v if u == x else u
                if side[y] is None:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    return False, _odd_cycle(parent, x, y)
    return True, None

def _odd_cycle(parent, x, y):
    """Close the tree paths from x and y (same BFS side) into an odd cycle."""
    up_x = [x]
    while parent[up_x[-1]] is not None:
        up_x.append(parent[up_x[-1]])
    on_x = { v: i for i, v in enumerate(up_x) }
    up_y = [y]
    while up_y[-1] not in on_x:
        up_y.append(parent[up_y[-1]])
    lca = up_y[-1]
    cycle = up_x[:on_x[lca] + 1] + up_y[-2::-1]
    return _normalize_cycle(cycle)

def edge_strength_bipartite(g):
    """Return s'(g) = chi'(g) = Delta for a bipartite multigraph. Raise
    NotBipartite, carrying an odd cycle, otherwise.
    """
    ok, witness = is_bipartite(g)
    if not ok:
        raise NotBipartite(witness)
    return g.delta

def strength_multigraph(g):
    """Return the StrengthReport of a bipartite multigraph; the load bound
    uses a maximum-cardinality matching.
    """
    delta = edge_strength_bipartite(g)
    return StrengthReport(delta, _load_bound(g.m, g.matching_number), delta, delta)

def strength_report(instance):
    """Dispatch to the formula matching the instance family."""
    if isinstance(instance, CyclicInstance):
        return edge_strength_multicycle(instance)
    if isinstance(instance, Multipath):
        delta = instance.delta
        return StrengthReport(delta, _load_bound(instance.m, instance.matching_number), delta, delta)
    return strength_multigraph(instance)
