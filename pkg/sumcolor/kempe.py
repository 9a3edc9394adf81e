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

"""Alternating path (Kempe chain) recoloring for bipartite multigraphs.

reduce_bipartite turns any proper coloring of a bipartite multigraph into one
using only the colors 1..Delta, with a strictly smaller sum after every
recolored edge. It repeatedly takes the edge [a, b] of highest color
gamma > Delta. When a color alpha <= Delta is missing at a and b the edge
simply takes it. Otherwise alpha is missing at b and beta is missing at a;
swapping the maximal (alpha, beta) path leaving a frees alpha at a, and in a
bipartite graph that path cannot end at b.
"""

from .common import PreconditionError, SolverError, NotBipartite
from .instance import Multigraph
from .coloring import EdgeColoring, is_proper, _check_same_edges
from .strength import is_bipartite

from collections import namedtuple
import logging

__all__ = ['AlternatingPath', 'alternating_path', 'swap_path', 'reduce_bipartite', 'uncolored_edge_identities']

log = logging.getLogger(__name__)

class AlternatingPath(namedtuple('AlternatingPath', ['start', 'end', 'edges', 'alpha', 'beta'])):
    """A maximal path from start to end whose edges (EdgeIds, in walking
    order) alternate between colors alpha and beta, the first edge having
    color alpha. An empty path has start == end.
    """
    __slots__ = ()

    def __len__(self):
        return len(self.edges)

    @property
    def odd(self):
        return len(self.edges) % 2 == 1

def _color_index(ends, colors, wanted):
    """Map vertex -> {color: edge position} restricted to the wanted colors."""
    at = {}
    for i, ((u, v), c) in enumerate(zip(ends, colors)):
        if c in wanted:
            at.setdefault(u, {})[c] = i
            at.setdefault(v, {})[c] = i
    return at

def _walk(ends, at, start, first, second):
    """Follow edges of colors first, second, first, ... from start. Return
    (positions, end vertex).
    """
    path = []
    x, c, other = start, first, second
    while c in at.get(x, ()):
        i = at[x][c]
        path.append(i)
        u, v = ends[i]
        x = v if u == x else u
        c, other = other, c
    return path, x

def alternating_path(g, f, start, alpha, beta):
    """Return the maximal (alpha, beta) alternating path of f starting at
    vertex start. Its first edge has whichever of the two colors appears at
    start (swapping the arguments if needed); the path is empty when neither
    does. Raise PreconditionError when both colors appear at start, since the
    path would not end there.
    """
    _check_same_edges(g, f)
    ends = list(g.iter_endpoints())
    at = _color_index(ends, f.colors, (alpha, beta))
    here = at.get(start, {})
    if alpha in here and beta in here:
        raise PreconditionError('both colors %d and %d appear at vertex %d' % (alpha, beta, start))
    if beta in here:
        alpha, beta = beta, alpha
    positions, end = _walk(ends, at, start, alpha, beta)
    ids = list(g.edge_ids())
    return AlternatingPath(start, end, tuple(ids[i] for i in positions), alpha, beta)

def swap_path(f, p):
    """Exchange colors alpha and beta along the path p. Raise
    PreconditionError unless p is an alternating path of f that is maximal
    at both ends.
    """
    g = f.instance
    ends = list(g.iter_endpoints())
    at = _color_index(ends, f.colors, (p.alpha, p.beta))
    want = (p.alpha, p.beta)
    x = p.start
    for j, eid in enumerate(p.edges):
        i = g.edge_index(eid)
        if f.colors[i] != want[j % 2] or x not in ends[i]:
            raise PreconditionError('edge %r does not continue the alternating path' % (eid,))
        u, v = ends[i]
        x = v if u == x else u
    if x != p.end:
        raise PreconditionError('path ends at vertex %d, not %d' % (x, p.end))
    # the color preceding the first edge must be absent at start, the one
    # following the last edge absent at end
    if want[1] in at.get(p.start, ()):
        raise PreconditionError('path is not maximal at vertex %d' % p.start)
    if want[len(p.edges) % 2] in at.get(p.end, ()):
        raise PreconditionError('path is not maximal at vertex %d' % p.end)
    swap = { p.alpha: p.beta, p.beta: p.alpha }
    return f.recolored({ eid: swap[f.color_of(eid)] for eid in p.edges })

def reduce_bipartite(g, f, trace=None):
    """Recolor a proper coloring f of the bipartite instance g until it uses
    only the colors 1..Delta. The sum never increases.

    Keyword arguments:
    g -- A bipartite instance (usually a Multigraph)
    f -- A proper EdgeColoring of g
    trace -- Optional list receiving the sum after every recolored edge
    """
    ok, witness = is_bipartite(g)
    if not ok:
        raise NotBipartite(witness)
    _check_same_edges(g, f)
    if not is_proper(g, f):
        raise PreconditionError('reduction needs a proper coloring')

    delta = g.delta
    ends = list(g.iter_endpoints())
    colors = list(f.colors)
    at = { x: {} for x in range(g.nv) }
    for i, ((u, v), c) in enumerate(zip(ends, colors)):
        at[u][c] = i
        at[v][c] = i

    def recolor(i, c):
        u, v = ends[i]
        del at[u][colors[i]], at[v][colors[i]]
        colors[i] = c
        at[u][c] = i
        at[v][c] = i

    steps = 0
    total = sum(colors)
    while True:
        over = [ i for i, c in enumerate(colors) if c > delta ]
        if not over:
            break
        gamma = max(colors[i] for i in over)
        e = min(i for i in over if colors[i] == gamma)
        a, b = ends[e]
        common = [ c for c in range(1, delta + 1) if c not in at[a] and c not in at[b] ]
        if common:
            recolor(e, common[0])
        else:
            alpha = min(c for c in range(1, delta + 1) if c not in at[b])
            beta = min(c for c in range(1, delta + 1) if c not in at[a])
            path, end = _walk(ends, at, a, alpha, beta)
            if end == b:
                raise SolverError('(%d, %d) path from %d reached %d' % (alpha, beta, a, b))
            # clear both colors first so the two color maps never clash
            old = [ colors[i] for i in path ]
            for i in path:
                u, v = ends[i]
                del at[u][colors[i]], at[v][colors[i]]
            for i, c in zip(path, old):
                colors[i] = beta if c == alpha else alpha
                u, v = ends[i]
                at[u][colors[i]] = i
                at[v][colors[i]] = i
            recolor(e, alpha)
        new_total = sum(colors)
        if new_total >= total:
            raise SolverError('recoloring edge %d did not lower the sum' % e)
        total = new_total
        steps += 1
        if trace is not None:
            trace.append(total)

    log.debug('reduced to %d colors in %d steps', delta, steps)
    return EdgeColoring(g, colors)

def uncolored_edge_identities(g, e, f, r):
    """Check the counting identities at an edge e = [a, b] that a proper
    coloring f of g without e, using colors 1..r, cannot color. With C_x the
    colors at x and degrees d taken in g, all of these must hold:

        |C_a | C_b| = r
        |C_a & C_b| = d(a) + d(b) - r - 2
        |C_a - C_b| = r - d(b) + 1
        |C_b - C_a| = r - d(a) + 1

    Return True iff they do. Raise PreconditionError if f can be extended to
    e, or if f is not a proper coloring of g without e within 1..r.
    """
    if not isinstance(g, Multigraph):
        e = g.edge_index(e)
        g = g.to_multigraph()
    rest = g.delete_edge(e)
    _check_same_edges(rest, f)
    if not is_proper(rest, f) or (f.colors and max(f.colors) > r):
        raise PreconditionError('expected a proper coloring of g - e with colors 1..%d' % r)
    a, b = g.edges[e]
    ca = f.colors_at(a)
    cb = f.colors_at(b)
    free = [ c for c in range(1, r + 1) if c not in ca and c not in cb ]
    if free:
        raise PreconditionError('color %d is free at both ends of edge %d' % (free[0], e))
    deg = g.degrees()
    return (len(ca | cb) == r
            and len(ca & cb) == deg[a] + deg[b] - r - 2
            and len(ca - cb) == r - deg[b] + 1
            and len(cb - ca) == r - deg[a] + 1)
