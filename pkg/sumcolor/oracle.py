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

"""Exhaustive minimum-cost edge coloring of small instances, and the
instance families the solvers are checked against.

The oracle relies on nothing but the definition of a proper coloring. For
linear cost models it assigns colors edge by edge and prunes with the
partial cost plus, for every edge still uncolored, the cost of the cheapest
color currently free at both of its ends. For separable cost models the cost
depends only on class sizes, so it distributes edges over unlabeled classes
instead and evaluates complete partitions. In both searches parallel edges
take increasing colors (or classes) in EdgeId order.
"""

from .common import PreconditionError, OracleRefusal, DEFAULT_ORACLE_MAX_EDGES, REAL_TOLERANCE
from .instance import Multicycle, Multipath, Multigraph
from .coloring import EdgeColoring, greedy_color
from .costs import LinearCost, SumCost, evaluate

from collections import Counter, namedtuple
from itertools import product
import logging
import random

__all__ = [
    'OracleResult', 'oracle_min_cost', 'oracle_strength', 'multicycles',
    'multipaths', 'bipartite_multigraphs', 'enumerate_instances',
    'random_instance',
]

log = logging.getLogger(__name__)

OracleResult = namedtuple('OracleResult', ['cost', 'coloring', 'strength', 'nodes'])

def _twins(ends):
    """For every edge, the previous edge with the same endpoints, or None."""
    last = {}
    ret = []
    for i, (u, v) in enumerate(ends):
        key = (min(u, v), max(u, v))
        ret.append(last.get(key))
        last[key] = i
    return ret

class _LinearSearch:
    """Color-by-color branch and bound for costs that add up edge by edge."""
    def __init__(self, ends, nv, model, max_colors, tolerance):
        self.ends = ends
        self.twin = _twins(ends)
        self.k = max_colors
        self.cost = [None] + [ model.color_cost(c) for c in range(1, max_colors + 1) ]
        self.exact = model.exact
        self.tolerance = tolerance
        self.colors = [0] * len(ends)
        self.at = [ set() for _ in range(nv) ]
        self.inc = [ [] for _ in range(nv) ]
        for j, (u, v) in enumerate(ends):
            self.inc[u].append(j)
            self.inc[v].append(j)
        # cheapest color free at both ends of every uncolored edge, the sum
        # of their costs and how many edges have none left
        self.low = [1] * len(ends)
        self.rest = self.cost[1] * len(ends) if max_colors else 0
        self.dead = 0 if max_colors else len(ends)
        self.use = [0] * (max_colors + 1)
        self.distinct = 0
        self.nodes = 0
        self.best = None
        self.best_colors = None
        self.best_used = None

    def _raise_low(self, i, c):
        """Edges after i that just lost their cheapest free color c move on to
        the next free one. Return the (edge, old color) pairs changed.
        """
        changed = []
        u, v = self.ends[i]
        for j in self.inc[u] + self.inc[v]:
            if j <= i or self.low[j] != c:
                continue
            a, b = self.ends[j]
            d = c + 1
            while d <= self.k and (d in self.at[a] or d in self.at[b]):
                d += 1
            changed.append((j, c))
            self.low[j] = d
            self.rest -= self.cost[c]
            if d > self.k:
                self.dead += 1
            else:
                self.rest += self.cost[d]
        return changed

    def _above(self, x, y):
        return x > y if self.exact else x > y + self.tolerance

    def _descend(self, i, partial, fewest):
        self.nodes += 1
        if i == len(self.ends):
            if fewest:
                if self.distinct < self.best_used and not self._above(partial, self.best):
                    self.best_colors = list(self.colors)
                    self.best_used = self.distinct
            elif self.best is None or self._above(self.best, partial):
                self.best = partial
                self.best_colors = list(self.colors)
            return
        if self.dead:
            return
        lb = self.rest
        if self.best is not None:
            if fewest:
                if self._above(partial + lb, self.best) or self.distinct >= self.best_used:
                    return
            elif not self._above(self.best, partial + lb):
                return
        u, v = self.ends[i]
        t = self.twin[i]
        lo = self.colors[t] + 1 if t is not None else 1
        for c in range(lo, self.k + 1):
            if c in self.at[u] or c in self.at[v]:
                continue
            self.colors[i] = c
            self.at[u].add(c)
            self.at[v].add(c)
            self.use[c] += 1
            if self.use[c] == 1:
                self.distinct += 1
            rest, dead = self.rest, self.dead
            self.rest -= self.cost[self.low[i]]
            changed = self._raise_low(i, c)
            self._descend(i + 1, partial + self.cost[c], fewest)
            for j, old in changed:
                self.low[j] = old
            self.rest, self.dead = rest, dead
            self.use[c] -= 1
            if not self.use[c]:
                self.distinct -= 1
            self.at[u].discard(c)
            self.at[v].discard(c)
        self.colors[i] = 0

    def run(self, incumbent=None):
        if incumbent is not None:
            self.best, self.best_colors = incumbent
        self._descend(0, 0, False)
        if self.best_colors is None:
            return None
        self.best_used = len(set(self.best_colors))
        self._descend(0, 0, True)
        return self.best, self.best_colors, self.best_used

class _PartitionSearch:
    """Enumerate partitions of the edges into matchings (unlabeled classes)
    and keep the cheapest, then the one with fewest classes.
    """
    def __init__(self, ends, model, max_colors, tolerance):
        self.ends = ends
        self.twin = _twins(ends)
        self.model = model
        self.k = max_colors
        self.tolerance = tolerance
        self.cls = [0] * len(ends)
        self.verts = []
        self.sizes = []
        self.nodes = 0
        self.best = None

    def _better(self, cost, count):
        if self.best is None:
            return True
        best_cost, best_count, _ = self.best
        if self.model.exact:
            return (cost, count) < (best_cost, best_count)
        if cost < best_cost - self.tolerance:
            return True
        return abs(cost - best_cost) <= self.tolerance and count < best_count

    def _descend(self, i):
        self.nodes += 1
        if i == len(self.ends):
            cost = self.model.min_cost_of_sizes(self.sizes)
            if self._better(cost, len(self.sizes)):
                self.best = (cost, len(self.sizes), list(self.cls))
            return
        u, v = self.ends[i]
        t = self.twin[i]
        lo = self.cls[t] + 1 if t is not None else 0
        for j in range(lo, len(self.verts)):
            vs = self.verts[j]
            if u in vs or v in vs:
                continue
            vs.update((u, v))
            self.sizes[j] += 1
            self.cls[i] = j
            self._descend(i + 1)
            self.sizes[j] -= 1
            vs.difference_update((u, v))
        if len(self.verts) < self.k and lo <= len(self.verts):
            self.verts.append({u, v})
            self.sizes.append(1)
            self.cls[i] = len(self.verts) - 1
            self._descend(i + 1)
            self.verts.pop()
            self.sizes.pop()

    def run(self):
        self._descend(0)
        if self.best is None:
            return None
        cost, count, cls = self.best
        # largest class first
        sizes = Counter(cls)
        order = sorted(range(count), key=lambda j: -sizes[j])
        color = { j: c for c, j in enumerate(order, 1) }
        return cost, [ color[x] for x in cls ], count

def oracle_min_cost(g, model=None, max_colors=None, max_edges=DEFAULT_ORACLE_MAX_EDGES,
                    tolerance=REAL_TOLERANCE):
    """Return the OracleResult of an exhaustive search for a proper coloring
    of g of minimum cost, and the fewest colors among such colorings.

    Keyword arguments:
    g -- Any instance
    model -- A CostModel (default SumCost())
    max_colors -- Colors available (default m, always enough)
    max_edges -- Largest instance searched; larger ones raise OracleRefusal
    tolerance -- Tolerance for comparing real-valued costs
    """
    if model is None:
        model = SumCost()
    m = g.m
    if m > max_edges:
        log.warning('oracle refuses %d edges (bound %d)', m, max_edges)
        raise OracleRefusal(m, max_edges)
    if not m:
        return OracleResult(model.zero(), EdgeColoring(g, []), 0, 1)
    if max_colors is None:
        max_colors = m
    ends = list(g.iter_endpoints())

    if isinstance(model, LinearCost):
        if model.max_color is not None:
            max_colors = min(max_colors, model.max_color)
        search = _LinearSearch(ends, g.nv, model, max_colors, tolerance)
        incumbent = None
        start = greedy_color(g)
        if start.max_color <= max_colors:
            incumbent = (evaluate(model, start), list(start.colors))
        found = search.run(incumbent)
    else:
        search = _PartitionSearch(ends, model, max_colors, tolerance)
        found = search.run()

    if found is None:
        raise PreconditionError('no proper coloring of %r within %d colors' % (g, max_colors))
    _, colors, used = found
    f = EdgeColoring(g, colors)
    log.debug('oracle on %r: %s optimum %s after %d nodes', g, model, found[0], search.nodes)
    return OracleResult(evaluate(model, f), f, used, search.nodes)

def oracle_strength(g, max_edges=DEFAULT_ORACLE_MAX_EDGES):
    """Return the fewest colors used by a minimum sum coloring of g."""
    return oracle_min_cost(g, SumCost(), max_edges=max_edges).strength

def _check_range(name, lo, hi):
    if lo > hi:
        raise PreconditionError('empty %s range %d..%d' % (name, lo, hi))

def _canonical(mult):
    """Smallest rotation of mult or of its reverse."""
    n = len(mult)
    rev = mult[::-1]
    return min(min(s[i:] + s[:i] for i in range(n)) for s in (mult, rev))

def multicycles(n_min, n_max, mult_max, max_edges=None, dedupe=False):
    """Generate every Multicycle with n_min <= n <= n_max and multiplicities
    in 1..mult_max, by n and then lexicographically. max_edges skips larger
    instances; dedupe keeps one instance per rotation and reflection class.
    """
    _check_range('vertex count', max(n_min, 3), n_max)
    _check_range('multiplicity', 1, mult_max)
    for n in range(max(n_min, 3), n_max + 1):
        for mult in product(range(1, mult_max + 1), repeat=n):
            if max_edges is not None and sum(mult) > max_edges:
                continue
            if dedupe and _canonical(mult) != mult:
                continue
            yield Multicycle(n, mult)

def multipaths(l_min, l_max, mult_max, max_edges=None):
    """Generate every Multipath with l_min <= length <= l_max and
    multiplicities in 1..mult_max.
    """
    _check_range('length', max(l_min, 1), l_max)
    _check_range('multiplicity', 1, mult_max)
    for length in range(max(l_min, 1), l_max + 1):
        for mult in product(range(1, mult_max + 1), repeat=length):
            if max_edges is None or sum(mult) <= max_edges:
                yield Multipath(mult)

def _random_bipartite(rng, nv, ne):
    left = rng.randint(1, nv - 1)
    return Multigraph(nv, [ (rng.randrange(left), rng.randrange(left, nv)) for _ in range(ne) ])

def bipartite_multigraphs(seed, count, nv_max=8, ne_max=12):
    """Generate count random bipartite multigraphs with 2..nv_max vertices
    and 1..ne_max edges, reproducibly from seed.
    """
    _check_range('vertex count', 2, nv_max)
    _check_range('edge count', 1, ne_max)
    rng = random.Random(seed)
    for _ in range(count):
        yield _random_bipartite(rng, rng.randint(2, nv_max), rng.randint(1, ne_max))

_FAMILIES = {
    'multicycle': multicycles,
    'multipath': multipaths,
    'bipartite': bipartite_multigraphs,
}

def enumerate_instances(family, *args, **kwargs):
    """Dispatch to the generator of the named family ('multicycle',
    'multipath' or 'bipartite').
    """
    try:
        gen = _FAMILIES[family]
    except KeyError as v:
        raise PreconditionError('unknown instance family %r' % family) from v
    return gen(*args, **kwargs)

def random_instance(kind, n, max_mult, seed, edges=None):
    """Return one random instance: a multicycle on n vertices or a multipath
    of n bundles with multiplicities in 1..max_mult, or a bipartite
    multigraph on n vertices with the given number of edges (default 2n).
    """
    rng = random.Random(seed)
    if kind == 'multicycle':
        return Multicycle(n, [ rng.randint(1, max_mult) for _ in range(n) ])
    if kind == 'multipath':
        return Multipath([ rng.randint(1, max_mult) for _ in range(n) ])
    if kind == 'bipartite':
        if n < 2:
            raise PreconditionError('a bipartite multigraph needs at least 2 vertices')
        return _random_bipartite(rng, n, 2 * n if edges is None else edges)
    raise PreconditionError('unknown instance type %r' % kind)
