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

"""Edge colorings of instances, their derived statistics, and generic
colorings used as starting points by the Kempe reducer and the oracle.
"""

from .common import PreconditionError
from .instance import Instance

from collections import Counter, namedtuple
import random

__all__ = [
    'EdgeColoring', 'ColoringStats', 'WorkCounter', 'is_proper',
    'coloring_stats', 'is_equitable', 'greedy_color', 'random_proper_coloring',
]

ColoringStats = namedtuple('ColoringStats', ['sum', 'profile', 'colors_used'])

class WorkCounter:
    """Operation-count probe. Solvers accepting a probe call tick() once per
    elementary step, so growth can be measured without timing noise.
    """
    def __init__(self):
        self.count = 0

    def tick(self, steps=1):
        self.count += steps

class EdgeColoring:
    """A total assignment of positive integer colors to the edges of an
    instance, stored in the instance's EdgeId order. Immutable.
    """
    def __init__(self, instance, colors):
        """Validate and store the coloring.

        Keyword arguments:
        instance -- The colored Instance
        colors -- One color per edge, in the instance's EdgeId order
        """
        colors = tuple(colors)
        if len(colors) != instance.m:
            raise PreconditionError('coloring covers %d edges, instance has %d' % (len(colors), instance.m))
        if colors and min(colors) < 1:
            raise PreconditionError('colors must be positive integers')
        self._instance = instance
        self._colors = colors
        self._profile = None

    @classmethod
    def from_mapping(cls, instance, mapping):
        """Build a coloring from a mapping EdgeId -> color, which must cover
        every edge of the instance.
        """
        colors = [None] * instance.m
        for eid, color in mapping.items():
            try:
                colors[instance.edge_index(eid)] = color
            except KeyError as v:
                raise PreconditionError('unknown edge %r' % (eid,)) from v
        if None in colors:
            missing = next(eid for eid in instance.edge_ids() if colors[instance.edge_index(eid)] is None)
            raise PreconditionError('partial coloring: edge %r has no color' % (missing,))
        return cls(instance, colors)

    @classmethod
    def from_bundles(cls, instance, bundle_colors):
        """Build a coloring of a bundled instance from one list of colors per
        bundle, indexed by copy.
        """
        colors = []
        for b, bc in enumerate(bundle_colors):
            if len(bc) != instance.mult[b]:
                raise PreconditionError('bundle %d has %d colors for %d copies' % (b, len(bc), instance.mult[b]))
            colors.extend(bc)
        return cls(instance, colors)

    @property
    def instance(self):
        """Return the colored instance."""
        return self._instance

    @property
    def colors(self):
        """Return the colors in EdgeId order."""
        return self._colors

    def color_of(self, edge_id):
        """Return the color f(e) of the given edge."""
        return self._colors[self._instance.edge_index(edge_id)]

    def items(self):
        """Generate (EdgeId, color) pairs in EdgeId order."""
        return zip(self._instance.edge_ids(), self._colors)

    @property
    def sum(self):
        """Return the sum of all colors."""
        return sum(self._colors)

    @property
    def profile(self):
        """Return the class sizes |E_1|, |E_2|, ... up to the largest color
        used.
        """
        if self._profile is None:
            counts = Counter(self._colors)
            top = max(counts, default=0)
            self._profile = tuple(counts.get(i, 0) for i in range(1, top + 1))
        return self._profile

    @property
    def max_color(self):
        """Return the largest color used (0 for an edgeless instance)."""
        return len(self.profile)

    @property
    def colors_used(self):
        """Return the number of nonempty color classes."""
        return sum(1 for x in self.profile if x)

    def color_class(self, color):
        """Return the EdgeIds of the class E_color."""
        return [ eid for eid, c in self.items() if c == color ]

    def classes(self):
        """Return a dict color -> list of EdgeIds for every used color."""
        ret = {}
        for eid, c in self.items():
            ret.setdefault(c, []).append(eid)
        return ret

    def colors_at(self, vertex):
        """Return C_x, the set of colors on edges incident to the vertex."""
        return { c for (u, v), c in zip(self._instance.iter_endpoints(), self._colors)
                if vertex in (u, v) }

    def recolored(self, overrides):
        """Return a copy of this coloring with the colors of some edges
        replaced, given as a mapping EdgeId -> color.
        """
        colors = list(self._colors)
        for eid, color in overrides.items():
            colors[self._instance.edge_index(eid)] = color
        return type(self)(self._instance, colors)

    def __len__(self):
        return len(self._colors)

    def __eq__(self, other):
        return isinstance(other, EdgeColoring) and self._instance == other._instance \
                and self._colors == other._colors

    def __hash__(self):
        return hash(self._colors)

    def __repr__(self):
        return 'EdgeColoring(%r, sum=%d, profile=%r)' % (self._instance, self.sum, list(self.profile))

def _check_same_edges(g, f):
    """Raise unless f is a coloring of an instance with g's edge list."""
    h = f.instance
    if h is g or h == g:
        return
    if h.m != g.m or list(h.iter_endpoints()) != list(g.iter_endpoints()):
        raise PreconditionError('coloring does not belong to this instance')

def is_proper(g, f):
    """True iff no two edges of g sharing a vertex have the same color in f.
    Parallel edges share both endpoints and so always need distinct colors.
    """
    if not isinstance(g, Instance):
        raise TypeError('expected an Instance')
    _check_same_edges(g, f)
    seen = set()
    for (u, v), c in zip(g.iter_endpoints(), f.colors):
        if (u, c) in seen or (v, c) in seen:
            return False
        seen.add((u, c))
        seen.add((v, c))
    return True

def coloring_stats(f):
    """Return (sum, profile, colors_used) for the coloring f."""
    return ColoringStats(f.sum, f.profile, f.colors_used)

def is_equitable(f):
    """True iff the sizes of any two used color classes differ by at most one."""
    sizes = [ x for x in f.profile if x ]
    return not sizes or max(sizes) - min(sizes) <= 1

def greedy_color(g):
    """First-fit proper coloring: every edge, in EdgeId order, gets the
    smallest color free at both endpoints.
    """
    at = [ set() for _ in range(g.nv) ]
    colors = []
    for u, v in g.iter_endpoints():
        c = 1
        while c in at[u] or c in at[v]:
            c += 1
        at[u].add(c)
        at[v].add(c)
        colors.append(c)
    return EdgeColoring(g, colors)

def random_proper_coloring(g, seed, max_colors=None):
    """Seeded random proper coloring: edges are visited in random order and
    each takes a random color among those free at both endpoints within
    1..max_colors (default: twice the maximum degree, which always leaves a
    free color).
    """
    rng = random.Random(seed)
    if max_colors is None:
        max_colors = max(2 * g.delta, 1)
    ends = list(g.iter_endpoints())
    at = [ set() for _ in range(g.nv) ]
    colors = [0] * len(ends)
    order = list(range(len(ends)))
    rng.shuffle(order)
    for i in order:
        u, v = ends[i]
        free = [ c for c in range(1, max_colors + 1) if c not in at[u] and c not in at[v] ]
        if not free:
            raise PreconditionError('max_colors=%d leaves edge %d without a free color' % (max_colors, i))
        c = rng.choice(free)
        at[u].add(c)
        at[v].add(c)
        colors[i] = c
    return EdgeColoring(g, colors)
