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

"""Instance types shared by every solver: multicycles, their residuals,
multipaths, and generic loopless multigraphs.

Edges of bundled instances (multicycles, residuals and multipaths) are
identified by (bundle, copy) pairs with 0 <= copy < multiplicity of the
bundle. Edges of a Multigraph are identified by their index in the edge list.
Every instance enumerates its edges in sorted EdgeId order, and colorings are
stored in that same order.
"""

from .common import MalformedInstance

from abc import ABCMeta, abstractmethod
from bisect import bisect_right
from itertools import accumulate

import networkx as nx

__all__ = [
    'Instance', 'BundledInstance', 'CyclicInstance', 'Multicycle', 'CycleResidual', 'Multipath',
    'PathUnion', 'Multigraph', 'make_multicycle', 'split_residual', 'positive_runs',
]

class Instance(metaclass=ABCMeta):
    """Derive to define an instance type. Instances are immutable values."""
    @property
    @abstractmethod
    def kind(self):
        """Abstract property that must return the instance family name as
        used by the text format ('multicycle', 'multipath' or 'multigraph').
        """
        pass

    @property
    @abstractmethod
    def nv(self):
        """Abstract property that must return the number of vertices."""
        pass

    @property
    @abstractmethod
    def m(self):
        """Abstract property that must return the number of edges."""
        pass

    @abstractmethod
    def edge_ids(self):
        """Abstract method that must generate every EdgeId in sorted order."""
        pass

    @abstractmethod
    def endpoints(self, edge_id):
        """Abstract method that must return the (u, v) endpoints of an edge."""
        pass

    @abstractmethod
    def edge_index(self, edge_id):
        """Abstract method that must return the position of edge_id in the
        sorted EdgeId order, raising KeyError for unknown identities.
        """
        pass

    @abstractmethod
    def iter_endpoints(self):
        """Abstract method that must generate (u, v) for every edge in sorted
        EdgeId order.
        """
        pass

    @property
    @abstractmethod
    def matching_number(self):
        """Abstract property that must return the size of a maximum matching."""
        pass

    @abstractmethod
    def _key(self):
        """Abstract method returning a hashable value identifying the
        instance, used for equality.
        """
        pass

    def degrees(self):
        """Return the list of vertex degrees."""
        deg = [0] * self.nv
        for u, v in self.iter_endpoints():
            deg[u] += 1
            deg[v] += 1
        return deg

    @property
    def delta(self):
        """Return the maximum degree (0 for an edgeless instance)."""
        return max(self.degrees(), default=0)

    def to_multigraph(self):
        """Return an equivalent Multigraph whose edge list follows sorted
        EdgeId order, so that colorings carry over position by position.
        """
        return Multigraph(self.nv, list(self.iter_endpoints()))

    def __eq__(self, other):
        return isinstance(other, Instance) and self.kind == other.kind and self._key() == other._key()

    def __hash__(self):
        return hash((self.kind, self._key()))

def _check_counts(mult, minimum):
    """Validate a multiplicity sequence, returning it as a tuple."""
    try:
        mult = tuple(int(x) for x in mult)
    except (TypeError, ValueError) as v:
        raise MalformedInstance('multiplicities must be integers') from v
    bad = [ x for x in mult if x < minimum ]
    if bad:
        raise MalformedInstance('multiplicities must be >= %d, got %d' % (minimum, bad[0]))
    return mult

class BundledInstance(Instance):
    """Partial implementation for instances made of bundles of parallel edges,
    each bundle joining two consecutive vertices.
    """
    def __init__(self, mult):
        self._mult = mult
        self._offsets = (0,) + tuple(accumulate(mult))

    @property
    def mult(self):
        """Return the tuple of bundle multiplicities."""
        return self._mult

    @property
    def m(self):
        """Return the number of edges."""
        return self._offsets[-1]

    @property
    def offsets(self):
        """Return the prefix sums of the multiplicities: edges of bundle b
        occupy positions offsets[b] .. offsets[b+1]-1 in EdgeId order.
        """
        return self._offsets

    @abstractmethod
    def bundle_endpoints(self, bundle):
        """Abstract method that must return the (u, v) vertices joined by the
        given bundle.
        """
        pass

    def edge_ids(self):
        """Generate (bundle, copy) pairs in sorted order."""
        for b, mb in enumerate(self._mult):
            for c in range(mb):
                yield (b, c)

    def endpoints(self, edge_id):
        """Return the endpoints of the edge (bundle, copy)."""
        b, c = edge_id
        if not 0 <= c < self._mult[b]:
            raise KeyError(edge_id)
        return self.bundle_endpoints(b)

    def edge_index(self, edge_id):
        """Return the position of (bundle, copy) in EdgeId order."""
        b, c = edge_id
        if not (0 <= b < len(self._mult) and 0 <= c < self._mult[b]):
            raise KeyError(edge_id)
        return self._offsets[b] + c

    def edge_at(self, index):
        """Return the EdgeId at the given position in EdgeId order."""
        b = bisect_right(self._offsets, index) - 1
        return (b, index - self._offsets[b])

    def iter_endpoints(self):
        for b, mb in enumerate(self._mult):
            uv = self.bundle_endpoints(b)
            for _ in range(mb):
                yield uv

    def _key(self):
        return (self.nv, self._mult)

class CyclicInstance(BundledInstance):
    """Partial implementation for bundles arranged around a cycle of n >= 3
    vertices: bundle i joins vertex i and vertex (i+1) mod n.
    """
    _minimum_mult = 1

    def __init__(self, n, mult):
        """Validate and store the instance.

        Keyword arguments:
        n -- The number of vertices (at least 3)
        mult -- The n bundle multiplicities
        """
        try:
            n = int(n)
        except (TypeError, ValueError) as v:
            raise MalformedInstance('vertex count must be an integer') from v
        if n < 3:
            raise MalformedInstance('a multicycle needs at least 3 vertices, got %d' % n)
        mult = _check_counts(mult, self._minimum_mult)
        if len(mult) != n:
            raise MalformedInstance('expected %d multiplicities, got %d' % (n, len(mult)))
        super().__init__(mult)
        self._n = n

    @property
    def n(self):
        """Return the number of vertices."""
        return self._n

    @property
    def nv(self):
        return self._n

    @property
    def k(self):
        """Return floor(n/2), the size of a maximum matching of the cycle."""
        return self._n // 2

    def bundle_endpoints(self, bundle):
        return (bundle, (bundle + 1) % self._n)

    def degree(self, vertex):
        """Return the degree of the given vertex, m_{v-1} + m_v."""
        return self._mult[vertex - 1] + self._mult[vertex]

    def degrees(self):
        mult = self._mult
        return [ mult[i - 1] + mult[i] for i in range(self._n) ]

    def __repr__(self):
        return '%s(%d, %r)' % (type(self).__name__, self._n, list(self._mult))

class Multicycle(CyclicInstance):
    """A cycle on n >= 3 vertices whose bundle i, of multiplicity m_i >= 1,
    joins vertex i and vertex (i+1) mod n.
    """
    kind = 'multicycle'

    @property
    def matching_number(self):
        return self.k

class CycleResidual(CyclicInstance):
    """What remains of a multicycle after removing edges: identical to a
    Multicycle except that multiplicities may drop to zero, in which case the
    residual is a disjoint union of multipaths.
    """
    kind = 'residual'
    _minimum_mult = 0

    @property
    def has_zero(self):
        """True iff some bundle is empty."""
        return 0 in self._mult

    @property
    def matching_number(self):
        if not self.has_zero:
            return self.k
        return sum(p.matching_number for p in split_residual(self))

    def to_multicycle(self):
        """Return the residual as a Multicycle, which requires every
        multiplicity to be positive.
        """
        return Multicycle(self._n, self._mult)

def make_multicycle(n, mult):
    """Construct a validated Multicycle, rejecting n < 3, a length mismatch
    and multiplicities below one with MalformedInstance.
    """
    return Multicycle(n, mult)

class Multipath(BundledInstance):
    """A path of l >= 1 bundles: bundle b joins vertex b and vertex b+1 and
    sits at position b+1 counted from the left. origin maps each bundle to the bundle
    it came from when the path was split out of a larger instance.
    """
    kind = 'multipath'

    def __init__(self, mult, origin=None):
        """Validate and store the instance.

        Keyword arguments:
        mult -- The bundle multiplicities, left to right (all >= 1)
        origin -- Optional bundle labels in the parent instance (default
            0..l-1)
        """
        mult = _check_counts(mult, 1)
        if not mult:
            raise MalformedInstance('a multipath needs at least one bundle')
        super().__init__(mult)
        if origin is None:
            origin = range(len(mult))
        self._origin = tuple(origin)
        if len(self._origin) != len(mult):
            raise MalformedInstance('origin must label every bundle')

    @property
    def length(self):
        """Return the number of bundles l."""
        return len(self._mult)

    @property
    def nv(self):
        return len(self._mult) + 1

    @property
    def origin(self):
        """Return the parent bundle label of every bundle."""
        return self._origin

    @property
    def matching_number(self):
        return (len(self._mult) + 1) // 2

    def bundle_endpoints(self, bundle):
        return (bundle, bundle + 1)

    def degrees(self):
        mult = self._mult
        return [ (mult[i - 1] if i > 0 else 0) + (mult[i] if i < len(mult) else 0)
                for i in range(len(mult) + 1) ]

    def __repr__(self):
        return 'Multipath(%r)' % (list(self._mult),)

class PathUnion(BundledInstance):
    """A disjoint union of multipaths viewed as one instance. Bundles are
    numbered consecutively across the paths, and so are vertices: path j
    occupies its own block of length_j + 1 vertices.
    """
    kind = 'pathunion'

    def __init__(self, paths):
        paths = tuple(paths)
        if not all(isinstance(p, Multipath) for p in paths):
            raise MalformedInstance('a path union is made of Multipath instances')
        super().__init__(tuple(x for p in paths for x in p.mult))
        self._paths = paths
        # path index of every bundle
        self._owner = tuple(j for j, p in enumerate(paths) for _ in range(p.length))

    @property
    def paths(self):
        """Return the component multipaths."""
        return self._paths

    @property
    def nv(self):
        return len(self._mult) + len(self._paths)

    @property
    def origin(self):
        """Return the parent bundle label of every bundle."""
        return tuple(x for p in self._paths for x in p.origin)

    def components(self):
        """Return the bundles of every path as lists of global bundle indices."""
        ret = []
        start = 0
        for p in self._paths:
            ret.append(list(range(start, start + p.length)))
            start += p.length
        return ret

    @property
    def matching_number(self):
        return sum(p.matching_number for p in self._paths)

    def bundle_endpoints(self, bundle):
        u = bundle + self._owner[bundle]
        return (u, u + 1)

    def _key(self):
        return tuple(p.mult for p in self._paths)

    def __repr__(self):
        return 'PathUnion(%r)' % (list(self._paths),)

def positive_runs(mult, cyclic):
    """Return the maximal runs of consecutive positive entries of mult as
    lists of indices. A cyclic sequence is traversed from the entry after its
    lowest-index zero, so runs never straddle that zero; a cyclic sequence
    without zeros is returned whole.
    """
    n = len(mult)
    if cyclic:
        try:
            z = mult.index(0)
        except ValueError:
            return [ list(range(n)) ]
        order = [ (z + 1 + j) % n for j in range(n) ]
    else:
        order = range(n)
    runs = []
    current = []
    for i in order:
        if mult[i] > 0:
            current.append(i)
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)
    return runs

def split_residual(r):
    """Split a residual with at least one empty bundle into its multipaths.
    Each Multipath's origin maps its bundles back to the residual's bundles.
    """
    if not isinstance(r, CycleResidual):
        r = CycleResidual(r.n, r.mult)
    if not r.has_zero:
        raise MalformedInstance('residual has no empty bundle; treat it as a multicycle')
    mult = r.mult
    return [ Multipath([ mult[i] for i in run ], origin=run)
            for run in positive_runs(mult, cyclic=True) ]

class Multigraph(Instance):
    """A loopless multigraph on vertices 0..nv-1. Parallel edges are allowed;
    an edge is identified by its index in the edge list.
    """
    kind = 'multigraph'

    def __init__(self, nv, edges):
        """Validate and store the instance.

        Keyword arguments:
        nv -- The number of vertices
        edges -- A sequence of (u, v) vertex pairs with u != v
        """
        try:
            nv = int(nv)
            edges = tuple((int(u), int(v)) for u, v in edges)
        except (TypeError, ValueError) as v:
            raise MalformedInstance('vertices must be integers') from v
        if nv < 0:
            raise MalformedInstance('negative vertex count')
        for i, (u, v) in enumerate(edges):
            if u == v:
                raise MalformedInstance('edge %d is a loop at vertex %d' % (i, u))
            if not (0 <= u < nv and 0 <= v < nv):
                raise MalformedInstance('edge %d has a vertex outside 0..%d' % (i, nv - 1))
        self._nv = nv
        self._edges = edges
        self._incidence = None

    @property
    def nv(self):
        return self._nv

    @property
    def m(self):
        return len(self._edges)

    @property
    def edges(self):
        """Return the edge list."""
        return self._edges

    def edge_ids(self):
        return iter(range(len(self._edges)))

    def endpoints(self, edge_id):
        return self._edges[edge_id]

    def edge_index(self, edge_id):
        if not 0 <= edge_id < len(self._edges):
            raise KeyError(edge_id)
        return edge_id

    def iter_endpoints(self):
        return iter(self._edges)

    def incidence(self):
        """Return, per vertex, the list of incident edge indices in increasing
        order.
        """
        if self._incidence is None:
            inc = [ [] for _ in range(self._nv) ]
            for i, (u, v) in enumerate(self._edges):
                inc[u].append(i)
                inc[v].append(i)
            self._incidence = tuple(tuple(x) for x in inc)
        return self._incidence

    def to_networkx(self):
        """Return the underlying simple graph as a networkx Graph. Parallel
        edges collapse, which preserves matchings and bipartiteness.
        """
        g = nx.Graph()
        g.add_nodes_from(range(self._nv))
        g.add_edges_from(self._edges)
        return g

    @property
    def matching_number(self):
        return len(nx.max_weight_matching(self.to_networkx(), maxcardinality=True))

    def delete_edge(self, edge_id):
        """Return the multigraph without the given edge. Edges after it shift
        down by one index.
        """
        return Multigraph(self._nv, self._edges[:edge_id] + self._edges[edge_id + 1:])

    def to_multigraph(self):
        return self

    def _key(self):
        return (self._nv, self._edges)

    def __repr__(self):
        return 'Multigraph(%d, %r)' % (self._nv, list(self._edges))
