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

"""Cost models for edge colorings, prefix dominance of class-size profiles,
and robustness checks of solver output against the exhaustive oracle.

A cost model charges c(i, k) for a color class of color i holding k edges,
with c(i, 0) = 0, and the cost of a coloring is the sum over its classes.
Two families are provided:

    linear      c(i, k) = c_i * k with nondecreasing color costs c_i
                (SumCost is c_i = i, ColorCosts takes an explicit list)
    separable   c(i, k) = c(k) for a concave c with c(0) = 0
                (ConcaveSeparable takes a table, EntropyCost uses
                c(k) = -(k/m) ln(k/m))

For both, whenever the profile a prefix-dominates the profile b and both
count the same edges, cost(a) <= cost(b).
"""

from .common import PreconditionError, ParseError, REAL_TOLERANCE, DEFAULT_ORACLE_MAX_EDGES
from .coloring import is_proper

from abc import ABCMeta, abstractmethod
from collections import namedtuple
from itertools import accumulate, zip_longest
import logging
import math

__all__ = [
    'CostModel', 'LinearCost', 'SumCost', 'ColorCosts', 'SeparableCost',
    'ConcaveSeparable', 'EntropyCost', 'RobustRow', 'parse_cost_model',
    'evaluate', 'costs_equal', 'prefix_dominates', 'check_property',
    'verify_robust',
]

log = logging.getLogger(__name__)

RobustRow = namedtuple('RobustRow', ['model', 'cost', 'optimum', 'optimal'])

class CostModel(metaclass=ABCMeta):
    """Derive to define a cost model."""
    @property
    @abstractmethod
    def exact(self):
        """Abstract property that must be true iff costs are integers and
        compare exactly.
        """
        pass

    @abstractmethod
    def class_cost(self, color, size):
        """Abstract method that must return c(color, size), which is 0 for
        size 0.
        """
        pass

    @abstractmethod
    def min_cost_of_sizes(self, sizes):
        """Abstract method that must return the cheapest cost of color
        classes with the given sizes, over all ways of giving them distinct
        colors.
        """
        pass

    def profile_cost(self, profile):
        """Return the cost of a class-size profile (size of color 1 first)."""
        return sum(self.class_cost(i, k) for i, k in enumerate(profile, 1) if k)

    def zero(self):
        return 0 if self.exact else 0.0

class LinearCost(CostModel):
    """Partial implementation for c(i, k) = c_i * k with nondecreasing c_i.
    Every edge colored i costs c_i, so costs add up edge by edge.
    """
    @abstractmethod
    def color_cost(self, color):
        """Abstract method that must return c_color."""
        pass

    @property
    def max_color(self):
        """Return the largest color with a cost, or None when unbounded."""
        return None

    def class_cost(self, color, size):
        return self.color_cost(color) * size if size else self.zero()

    def min_cost_of_sizes(self, sizes):
        ordered = sorted((k for k in sizes if k), reverse=True)
        return self.profile_cost(ordered)

class SumCost(LinearCost):
    """The chromatic sum: c_i = i."""
    exact = True

    def color_cost(self, color):
        return color

    def __str__(self):
        return 'sum'

class ColorCosts(LinearCost):
    """Explicit color costs. They are sorted ascending on construction, which
    only renames colors.
    """
    def __init__(self, costs):
        costs = tuple(sorted(costs))
        if not costs:
            raise PreconditionError('color cost list is empty')
        if costs[0] < 0:
            raise PreconditionError('color costs must be nonnegative')
        self._costs = costs

    @property
    def costs(self):
        return self._costs

    @property
    def exact(self):
        return all(isinstance(c, int) for c in self._costs)

    @property
    def max_color(self):
        return len(self._costs)

    def color_cost(self, color):
        if color > len(self._costs):
            raise PreconditionError('no cost for color %d (%d costs given)' % (color, len(self._costs)))
        return self._costs[color - 1]

    def __str__(self):
        return 'occp:' + ','.join(str(c) for c in self._costs)

class SeparableCost(CostModel):
    """Partial implementation for c(i, k) = c(k), independent of the color."""
    @abstractmethod
    def size_cost(self, size):
        """Abstract method that must return c(size)."""
        pass

    def class_cost(self, color, size):
        return self.size_cost(size) if size else self.zero()

    def min_cost_of_sizes(self, sizes):
        return sum((self.size_cost(k) for k in sizes if k), self.zero())

class ConcaveSeparable(SeparableCost):
    """A concave cost table t where t[k] is the cost of a class of k edges.
    t[0] must be 0, and t[k+1] - t[k] must not increase with k.
    """
    def __init__(self, table):
        table = tuple(table)
        if not table or table[0] != 0:
            raise PreconditionError('concave cost table must start with c(0) = 0')
        steps = [ y - x for x, y in zip(table, table[1:]) ]
        if any(d2 > d1 for d1, d2 in zip(steps, steps[1:])):
            raise PreconditionError('cost table %r is not concave' % (table,))
        self._table = table

    @property
    def table(self):
        return self._table

    @property
    def exact(self):
        return all(isinstance(c, int) for c in self._table)

    def size_cost(self, size):
        if size >= len(self._table):
            raise PreconditionError('cost table stops at size %d, class has %d edges'
                    % (len(self._table) - 1, size))
        return self._table[size]

    def __str__(self):
        return 'concave:' + ','.join(str(c) for c in self._table)

class EntropyCost(SeparableCost):
    """Entropy of the class-size distribution of m edges, natural log."""
    exact = False

    def __init__(self, m):
        if m < 1:
            raise PreconditionError('entropy cost needs at least one edge')
        self._m = m

    @property
    def m(self):
        return self._m

    def size_cost(self, size):
        if not size:
            return 0.0
        x = size / self._m
        return -x * math.log(x)

    def __str__(self):
        return 'entropy'

def parse_cost_model(text, m=None):
    """Parse 'sum', 'entropy', 'occp:c1,c2,...' or 'concave:t0,t1,...'.
    The entropy model is bound to m edges, which must then be given.
    """
    name, _, args = text.strip().partition(':')
    name = name.lower()
    def numbers():
        try:
            return [ float(x) if '.' in x else int(x) for x in args.split(',') if x.strip() ]
        except ValueError as v:
            raise ParseError('bad number in cost model %r' % text) from v
    if name == 'sum' and not args:
        return SumCost()
    if name == 'entropy' and not args:
        if m is None:
            raise PreconditionError('entropy cost needs the edge count')
        return EntropyCost(m)
    if name == 'occp':
        return ColorCosts(numbers())
    if name == 'concave':
        return ConcaveSeparable(numbers())
    raise ParseError('unknown cost model %r' % text)

def evaluate(model, f):
    """Return the cost of the coloring f under model."""
    if isinstance(model, EntropyCost) and model.m != len(f):
        raise PreconditionError('entropy model is bound to %d edges, coloring has %d' % (model.m, len(f)))
    return model.profile_cost(f.profile)

def costs_equal(model, x, y, tolerance=REAL_TOLERANCE):
    """Compare two costs exactly for exact models, within tolerance
    otherwise.
    """
    if model.exact:
        return x == y
    return abs(x - y) <= tolerance

def _check_nonincreasing(seq):
    if any(y > x for x, y in zip(seq, seq[1:])):
        raise PreconditionError('sequence %r is not nonincreasing' % (list(seq),))
    if seq and seq[-1] < 0:
        raise PreconditionError('sequence %r has negative entries' % (list(seq),))

def prefix_dominates(a, b):
    """True iff every prefix sum of a is at least the matching prefix sum of
    b, the shorter sequence being padded with zeros. Both must be
    nonincreasing.
    """
    a, b = tuple(a), tuple(b)
    _check_nonincreasing(a)
    _check_nonincreasing(b)
    pairs = list(zip_longest(a, b, fillvalue=0))
    return all(x >= y for x, y in zip(accumulate(p for p, _ in pairs), accumulate(q for _, q in pairs)))

def check_property(model, a, b, tolerance=REAL_TOLERANCE):
    """For profiles a and b with the same total, a prefix-dominating b,
    return True iff cost(a) <= cost(b) under model (within tolerance for
    real-valued models).
    """
    if not prefix_dominates(a, b):
        raise PreconditionError('%r does not prefix-dominate %r' % (list(a), list(b)))
    if sum(a) != sum(b):
        raise PreconditionError('profiles count %d and %d edges' % (sum(a), sum(b)))
    ca = model.profile_cost(a)
    cb = model.profile_cost(b)
    if model.exact:
        return ca <= cb
    return ca <= cb + tolerance

def verify_robust(g, f, models, max_edges=DEFAULT_ORACLE_MAX_EDGES, tolerance=REAL_TOLERANCE):
    """Compare the cost of f with the oracle optimum for every model. Return
    a list of RobustRow(model, cost, optimum, optimal). Raise OracleRefusal
    for instances above max_edges and PreconditionError unless f is a proper
    coloring of g.
    """
    from .oracle import oracle_min_cost

    if not is_proper(g, f):
        raise PreconditionError('robustness needs a proper coloring of the instance')
    rows = []
    for model in models:
        cost = evaluate(model, f)
        optimum = oracle_min_cost(g, model, max_edges=max_edges).cost
        ok = costs_equal(model, cost, optimum, tolerance)
        log.debug('%s: cost %s, optimum %s', model, cost, optimum)
        rows.append(RobustRow(model, cost, optimum, ok))
    return rows
