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

"""Minimum sum edge coloring of multicycles.

The general driver starts from the largest color s' = s'(G) and repeatedly
removes a matching M whose removal lowers the edge strength by exactly one,
coloring M with the current color. Which matching depends on how the load
bound ceil(m/k) compares with the maximum degree Delta:

    EASY  ceil(m/k) >= Delta and k divides m: finish with a cyclic sweep.
    A     ceil(m/k) > Delta, r = m mod k != 0: any r pairwise disjoint edges.
    B     Delta > ceil(m/k): the smallest matching touching every vertex of
          degree Delta, built block by block.
    C     Delta = ceil(m/k), r != 0: the matching of case B, extended to r
          edges when it is smaller.

As soon as a bundle runs out, what is left is a union of multipaths and the
path solver finishes it with the colors below the current one.

Even cycles have a direct linear-time algorithm: the p-uniform multicycle
(p the smallest multiplicity) takes alternating odd and even colors, and the
remaining multipaths continue from color 2p+1.
"""

from .common import PreconditionError, SolverError
from .instance import CyclicInstance, positive_runs
from .coloring import EdgeColoring
from .strength import ceil_div, chromatic_index_multicycle
from .path_solver import color_runs

from collections import Counter, namedtuple
from enum import Enum
import logging

__all__ = [
    'Case', 'CaseTag', 'Block', 'classify_case', 'sweep_color', 'blocks',
    'select_matching', 'multicycle_color', 'even_multicycle_color',
]

log = logging.getLogger(__name__)

class Case(Enum):
    EASY = 'easy'
    A = 'a'
    B = 'b'
    C = 'c'

class CaseTag(namedtuple('CaseTag', ['case', 'delta', 'load', 'remainder'])):
    """The case of a multicycle together with the quantities deciding it:
    Delta, the load bound ceil(m/k), and r = m mod k.
    """
    __slots__ = ()

    def __str__(self):
        return 'case %s (delta %d, ceil(m/k) %d, r %d)' % (self.case.value, self.delta, self.load, self.remainder)

class Block(namedtuple('Block', ['start', 'length', 'full'])):
    """A maximal run of consecutive vertices of degree Delta, starting at
    vertex start. full is set when every vertex of the cycle has degree
    Delta.
    """
    __slots__ = ()

    @property
    def odd(self):
        return self.length % 2 == 1

def _classify(k, m, delta):
    load = ceil_div(m, k)
    r = m % k
    if load >= delta and r == 0:
        case = Case.EASY
    elif load > delta:
        case = Case.A
    elif delta > load:
        case = Case.B
    else:
        case = Case.C
    return CaseTag(case, delta, load, r)

def classify_case(n, mult):
    """Return the CaseTag of the multicycle with n vertices and the given
    positive multiplicities.
    """
    if n < 3 or len(mult) != n or min(mult) < 1:
        raise PreconditionError('case analysis needs a multicycle with every multiplicity >= 1')
    delta = max(mult[i - 1] + mult[i] for i in range(n))
    return _classify(n // 2, sum(mult), delta)

def _cyclic(g):
    if not isinstance(g, CyclicInstance):
        raise PreconditionError('expected a multicycle, got %r' % (g,))
    if 0 in g.mult:
        raise PreconditionError('every multiplicity must be at least 1')
    return g

def _sweep(mult, c):
    """Generate (bundle, color) for every edge, bundle by bundle and copy by
    copy, the t-th edge taking color (t mod c) + 1.
    """
    t = 0
    for b, mb in enumerate(mult):
        for _ in range(mb):
            yield b, t % c + 1
            t += 1

def sweep_color(g, c, probe=None):
    """Color an easy-case multicycle by sweeping colors 1..c around the cycle.
    Every class has exactly k edges. Raise PreconditionError unless
    m = c*k and c >= Delta.
    """
    _cyclic(g)
    if g.m != c * g.k or c < g.delta:
        raise PreconditionError('sweep needs m = %d*k and %d >= Delta, got m=%d k=%d Delta=%d'
                % (c, c, g.m, g.k, g.delta))
    colors = [ color for _, color in _sweep(g.mult, c) ]
    if probe is not None:
        probe.tick(len(colors))
    return EdgeColoring(g, colors)

def _blocks(deg, delta):
    n = len(deg)
    if all(d == delta for d in deg):
        return [ Block(0, n, True) ]
    ret = []
    for v in range(n):
        if deg[v] == delta and deg[v - 1] != delta:
            length = 1
            while deg[(v + length) % n] == delta:
                length += 1
            ret.append(Block(v, length, False))
    return ret

def blocks(g):
    """Return the blocks of a multicycle in clockwise order, starting with
    the lowest-index vertex of degree Delta whose predecessor has a smaller
    degree. A cycle whose vertices all have degree Delta is a single full
    block.
    """
    deg = _cyclic(g).degrees()
    return _blocks(deg, max(deg))

def _hitting_bundles(n, deg, delta):
    """Return the bundles of the smallest matching touching every vertex of
    degree delta.
    """
    bundles = []
    for blk in _blocks(deg, delta):
        if blk.full:
            if n % 2:
                raise SolverError('odd cycle with every degree equal to Delta has no hitting matching')
            bundles.extend(range(0, n, 2))
        else:
            # an odd block needs its last edge to leave the block
            bundles.extend((blk.start + j) % n for j in range(0, blk.length, 2))
    return bundles

def _widest_hitting_bundles(n, deg, delta):
    """Return the bundles of a largest matching touching every vertex of
    degree delta, or None if there is none. Bundles b-1 and b are the two
    that can cover vertex b.
    """
    need = [ d == delta for d in deg ]
    best = None
    for last in (0, 1):
        # score[s]: most bundles chosen so far, s telling whether the
        # previous bundle is one of them
        score = [ None, None ]
        score[last] = last
        back = []
        for b in range(n - 1):
            new, ptr = [ None, None ], [ None, None ]
            for p in (0, 1):
                if score[p] is None:
                    continue
                for s in (0, 1):
                    if (s and p) or (need[b] and not (p or s)):
                        continue
                    if new[s] is None or score[p] + s > new[s]:
                        new[s], ptr[s] = score[p] + s, p
            back.append(ptr)
            score = new
        for p in (0, 1):
            if score[p] is None or (last and p) or (need[n - 1] and not (p or last)):
                continue
            if best is None or score[p] > best[0]:
                best = (score[p], last, p, back)
    if best is None:
        return None
    _, last, s, back = best
    chosen = [ False ] * n
    chosen[n - 1] = bool(last)
    for b in range(n - 2, -1, -1):
        chosen[b] = bool(s)
        s = back[b][s]
    return [ b for b in range(n) if chosen[b] ]

def _narrow_hitting_bundles(n, deg, delta, bundles, size):
    """Shrink a matching touching every vertex of degree delta down to size
    edges, first dropping edges away from such vertices, then pairing the
    vertices of even blocks among themselves where the matching enters and
    leaves the block.
    """
    need = [ d == delta for d in deg ]
    chosen = set(bundles)
    for b in sorted(bundles):
        if len(chosen) == size:
            return sorted(chosen)
        if not need[b] and not need[(b + 1) % n]:
            chosen.discard(b)
    for blk in _blocks(deg, delta):
        if len(chosen) == size:
            break
        if blk.full or blk.odd or (blk.start - 1) % n not in chosen:
            continue
        chosen.difference_update((blk.start - 1 + j) % n for j in range(0, blk.length + 1, 2))
        chosen.update((blk.start + j) % n for j in range(0, blk.length, 2))
    return sorted(chosen)

def _select_bundles(n, deg, tag):
    k = n // 2
    if tag.case is Case.EASY:
        raise PreconditionError('easy case needs no matching: sweep instead')
    if tag.case is Case.A:
        return list(range(0, 2 * tag.remainder, 2))
    bundles = _hitting_bundles(n, deg, tag.delta)
    if tag.case is Case.C and len(bundles) < tag.remainder:
        used = set()
        for b in bundles:
            used.update((b, (b + 1) % n))
        for b in range(n):
            if len(bundles) == tag.remainder:
                break
            u, v = b, (b + 1) % n
            if u not in used and v not in used:
                bundles.append(b)
                used.update((u, v))
        if len(bundles) < tag.remainder:
            # widen even blocks by the edges entering and leaving them
            widest = _widest_hitting_bundles(n, deg, tag.delta)
            if widest is not None and len(widest) >= tag.remainder:
                bundles = _narrow_hitting_bundles(n, deg, tag.delta, widest, tag.remainder)
        if len(bundles) != tag.remainder:
            raise SolverError('cannot extend hitting matching of size %d to %d edges (k=%d)'
                    % (len(bundles), tag.remainder, k))
    return bundles

def select_matching(g, probe=None):
    """Return (M, tag): a smallest matching whose removal lowers s'(g) by
    exactly one, as a sorted list of EdgeIds (lowest copy of each chosen
    bundle), together with the CaseTag of g. Raise PreconditionError on the
    easy case.
    """
    _cyclic(g)
    tag = classify_case(g.n, g.mult)
    bundles = _select_bundles(g.n, g.degrees(), tag)
    if probe is not None:
        probe.tick(g.n)
    return sorted((b, 0) for b in bundles), tag

def multicycle_color(g, probe=None):
    """Return a minimum sum proper coloring of the multicycle g using exactly
    s'(g) colors.

    Keyword arguments:
    g -- A Multicycle
    probe -- Optional WorkCounter
    """
    _cyclic(g)
    n, k = g.n, g.k
    mult = list(g.mult)
    deg = g.degrees()
    hist = Counter(deg)
    delta = max(deg)
    m = g.m
    bundle_colors = [ [] for _ in range(n) ]
    i = chromatic_index_multicycle(g)
    log.debug('multicycle %r: strength %d', g, i)

    while m:
        tag = _classify(k, m, delta)
        if tag.case is Case.EASY:
            if tag.load != i:
                raise SolverError('sweep would use %d colors where %d remain' % (tag.load, i))
            log.debug('color %d: easy case, sweeping %d edges', i, m)
            for b, color in _sweep(mult, i):
                bundle_colors[b].append(color)
            if probe is not None:
                probe.tick(m)
            break

        bundles = _select_bundles(n, deg, tag)
        log.debug('color %d: %s, |M|=%d', i, tag, len(bundles))
        exhausted = False
        for b in bundles:
            bundle_colors[b].append(i)
            mult[b] -= 1
            exhausted = exhausted or mult[b] == 0
            for v in (b, (b + 1) % n):
                hist[deg[v]] -= 1
                deg[v] -= 1
                hist[deg[v]] += 1
        m -= len(bundles)
        while delta and not hist[delta]:
            delta -= 1
        i -= 1
        if probe is not None:
            probe.tick(n)

        if exhausted:
            runs = positive_runs(mult, cyclic=True)
            log.debug('bundle exhausted: %d multipaths left for colors 1..%d', len(runs), i)
            last = color_runs(mult, runs, bundle_colors, 1, probe)
            if last > i:
                raise SolverError('multipath phase used %d colors where %d remain' % (last, i))
            break

    return EdgeColoring.from_bundles(g, bundle_colors)

def even_multicycle_color(g, probe=None):
    """Linear-time minimum sum coloring of a multicycle with an even number
    of vertices. Raise PreconditionError for odd n.
    """
    _cyclic(g)
    if g.n % 2:
        raise PreconditionError('even algorithm needs an even cycle, got n=%d' % g.n)
    p = min(g.mult)
    bundle_colors = [ list(range(1 + b % 2, 2 * p + 1, 2)) for b in range(g.n) ]
    if probe is not None:
        probe.tick(p * g.n)
    mult = [ x - p for x in g.mult ]
    runs = positive_runs(mult, cyclic=True)
    log.debug('p-uniform part with p=%d, %d multipaths from color %d', p, len(runs), 2 * p + 1)
    color_runs(mult, runs, bundle_colors, 2 * p + 1, probe)
    return EdgeColoring.from_bundles(g, bundle_colors)
