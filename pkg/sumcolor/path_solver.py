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

"""Minimum sum edge coloring of multipaths.

Every round takes, in each connected component of what is left, one edge from
the bundles at odd positions counted from the left end of the component
(positions 1, 3, 5, ..., i.e. bundle offsets 0, 2, 4, ... within the
component). That set is a maximum matching of the component. It receives the
current color, the round's multiplicities are decremented, and components
are re-split wherever a bundle became empty.
"""

from .common import PreconditionError
from .instance import Multipath, PathUnion
from .coloring import EdgeColoring

import logging

__all__ = ['odd_position_matching', 'multipath_color', 'color_runs']

log = logging.getLogger(__name__)

def _as_instance(h):
    if isinstance(h, (Multipath, PathUnion)):
        return h
    return PathUnion(h)

def _components(h):
    if isinstance(h, PathUnion):
        return h.components()
    return [ list(range(h.length)) ]

def odd_position_matching(h):
    """Return the lowest copy of every bundle at an odd position of each
    component, as a list of EdgeIds of h (a Multipath, a PathUnion or a
    sequence of Multipath, in which case EdgeIds refer to PathUnion(h)).
    """
    h = _as_instance(h)
    return [ (b, 0) for comp in _components(h) for b in comp[::2] ]

def color_runs(mult, runs, bundle_colors, color, probe=None):
    """Color what is left of a bundled instance with the odd-position rule.

    mult is the list of remaining multiplicities and is consumed (every entry
    ends at zero). runs lists the connected components as lists of bundle
    labels in left-to-right order, each bundle having a positive entry in
    mult. Colors are appended to bundle_colors[b] as the next copies of
    bundle b are colored. Returns the last color used, or color-1 when there
    was nothing left to color.
    """
    runs = [ r for r in runs if r ]
    while runs:
        split = []
        for run in runs:
            for b in run[::2]:
                bundle_colors[b].append(color)
                mult[b] -= 1
            if probe is not None:
                probe.tick(len(run))
            current = []
            for b in run:
                if mult[b] > 0:
                    current.append(b)
                elif current:
                    split.append(current)
                    current = []
            if current:
                split.append(current)
        runs = split
        color += 1
    return color - 1

def multipath_color(h, start_color=1, probe=None):
    """Color h with classes start_color, start_color+1, ... where each class
    is the odd-position matching of the remaining graph. With start_color 1
    the sum is minimum.

    Keyword arguments:
    h -- A Multipath, a PathUnion, or a sequence of Multipath (colored as
        their PathUnion)
    start_color -- First color to use (default 1)
    probe -- Optional WorkCounter
    """
    h = _as_instance(h)
    if start_color < 1:
        raise PreconditionError('start_color must be at least 1')
    bundle_colors = [ [] for _ in h.mult ]
    last = color_runs(list(h.mult), _components(h), bundle_colors, start_color, probe)
    log.debug('multipath %r colored with %d..%d', h, start_color, last)
    return EdgeColoring.from_bundles(h, bundle_colors)
