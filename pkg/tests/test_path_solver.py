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

from sumcolor import (Multipath, PathUnion, PreconditionError, WorkCounter, is_proper,
                      odd_position_matching, multipath_color, color_runs, multipaths,
                      oracle_min_cost, random_proper_coloring, prefix_dominates)

import networkx as nx
import pytest

def _maximum_matching_size(h, colors, c):
    """Size of a maximum matching among the edges colored c or higher."""
    g = nx.Graph()
    g.add_edges_from(e for e, x in zip(h.iter_endpoints(), colors) if x >= c)
    return len(nx.max_weight_matching(g, maxcardinality=True))

def test_odd_positions():
    h = Multipath([1, 1, 1, 1])
    assert odd_position_matching(h) == [(0, 0), (2, 0)]
    assert odd_position_matching(Multipath([3, 1, 2])) == [(0, 0), (2, 0)]

def test_odd_positions_per_component():
    paths = [Multipath([1]), Multipath([1, 1])]
    assert odd_position_matching(paths) == [(0, 0), (1, 0)]
    assert odd_position_matching(PathUnion(paths)) == [(0, 0), (1, 0)]

def test_simple_path():
    f = multipath_color(Multipath([1, 1, 1, 1]))
    assert f.colors == (1, 2, 1, 2)
    assert (f.sum, f.profile) == (6, (2, 2))

def test_bundle_then_edge():
    f = multipath_color(Multipath([2, 1]))
    assert f.colors == (1, 2, 3)
    assert f.sum == 6

def test_single_bundle():
    assert multipath_color(Multipath([3])).colors == (1, 2, 3)

def test_two_components():
    f = multipath_color([Multipath([1]), Multipath([1, 1])])
    assert f.colors == (1, 1, 2)
    assert f.profile == (2, 1)

def test_start_color():
    f = multipath_color(Multipath([1, 1]), start_color=3)
    assert f.colors == (3, 4)
    with pytest.raises(PreconditionError):
        multipath_color(Multipath([1]), start_color=0)

def test_color_runs_consumes_mult():
    mult = [2, 0, 1, 1]
    bundle_colors = [ [] for _ in mult ]
    last = color_runs(mult, [[0], [2, 3]], bundle_colors, 5)
    assert last == 6
    assert mult == [0, 0, 0, 0]
    assert bundle_colors == [[5, 6], [], [5], [6]]

def test_color_runs_nothing_left():
    assert color_runs([0, 0], [], [[], []], 4) == 3

def test_probe_counts_work():
    probe = WorkCounter()
    multipath_color(Multipath([1] * 8), probe=probe)
    assert probe.count == 12

@pytest.mark.parametrize('mult', [[1, 2, 3, 2, 1], [4, 1, 1, 4], [2, 2, 2, 2, 2, 2], [5]])
def test_classes_are_maximum_matchings(mult):
    h = Multipath(mult)
    f = multipath_color(h)
    assert is_proper(h, f)
    for c, size in enumerate(f.profile, 1):
        assert size == _maximum_matching_size(h, f.colors, c)

@pytest.mark.parametrize('mult', [[1, 2, 3, 2, 1], [3, 1, 1, 3], [2, 2]])
def test_profile_dominates_random_colorings(mult):
    h = Multipath(mult)
    f = multipath_color(h)
    for seed in range(50):
        other = sorted(random_proper_coloring(h, seed).profile, reverse=True)
        assert prefix_dominates(f.profile, other), seed

@pytest.mark.slow
def test_matches_oracle():
    for h in multipaths(1, 4, 3, max_edges=12):
        f = multipath_color(h)
        best = oracle_min_cost(h)
        assert is_proper(h, f)
        assert f.sum == best.cost, h
        assert f.colors_used == best.strength, h
