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

from sumcolor import (Multicycle, Multipath, Multigraph, EdgeColoring, PreconditionError,
                      is_proper, coloring_stats, is_equitable, greedy_color,
                      random_proper_coloring)

from hypothesis import given, settings, strategies as st
import pytest

TRIANGLE = Multicycle(3, [1, 1, 1])

def test_proper_triangle():
    assert is_proper(TRIANGLE, EdgeColoring(TRIANGLE, [1, 2, 3]))
    assert not is_proper(TRIANGLE, EdgeColoring(TRIANGLE, [1, 2, 1]))

def test_parallel_edges_are_adjacent():
    h = Multipath([2])
    assert not is_proper(h, EdgeColoring(h, [1, 1]))
    assert is_proper(h, EdgeColoring(h, [2, 1]))

def test_stats():
    assert coloring_stats(EdgeColoring(TRIANGLE, [1, 2, 3])) == (6, (1, 1, 1), 3)
    c5 = Multicycle(5, [1, 1, 1, 1, 1])
    f = EdgeColoring(c5, [1, 2, 1, 2, 3])
    assert (f.sum, f.profile, f.colors_used) == (9, (2, 2, 1), 3)
    c4 = Multicycle(4, [1, 1, 1, 1])
    assert coloring_stats(EdgeColoring(c4, [1, 2, 1, 2])) == (6, (2, 2), 2)

def test_profile_with_gap():
    f = EdgeColoring(TRIANGLE, [1, 3, 4])
    assert f.profile == (1, 0, 1, 1)
    assert f.colors_used == 3
    assert f.max_color == 4

def test_rejects_bad_colorings():
    with pytest.raises(PreconditionError):
        EdgeColoring(TRIANGLE, [1, 2])
    with pytest.raises(PreconditionError):
        EdgeColoring(TRIANGLE, [0, 1, 2])
    with pytest.raises(PreconditionError):
        EdgeColoring.from_mapping(TRIANGLE, { (0, 0): 1, (1, 0): 2 })
    with pytest.raises(PreconditionError):
        EdgeColoring.from_mapping(TRIANGLE, { (0, 0): 1, (1, 0): 2, (2, 0): 3, (3, 0): 1 })

def test_mismatched_instance():
    f = EdgeColoring(Multicycle(3, [1, 1, 2]), [1, 2, 3, 4])
    with pytest.raises(PreconditionError):
        is_proper(TRIANGLE, f)

def test_coloring_of_equivalent_multigraph():
    g = Multicycle(3, [2, 1, 1])
    f = EdgeColoring(g, [1, 2, 3, 4])
    assert is_proper(g.to_multigraph(), f)

def test_views():
    g = Multicycle(3, [2, 1, 1])
    f = EdgeColoring.from_bundles(g, [[1, 2], [3], [4]])
    assert f.color_of((0, 1)) == 2
    assert f.colors_at(0) == { 1, 2, 4 }
    assert f.color_class(3) == [(1, 0)]
    assert f.classes() == { 1: [(0, 0)], 2: [(0, 1)], 3: [(1, 0)], 4: [(2, 0)] }
    g2 = f.recolored({ (0, 1): 5 })
    assert g2.colors == (1, 5, 3, 4)
    assert f.colors == (1, 2, 3, 4)

def test_equitable():
    c6 = Multicycle(6, [1, 1, 1, 1, 1, 1])
    assert is_equitable(EdgeColoring(c6, [1, 2, 1, 2, 1, 2]))
    assert not is_equitable(EdgeColoring(c6, [1, 2, 1, 2, 1, 3]))

def test_greedy():
    f = greedy_color(Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert f.colors == (1, 2, 1, 2)

multigraphs = st.integers(min_value=2, max_value=7).flatmap(
    lambda nv: st.lists(st.tuples(st.integers(0, nv - 1), st.integers(0, nv - 1)).filter(
        lambda e: e[0] != e[1]), max_size=14).map(lambda edges: Multigraph(nv, edges)))

@given(multigraphs)
def test_greedy_is_proper(g):
    f = greedy_color(g)
    assert is_proper(g, f)
    assert f.max_color <= max(2 * g.delta - 1, 0)

@settings(max_examples=50)
@given(multigraphs, st.integers(min_value=0, max_value=2 ** 32))
def test_random_coloring_is_proper_and_seeded(g, seed):
    f = random_proper_coloring(g, seed)
    assert is_proper(g, f)
    assert f == random_proper_coloring(g, seed)
