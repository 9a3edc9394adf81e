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

from sumcolor import (Multicycle, CycleResidual, Multipath, Multigraph, MalformedInstance, NotBipartite,
                      PreconditionError, chromatic_index_multicycle, edge_strength_multicycle,
                      edge_strength_bipartite, is_bipartite, strength_multigraph, strength_report,
                      ceil_div)

from hypothesis import given, strategies as st
import pytest

@pytest.mark.parametrize('n,mult,expected', [
    (6, [1, 1, 1, 1, 1, 1], 2),
    (3, [1, 1, 1], 3),
    (5, [3, 1, 2, 1, 1], 4),
    (5, [1, 1, 1, 1, 1], 3),
    (3, [2, 1, 1], 4),
    (4, [2, 1, 1, 1], 3),
])
def test_chromatic_index(n, mult, expected):
    g = Multicycle(n, mult)
    assert chromatic_index_multicycle(g) == expected
    rep = edge_strength_multicycle(g)
    assert rep.edge_strength == rep.chromatic_index == expected

def test_report_fields():
    rep = edge_strength_multicycle(Multicycle(3, [2, 1, 1]))
    assert rep == (3, 4, 4, 4)
    assert rep.delta == 3 and rep.load_bound == 4

def test_strength_needs_full_cycle():
    with pytest.raises(MalformedInstance):
        edge_strength_multicycle(CycleResidual(4, [1, 0, 1, 1]))

cycles = st.integers(min_value=3, max_value=10).flatmap(
    lambda n: st.lists(st.integers(min_value=1, max_value=6), min_size=n, max_size=n).map(
        lambda mult: Multicycle(len(mult), mult)))

@given(cycles)
def test_strength_lower_bounds(g):
    s = edge_strength_multicycle(g).edge_strength
    assert s >= g.delta
    assert s >= ceil_div(g.m, g.k)
    if g.n % 2 == 0:
        assert s == g.delta

def test_bipartite_examples():
    assert edge_strength_bipartite(Multigraph(3, [(0, 1), (1, 2)])) == 2
    assert edge_strength_bipartite(Multicycle(4, [2, 1, 1, 1]).to_multigraph()) == 3
    assert is_bipartite(Multigraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])) == (True, None)
    assert is_bipartite(Multigraph(4, [(0, 1), (2, 3)])) == (True, None)

def test_triangle_witness():
    g = Multigraph(3, [(0, 1), (1, 2), (2, 0)])
    assert is_bipartite(g) == (False, (0, 1, 2))
    with pytest.raises(NotBipartite) as exc:
        edge_strength_bipartite(g)
    assert exc.value.witness == (0, 1, 2)
    assert isinstance(exc.value, PreconditionError)

def test_odd_cycle_witness_is_a_cycle():
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)]
    ok, witness = is_bipartite(Multigraph(6, edges))
    assert not ok
    assert len(witness) % 2 == 1
    pairs = { frozenset(e) for e in edges }
    for x, y in zip(witness, witness[1:] + witness[:1]):
        assert frozenset((x, y)) in pairs

def test_parallel_edges_stay_bipartite():
    assert is_bipartite(Multigraph(2, [(0, 1), (1, 0), (0, 1)]))[0]

def test_strength_multigraph():
    rep = strength_multigraph(Multigraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)]))
    assert rep == (3, 3, 3, 3)

def test_edgeless():
    rep = strength_multigraph(Multigraph(3, []))
    assert rep == (0, 0, 0, 0)

def test_report_dispatch():
    assert strength_report(Multipath([2, 1])).edge_strength == 3
    assert strength_report(Multicycle(5, [1, 1, 1, 1, 1])).edge_strength == 3
    assert strength_report(Multigraph(3, [(0, 1), (1, 2)])).edge_strength == 2

def test_union_takes_largest_component():
    square = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)]
    path = [(4, 5), (5, 6)]
    assert strength_multigraph(Multigraph(7, path)).edge_strength == 2
    assert strength_multigraph(Multigraph(4, square)).edge_strength == 3
    assert strength_multigraph(Multigraph(7, square + path)).edge_strength == 3
