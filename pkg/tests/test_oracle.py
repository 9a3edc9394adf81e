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

from sumcolor import (Multicycle, Multipath, Multigraph, PreconditionError, OracleRefusal,
                      SumCost, ColorCosts, ConcaveSeparable, EntropyCost, is_proper, evaluate,
                      oracle_min_cost, oracle_strength, multicycles, multipaths,
                      bipartite_multigraphs, enumerate_instances, random_instance, is_bipartite)

import logging
import pytest

@pytest.mark.parametrize('g,cost', [
    (Multicycle(3, [1, 1, 1]), 6),
    (Multicycle(5, [1, 1, 1, 1, 1]), 9),
    (Multicycle(4, [2, 1, 1, 1]), 9),
    (Multicycle(3, [2, 1, 1]), 10),
    (Multipath([2, 1]), 6),
])
def test_min_sum(g, cost):
    best = oracle_min_cost(g)
    assert best.cost == cost
    assert best.coloring.sum == cost
    assert is_proper(g, best.coloring)
    assert best.nodes > 0

@pytest.mark.parametrize('g,strength', [
    (Multicycle(5, [1, 1, 1, 1, 1]), 3),
    (Multicycle(6, [1, 1, 1, 1, 1, 1]), 2),
    (Multicycle(3, [2, 1, 1]), 4),
])
def test_strength(g, strength):
    assert oracle_strength(g) == strength

def test_fewest_colors_at_optimum():
    best = oracle_min_cost(Multicycle(5, [1, 1, 1, 1, 1]))
    assert best.strength == best.coloring.colors_used == 3

def test_refusal(caplog):
    g = Multicycle(7, [2] * 7)
    with caplog.at_level(logging.WARNING, logger='sumcolor.oracle'):
        with pytest.raises(OracleRefusal) as exc:
            oracle_min_cost(g)
    assert (exc.value.edge_count, exc.value.bound) == (14, 12)
    assert 'refuses' in caplog.text
    assert oracle_min_cost(Multicycle(3, [1, 1, 1]), max_edges=3).cost == 6

def test_edgeless():
    best = oracle_min_cost(Multigraph(2, []))
    assert (best.cost, best.strength) == (0, 0)

def test_too_few_colors():
    with pytest.raises(PreconditionError):
        oracle_min_cost(Multicycle(3, [1, 1, 1]), max_colors=2)

def test_color_costs_bound_the_palette():
    best = oracle_min_cost(Multicycle(5, [1, 1, 1, 1, 1]), ColorCosts([1, 2, 4]))
    assert best.cost == 10
    with pytest.raises(PreconditionError):
        oracle_min_cost(Multicycle(5, [1, 1, 1, 1, 1]), ColorCosts([1, 2]))

def test_separable_models():
    c5 = Multicycle(5, [1, 1, 1, 1, 1])
    best = oracle_min_cost(c5, EntropyCost(5))
    assert best.coloring.profile == (2, 2, 1)
    assert best.cost == pytest.approx(evaluate(EntropyCost(5), best.coloring))
    best = oracle_min_cost(c5, ConcaveSeparable([0, 3, 5, 6]))
    assert best.cost == 13
    assert best.strength == 3

def test_sum_agrees_with_linear_search_on_multigraphs():
    g = Multigraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)])
    best = oracle_min_cost(g, SumCost())
    assert best.cost == 9
    assert best.strength == 3

def test_enumerate_multicycles():
    gs = list(multicycles(3, 4, 2))
    assert len(gs) == 24
    assert gs[0] == Multicycle(3, [1, 1, 1])
    assert all(g.m <= 6 for g in multicycles(3, 4, 2, max_edges=6))

def test_dedupe_keeps_one_per_class():
    gs = list(multicycles(3, 3, 2, dedupe=True))
    assert [ g.mult for g in gs ] == [(1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2)]

def test_enumerate_multipaths():
    assert [ h.mult for h in multipaths(1, 1, 3) ] == [(1,), (2,), (3,)]

def test_empty_ranges():
    with pytest.raises(PreconditionError):
        list(multicycles(5, 4, 2))
    with pytest.raises(PreconditionError):
        list(multipaths(1, 2, 0))

def test_bipartite_family_is_seeded():
    first = list(bipartite_multigraphs(42, 10))
    assert first == list(bipartite_multigraphs(42, 10))
    assert len(first) == 10
    assert all(is_bipartite(g)[0] for g in first)

def test_dispatch():
    assert len(list(enumerate_instances('multipath', 1, 2, 2))) == 6
    with pytest.raises(PreconditionError):
        enumerate_instances('tree')

def test_random_instance():
    g = random_instance('multicycle', 5, 3, seed=1)
    assert g == random_instance('multicycle', 5, 3, seed=1)
    assert g.n == 5 and max(g.mult) <= 3
    h = random_instance('bipartite', 4, 1, seed=2)
    assert h.m == 8
    assert random_instance('bipartite', 4, 1, seed=2, edges=3).m == 3
    assert random_instance('multipath', 3, 2, seed=3).length == 3
    with pytest.raises(PreconditionError):
        random_instance('bipartite', 1, 1, seed=0)
    with pytest.raises(PreconditionError):
        random_instance('star', 4, 1, seed=0)

@pytest.mark.parametrize('mult', [[3, 1, 2, 1, 1], [2, 1, 1, 3], [1, 2, 2, 1, 1, 1]])
def test_rotation_and_reflection(mult):
    n = len(mult)
    cost = oracle_min_cost(Multicycle(n, mult)).cost
    for j in range(n):
        turned = mult[j:] + mult[:j]
        assert oracle_min_cost(Multicycle(n, turned)).cost == cost
        assert oracle_min_cost(Multicycle(n, turned[::-1])).cost == cost

def test_few_extra_colors_suffice():
    for g in multicycles(3, 5, 2, max_edges=9, dedupe=True):
        assert oracle_min_cost(g, max_colors=g.delta + 2).cost == oracle_min_cost(g, max_colors=g.m).cost, g

def test_union_strength_is_largest_component():
    triangle = [(0, 1), (1, 2), (2, 0)]
    path = [(3, 4), (4, 5), (4, 6), (6, 7)]
    union = Multigraph(8, triangle + path)
    assert oracle_strength(Multigraph(3, triangle)) == 3
    assert oracle_strength(Multigraph(8, path)) == 3
    assert oracle_strength(union) == 3
    star = [(3, 4), (3, 5), (3, 6), (3, 7)]
    assert oracle_strength(Multigraph(8, star)) == 4
    assert oracle_strength(Multigraph(8, triangle + star)) == 4
