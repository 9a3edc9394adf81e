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

import sys
from sumcolor.instance import Multicycle
from sumcolor.strength import edge_strength_multicycle
from sumcolor.cycle_solver import Case, classify_case, select_matching, multicycle_color, even_multicycle_color
from sumcolor.coloring import WorkCounter, is_proper
from sumcolor.oracle import oracle_min_cost, random_instance
from sumcolor.common import OracleRefusal

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
n = 7
max_mult = 3

g = random_instance('multicycle', n, max_mult, seed)
rep = edge_strength_multicycle(g)
print('instance %s m %d k %d' % (','.join(map(str, g.mult)), g.m, g.k))
print('delta %d load bound %d strength %d' % (rep.delta, rep.load_bound, rep.edge_strength))
tag = classify_case(g.n, g.mult)
print(tag)

if tag.case is not Case.EASY:
    m, _ = select_matching(g)
    print('first class (color %d): bundles %s' % (rep.edge_strength, ' '.join(str(b) for b, _ in m)))

probe = WorkCounter()
f = multicycle_color(g, probe=probe)
print('general: sum %d profile %s work %d%s' % (f.sum, list(f.profile), probe.count, '' if is_proper(g, f) else ' IMPROPER'))
for b in range(g.n):
    print('  bundle %d: %s' % (b, ' '.join(str(f.color_of((b, c))) for c in range(g.mult[b]))))

try:
    best = oracle_min_cost(g)
    print('oracle: sum %d strength %d after %d nodes' % (best.cost, best.strength, best.nodes))
except OracleRefusal as v:
    print('oracle: %s' % v)

# even cycles also have the direct algorithm
h = Multicycle(n + 1, list(g.mult) + [1])
e = even_multicycle_color(h)
print('even n=%d: general sum %d, direct sum %d' % (h.n, multicycle_color(h).sum, e.sum))
