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
from sumcolor.oracle import random_instance
from sumcolor.coloring import random_proper_coloring, is_proper
from sumcolor.kempe import reduce_bipartite
from sumcolor.strength import edge_strength_bipartite

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 5
nv = 8

g = random_instance('bipartite', nv, 1, seed, edges=14)
delta = edge_strength_bipartite(g)
f = random_proper_coloring(g, seed)
print('%d vertices, %d edges, delta %d' % (g.nv, g.m, delta))
print('start: sum %d colors %d max %d' % (f.sum, f.colors_used, f.max_color))

trace = []
r = reduce_bipartite(g, f, trace=trace)
for step, total in enumerate(trace, 1):
    print('  step %d: sum %d' % (step, total))
print('reduced: sum %d colors %d max %d %s' % (r.sum, r.colors_used, r.max_color, 'proper' if is_proper(g, r) else 'IMPROPER'))
for (u, v), c in zip(g.iter_endpoints(), r.colors):
    print('  %d-%d %d' % (u, v, c))
