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

from sumcolor.instance import Multicycle
from sumcolor.cycle_solver import multicycle_color
from sumcolor.costs import SumCost, ColorCosts, ConcaveSeparable, EntropyCost, verify_robust, prefix_dominates

g = Multicycle(5, [2, 1, 2, 1, 1])
f = multicycle_color(g)
print('instance %s: profile %s' % (','.join(map(str, g.mult)), list(f.profile)))

models = [ SumCost(), ColorCosts([1, 3, 4, 9, 10]), ConcaveSeparable([0, 4, 7, 9, 10, 10, 10, 10]), EntropyCost(g.m) ]
for row in verify_robust(g, f, models):
    print('%-24s cost %-10.6g optimum %-10.6g %s' % (row.model, row.cost, row.optimum, 'optimal' if row.optimal else 'NOT OPTIMAL'))

for a, b in [ ((3, 2, 1), (2, 2, 2)), ((2, 2, 2), (3, 2, 1)), ((4, 1), (2, 2, 1)) ]:
    print('%s dominates %s: %s' % (a, b, prefix_dominates(a, b)))
