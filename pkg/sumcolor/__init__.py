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

"""Minimum sum edge coloring of multicycles, multipaths and bipartite
multigraphs

A proper edge coloring gives adjacent edges distinct positive colors. This
package computes colorings of multicycles and multipaths whose color sum is
minimum, using as few colors as possible among such colorings (the edge
strength). It also provides the alternating path recoloring that brings any
proper coloring of a bipartite multigraph down to Delta colors without
raising its sum, cost models beyond the plain sum under which the same
colorings stay optimal, an exhaustive oracle for small instances, and a text
format and command line for all of the above.
"""

from .common import *
from .instance import *
from .coloring import *
from .strength import *
from .path_solver import *
from .cycle_solver import *
from .kempe import *
from .costs import *
from .oracle import *
from .textio import *
