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

"""Exceptions and package-wide defaults shared by every sumcolor module."""

__all__ = [
    'SumColorError', 'MalformedInstance', 'ParseError', 'PreconditionError',
    'NotBipartite', 'OracleRefusal', 'SolverError',
    'DEFAULT_ORACLE_MAX_EDGES', 'REAL_TOLERANCE', 'DOCUMENT_VERSION',
]

# Largest instance (in edges) the exhaustive oracle agrees to search.
DEFAULT_ORACLE_MAX_EDGES = 12

# Absolute tolerance when comparing real-valued costs.
REAL_TOLERANCE = 1e-9

# Version written in the header line of coloring documents.
DOCUMENT_VERSION = 1

class SumColorError(Exception): pass
class MalformedInstance(SumColorError, ValueError): pass
class PreconditionError(SumColorError, ValueError): pass
class SolverError(SumColorError, RuntimeError): pass

class ParseError(MalformedInstance):
    """A text document could not be parsed. lineno is 1-based, or None when
    the error concerns the document as a whole.
    """
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = 'line %d: %s' % (lineno, message)
        super().__init__(message)
        self.lineno = lineno

class NotBipartite(PreconditionError):
    """The graph contains an odd cycle. witness is a closed walk of odd length
    given as a tuple of vertices (the first vertex is not repeated at the end).
    """
    def __init__(self, witness):
        super().__init__('graph is not bipartite: odd cycle %s' % (tuple(witness),))
        self.witness = tuple(witness)

class OracleRefusal(SumColorError, RuntimeError):
    """The instance is too large for exhaustive search."""
    def __init__(self, edge_count, bound):
        super().__init__('oracle refuses instance with %d edges (bound %d)' % (edge_count, bound))
        self.edge_count = edge_count
        self.bound = bound
