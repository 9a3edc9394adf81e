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

"""Line-oriented text formats for instances and colorings.

Instances ('#' starts a comment, blank lines are ignored):

    p multicycle <n>            p multipath <l>          p multigraph <nv> <ne>
    m <m_0> ... <m_{n-1}>       m <m_0> ... <m_{l-1}>    e <u> <v>   (ne lines)

A coloring document starts with a versioned header line, echoes the
instance, then gives the algorithm, its statistics and one record per edge
in EdgeId order:

    sumcolor-coloring 1
    p multicycle 3
    m 1 1 1
    algorithm general
    sum 6
    colors_used 3
    profile 1 1 1
    edge <bundle> <copy> <u> <v> <color>

Multigraph edges are recorded as 'edge <index> - <u> <v> <color>'.
"""

from .common import ParseError, PreconditionError, DOCUMENT_VERSION
from .instance import Multicycle, Multipath, Multigraph
from .coloring import EdgeColoring, ColoringStats, coloring_stats

from collections import namedtuple

__all__ = [
    'ColoringDocument', 'parse_instance', 'format_instance',
    'format_coloring', 'parse_coloring',
]

HEADER = 'sumcolor-coloring'

ColoringDocument = namedtuple('ColoringDocument', ['instance', 'coloring', 'algorithm', 'declared'])

def _lines(text):
    """Generate (lineno, fields) for every line with content."""
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split('#', 1)[0].split()
        if fields:
            yield lineno, fields

def _ints(fields, lineno):
    try:
        return [ int(x) for x in fields ]
    except ValueError as v:
        raise ParseError('expected integers, got %r' % ' '.join(fields), lineno) from v

def _take_instance(lines):
    """Consume the instance lines from the iterator lines. Return the
    instance.
    """
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise ParseError('empty document') from None
    if fields[0] != 'p' or len(fields) < 3:
        raise ParseError("expected 'p <kind> <size>'", lineno)
    kind = fields[1]
    sizes = _ints(fields[2:], lineno)
    try:
        if kind in ('multicycle', 'multipath'):
            if len(sizes) != 1:
                raise ParseError("expected 'p %s <count>'" % kind, lineno)
            lineno, fields = next(lines)
            if fields[0] != 'm':
                raise ParseError("expected 'm' line", lineno)
            mult = _ints(fields[1:], lineno)
            if len(mult) != sizes[0]:
                raise ParseError('expected %d multiplicities, got %d' % (sizes[0], len(mult)), lineno)
            if kind == 'multicycle':
                return Multicycle(sizes[0], mult)
            return Multipath(mult)
        if kind == 'multigraph':
            if len(sizes) != 2:
                raise ParseError("expected 'p multigraph <nv> <ne>'", lineno)
            edges = []
            for _ in range(sizes[1]):
                lineno, fields = next(lines)
                if fields[0] != 'e' or len(fields) != 3:
                    raise ParseError("expected 'e <u> <v>'", lineno)
                edges.append(tuple(_ints(fields[1:], lineno)))
            return Multigraph(sizes[0], edges)
    except StopIteration:
        raise ParseError('document ends inside the %s instance' % kind) from None
    except ParseError:
        raise
    except ValueError as v:
        raise ParseError(str(v), lineno) from v
    raise ParseError('unknown instance kind %r' % kind, lineno)

def parse_instance(text):
    """Parse an instance document. Raise ParseError (a MalformedInstance)
    for any syntax or validation error.
    """
    lines = _lines(text)
    g = _take_instance(lines)
    for lineno, fields in lines:
        raise ParseError('unexpected %r after the instance' % fields[0], lineno)
    return g

def format_instance(g):
    """Serialize a Multicycle, Multipath or Multigraph."""
    if isinstance(g, Multicycle):
        return 'p multicycle %d\nm %s\n' % (g.n, ' '.join(map(str, g.mult)))
    if isinstance(g, Multipath):
        return 'p multipath %d\nm %s\n' % (g.length, ' '.join(map(str, g.mult)))
    if isinstance(g, Multigraph):
        return 'p multigraph %d %d\n' % (g.nv, g.m) + ''.join('e %d %d\n' % e for e in g.edges)
    raise PreconditionError('no text format for %r' % (g,))

def format_coloring(f, algorithm):
    """Serialize the coloring f, produced by the named algorithm, as a
    coloring document.
    """
    g = f.instance
    stats = coloring_stats(f)
    out = [ '%s %d\n' % (HEADER, DOCUMENT_VERSION), format_instance(g) ]
    out.append('algorithm %s\n' % algorithm)
    out.append('sum %d\n' % stats.sum)
    out.append('colors_used %d\n' % stats.colors_used)
    out.append('profile %s\n' % ' '.join(map(str, stats.profile)))
    for (eid, color), (u, v) in zip(f.items(), g.iter_endpoints()):
        if isinstance(g, Multigraph):
            out.append('edge %d - %d %d %d\n' % (eid, u, v, color))
        else:
            out.append('edge %d %d %d %d %d\n' % (eid + (u, v, color)))
    return ''.join(out)

def parse_coloring(text):
    """Parse a coloring document. Return a ColoringDocument whose declared
    field holds the statistics the document claims (ColoringStats, entries
    None when missing); they are not checked here.
    """
    lines = _lines(text)
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise ParseError('empty document') from None
    if fields[0] != HEADER or len(fields) != 2:
        raise ParseError('missing %r header' % HEADER, lineno)
    if _ints(fields[1:], lineno)[0] != DOCUMENT_VERSION:
        raise ParseError('unsupported document version %s' % fields[1], lineno)
    g = _take_instance(lines)

    algorithm = None
    declared = { 'sum': None, 'colors_used': None, 'profile': None }
    mapping = {}
    for lineno, fields in lines:
        key = fields[0]
        if key == 'algorithm' and len(fields) == 2:
            algorithm = fields[1]
        elif key in ('sum', 'colors_used') and len(fields) == 2:
            declared[key] = _ints(fields[1:], lineno)[0]
        elif key == 'profile':
            declared[key] = tuple(_ints(fields[1:], lineno))
        elif key == 'edge' and len(fields) == 6:
            if isinstance(g, Multigraph):
                if fields[2] != '-':
                    raise ParseError('multigraph edges have no copy index', lineno)
                eid = _ints(fields[1:2], lineno)[0]
            else:
                eid = tuple(_ints(fields[1:3], lineno))
            a, b, color = _ints(fields[3:], lineno)
            try:
                g.edge_index(eid)
            except KeyError as v:
                raise ParseError('unknown edge %s' % ' '.join(fields[1:3]), lineno) from v
            ends = g.endpoints(eid)
            if set(ends) != { a, b }:
                raise ParseError('edge %s joins %d and %d, not %d and %d'
                        % (' '.join(fields[1:3]), ends[0], ends[1], a, b), lineno)
            if eid in mapping:
                raise ParseError('edge %s colored twice' % ' '.join(fields[1:3]), lineno)
            mapping[eid] = color
        else:
            raise ParseError('unexpected line %r' % ' '.join(fields), lineno)
    try:
        f = EdgeColoring.from_mapping(g, mapping)
    except PreconditionError as v:
        raise ParseError(str(v)) from v
    return ColoringDocument(g, f, algorithm, ColoringStats(declared['sum'], declared['profile'], declared['colors_used']))
