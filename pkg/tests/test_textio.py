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

from sumcolor import (Multicycle, CycleResidual, Multipath, Multigraph, EdgeColoring, ParseError,
                      MalformedInstance, PreconditionError, parse_instance, format_instance,
                      format_coloring, parse_coloring, multicycle_color)

import pytest

C5_DOC = '''sumcolor-coloring 1
p multicycle 5
m 1 1 1 1 1
algorithm general
sum 9
colors_used 3
profile 2 2 1
edge 0 0 0 1 1
edge 1 0 1 2 2
edge 2 0 2 3 1
edge 3 0 3 4 2
edge 4 0 4 0 3
'''

def test_parse_multicycle():
    g = parse_instance('# a triangle\np multicycle 3\nm 2 1 1  # doubled first bundle\n')
    assert g == Multicycle(3, [2, 1, 1])

def test_parse_multipath_and_multigraph():
    assert parse_instance('p multipath 2\nm 2 1\n') == Multipath([2, 1])
    g = parse_instance('p multigraph 3 2\ne 0 1\n\ne 1 2\n')
    assert g == Multigraph(3, [(0, 1), (1, 2)])

def test_format_instance():
    assert format_instance(Multicycle(3, [2, 1, 1])) == 'p multicycle 3\nm 2 1 1\n'
    assert format_instance(Multigraph(2, [(0, 1)])) == 'p multigraph 2 1\ne 0 1\n'
    with pytest.raises(PreconditionError):
        format_instance(CycleResidual(3, [1, 0, 1]))

@pytest.mark.parametrize('text', [
    '',
    'q multicycle 3\nm 1 1 1\n',
    'p multicycle 3\nm 1 1\n',
    'p multicycle 3\nm 1 x 1\n',
    'p multicycle 3\n',
    'p multicycle 2\nm 1 1\n',
    'p multicycle 3\nm 1 0 1\n',
    'p multigraph 2 1\ne 0 0\n',
    'p multigraph 2 2\ne 0 1\n',
    'p hypercube 3\nm 1 1 1\n',
    'p multipath 1\nm 1\nm 1\n',
])
def test_malformed_instances(text):
    with pytest.raises(ParseError):
        parse_instance(text)

def test_parse_error_is_malformed_instance():
    with pytest.raises(MalformedInstance) as exc:
        parse_instance('p multicycle 3\nm 1 x 1\n')
    assert exc.value.lineno == 2
    assert str(exc.value).startswith('line 2:')

def test_format_coloring():
    g = Multicycle(5, [1, 1, 1, 1, 1])
    assert format_coloring(EdgeColoring(g, [1, 2, 1, 2, 3]), 'general') == C5_DOC

def test_format_multigraph_coloring():
    g = Multigraph(3, [(0, 1), (1, 2)])
    text = format_coloring(EdgeColoring(g, [1, 2]), 'greedy')
    assert text.splitlines()[-2:] == ['edge 0 - 0 1 1', 'edge 1 - 1 2 2']
    doc = parse_coloring(text)
    assert doc.coloring.colors == (1, 2)
    assert doc.algorithm == 'greedy'

def test_parse_coloring():
    doc = parse_coloring(C5_DOC)
    assert doc.instance == Multicycle(5, [1, 1, 1, 1, 1])
    assert doc.coloring.colors == (1, 2, 1, 2, 3)
    assert doc.algorithm == 'general'
    assert doc.declared == (9, (2, 2, 1), 3)

def test_document_survives_reformatting():
    g = Multicycle(5, [2, 2, 2, 2, 1])
    text = format_coloring(multicycle_color(g), 'general')
    assert format_coloring(parse_coloring(text).coloring, 'general') == text

def test_declared_stats_are_optional():
    text = '\n'.join(line for line in C5_DOC.splitlines()
                     if not line.startswith(('sum ', 'profile ', 'algorithm ')))
    doc = parse_coloring(text)
    assert doc.declared == (None, None, 3)
    assert doc.algorithm is None

@pytest.mark.parametrize('old,new', [
    ('sumcolor-coloring 1', 'sumcolor-coloring 2'),
    ('sumcolor-coloring 1', 'coloring 1'),
    ('edge 4 0 4 0 3', 'edge 5 0 4 0 3'),
    ('edge 4 0 4 0 3', 'edge 4 0 4 1 3'),
    ('edge 4 0 4 0 3', 'edge 3 0 3 4 3'),
    ('edge 4 0 4 0 3', ''),
    ('edge 4 0 4 0 3', 'edge 4 0 4 0 0'),
    ('algorithm general', 'algorithm'),
    ('sum 9', 'total 9'),
])
def test_malformed_colorings(old, new):
    with pytest.raises(ParseError):
        parse_coloring(C5_DOC.replace(old, new))

def test_parse_keeps_improper_colorings():
    doc = parse_coloring(C5_DOC.replace('edge 4 0 4 0 3', 'edge 4 0 4 0 1'))
    assert doc.coloring.colors == (1, 2, 1, 2, 1)
