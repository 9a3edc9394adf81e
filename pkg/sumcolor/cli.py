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

"""Command-line interface.

    sumcolor strength <instance>
    sumcolor color <instance> [--algorithm auto|general|even|path|sweep]
    sumcolor verify <instance> <coloring|-> [--cost MODEL]
    sumcolor oracle <instance> [--cost MODEL] [--max-colors N] [--max-edges N]
    sumcolor reduce <instance> <coloring|->
    sumcolor gen --type multicycle|multipath|bipartite --n N --max-mult M --seed S [--edges E]
    sumcolor check --family multicycle|multipath|bipartite --n-max N --mult-max M [--cost MODEL]... [--workers W]

Exit status is 0 on success, 1 when a verification or check fails, and 2 on
malformed input or a violated precondition.
"""

from .common import (MalformedInstance, PreconditionError, OracleRefusal,
                     SolverError, DEFAULT_ORACLE_MAX_EDGES)
from .instance import Multicycle, Multipath, Multigraph
from .coloring import is_proper, coloring_stats, random_proper_coloring
from .strength import strength_report, chromatic_index_multicycle
from .path_solver import multipath_color
from .cycle_solver import classify_case, sweep_color, multicycle_color, even_multicycle_color
from .kempe import reduce_bipartite
from .costs import SumCost, parse_cost_model, evaluate, costs_equal
from .oracle import oracle_min_cost, enumerate_instances, random_instance
from .textio import parse_instance, format_instance, format_coloring, parse_coloring

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
import argparse
import logging
import sys

__all__ = ['run', 'main']

log = logging.getLogger(__name__)

def _read(path, stdin):
    if path == '-':
        return stdin.read()
    with open(path) as fp:
        return fp.read()

def _load(path, stdin):
    return parse_instance(_read(path, stdin))

def cmd_strength(args, out, stdin):
    g = _load(args.instance, stdin)
    rep = strength_report(g)
    out.write('delta %d\n' % rep.delta)
    out.write('load_bound %d\n' % rep.load_bound)
    out.write('chromatic_index %d\n' % rep.chromatic_index)
    out.write('edge_strength %d\n' % rep.edge_strength)
    if isinstance(g, Multicycle):
        out.write('case %s\n' % classify_case(g.n, g.mult).case.value)
    return 0

def _color(g, algorithm):
    """Return (coloring, algorithm name actually used)."""
    if algorithm == 'auto':
        if isinstance(g, Multipath):
            algorithm = 'path'
        elif isinstance(g, Multicycle):
            algorithm = 'even' if g.n % 2 == 0 else 'general'
        else:
            raise PreconditionError('no minimum sum algorithm for general multigraphs; '
                    'color them otherwise and use reduce')
    if algorithm == 'path':
        if not isinstance(g, Multipath):
            raise PreconditionError('path algorithm needs a multipath')
        return multipath_color(g), algorithm
    if not isinstance(g, Multicycle):
        raise PreconditionError('%s algorithm needs a multicycle' % algorithm)
    if algorithm == 'general':
        return multicycle_color(g), algorithm
    if algorithm == 'even':
        return even_multicycle_color(g), algorithm
    return sweep_color(g, g.m // g.k), algorithm

def cmd_color(args, out, stdin):
    g = _load(args.instance, stdin)
    f, name = _color(g, args.algorithm)
    out.write(format_coloring(f, name))
    return 0

def cmd_verify(args, out, stdin):
    g = _load(args.instance, stdin)
    doc = parse_coloring(_read(args.coloring, stdin))
    if doc.instance != g:
        raise PreconditionError('coloring document is for a different instance')
    f = doc.coloring
    stats = coloring_stats(f)
    failures = []
    proper = is_proper(g, f)
    if not proper:
        failures.append('improper')
    for field in ('sum', 'profile', 'colors_used'):
        claimed = getattr(doc.declared, field)
        if claimed is not None and claimed != getattr(stats, field):
            failures.append('%s mismatch' % field)
    out.write('proper %s\n' % ('yes' if proper else 'no'))
    out.write('sum %d\n' % stats.sum)
    out.write('colors_used %d\n' % stats.colors_used)
    if args.cost is not None:
        model = parse_cost_model(args.cost, m=g.m)
        cost = evaluate(model, f)
        out.write('cost %s %s\n' % (model, cost))
        if g.m <= args.max_edges:
            optimum = oracle_min_cost(g, model, max_edges=args.max_edges).cost
            optimal = costs_equal(model, cost, optimum)
            out.write('optimum %s\n' % optimum)
            out.write('optimal %s\n' % ('yes' if optimal else 'no'))
            if not optimal:
                failures.append('not optimal')
        else:
            log.info('instance too large for the oracle, optimality not checked')
    out.write('FAILED %s\n' % ', '.join(failures) if failures else 'ok\n')
    return 1 if failures else 0

def cmd_oracle(args, out, stdin):
    g = _load(args.instance, stdin)
    model = parse_cost_model(args.cost, m=g.m)
    res = oracle_min_cost(g, model, max_colors=args.max_colors, max_edges=args.max_edges)
    out.write('model %s\n' % model)
    out.write('cost %s\n' % res.cost)
    out.write('strength %d\n' % res.strength)
    out.write('profile %s\n' % ' '.join(map(str, res.coloring.profile)))
    out.write('nodes %d\n' % res.nodes)
    return 0

def cmd_reduce(args, out, stdin):
    g = _load(args.instance, stdin)
    doc = parse_coloring(_read(args.coloring, stdin))
    if doc.instance != g:
        raise PreconditionError('coloring document is for a different instance')
    trace = []
    f = reduce_bipartite(g, doc.coloring, trace=trace)
    log.info('%d recoloring steps, sum %d -> %d', len(trace), doc.coloring.sum, f.sum)
    out.write(format_coloring(f, 'kempe'))
    return 0

def cmd_gen(args, out, stdin):
    g = random_instance(args.type, args.n, args.max_mult, args.seed, edges=args.edges)
    out.write(format_instance(g))
    return 0

def _key(g):
    if isinstance(g, Multigraph):
        return '%s %d %s' % (g.kind, g.nv, ','.join('%d-%d' % e for e in g.edges))
    return '%s %s' % (g.kind, ','.join(map(str, g.mult)))

def _classes_are_maximum_matchings(f):
    """True iff every class E_i is a maximum matching of the edges colored
    i or higher.
    """
    g = f.instance
    ends = list(g.iter_endpoints())
    for color, size in enumerate(f.profile, 1):
        rest = Multigraph(g.nv, [ uv for uv, c in zip(ends, f.colors) if c >= color ])
        if size != rest.matching_number:
            return False
    return True

def _robust_failures(g, f, costs, max_edges):
    """Models named in costs are parsed against g, so entropy takes its edge
    count.
    """
    failures = []
    for model in [ parse_cost_model(text, m=g.m) for text in costs ]:
        optimum = oracle_min_cost(g, model, max_edges=max_edges).cost
        if not costs_equal(model, evaluate(model, f), optimum):
            failures.append('not optimal under %s' % model)
    return failures

def check_multicycle(g, max_edges=DEFAULT_ORACLE_MAX_EDGES, costs=None):
    """Compare both cycle solvers and the strength formula with the oracle.
    The general solver is also checked under every cost model named in
    costs; without costs, small cycles are checked under entropy and
    exponential color costs. Return (key, failures).
    """
    failures = []
    res = oracle_min_cost(g, max_edges=max_edges)
    s = chromatic_index_multicycle(g)
    if res.strength != s:
        failures.append('oracle strength %d != %d' % (res.strength, s))
    f = multicycle_color(g)
    if not is_proper(g, f):
        failures.append('general improper')
    if f.sum != res.cost:
        failures.append('general sum %d != %d' % (f.sum, res.cost))
    if f.colors_used != s:
        failures.append('general uses %d colors, not %d' % (f.colors_used, s))
    if g.n % 2 == 0:
        e = even_multicycle_color(g)
        p = min(g.mult)
        if not is_proper(g, e) or e.sum != res.cost:
            failures.append('even sum %d != %d' % (e.sum, res.cost))
        if any(x != g.k for x in e.profile[:2 * p]):
            failures.append('even prefix classes %r' % (e.profile[:2 * p],))
        low = Counter(b for (b, _), c in zip(g.edge_ids(), e.colors) if c <= 2 * p)
        if any(low[b] != p for b in range(g.n)):
            failures.append('colors 1..%d are not %d per bundle' % (2 * p, p))
    if costs is None and g.n <= 5 and max(g.mult) <= 2:
        costs = [ 'entropy', 'occp:' + ','.join(str(2 ** j) for j in range(g.m)) ]
    failures.extend(_robust_failures(g, f, costs or [], max_edges))
    return _key(g), failures

def check_multipath(h, max_edges=DEFAULT_ORACLE_MAX_EDGES, costs=None):
    failures = []
    res = oracle_min_cost(h, max_edges=max_edges)
    f = multipath_color(h)
    if not is_proper(h, f) or f.sum != res.cost:
        failures.append('sum %d != %d' % (f.sum, res.cost))
    if f.colors_used != h.delta:
        failures.append('uses %d colors, not %d' % (f.colors_used, h.delta))
    if not _classes_are_maximum_matchings(f):
        failures.append('class not a maximum matching')
    failures.extend(_robust_failures(h, f, costs or [], max_edges))
    return _key(h), failures

def check_bipartite(g, seed, max_edges=DEFAULT_ORACLE_MAX_EDGES):
    failures = []
    start = random_proper_coloring(g, seed)
    trace = []
    f = reduce_bipartite(g, start, trace=trace)
    sums = [ start.sum ] + trace
    if not is_proper(g, f) or f.max_color > g.delta:
        failures.append('reduced coloring invalid')
    if any(b >= a for a, b in zip(sums, sums[1:])):
        failures.append('sum did not decrease at every step')
    strength = oracle_min_cost(g, SumCost(), max_edges=max_edges).strength
    if strength != g.delta:
        failures.append('oracle strength %d != delta %d' % (strength, g.delta))
    return _key(g), failures

def _check_row(item):
    family, g, seed, max_edges, costs = item
    if family == 'multicycle':
        return check_multicycle(g, max_edges, costs)
    if family == 'multipath':
        return check_multipath(g, max_edges, costs)
    return check_bipartite(g, seed, max_edges)

def cmd_check(args, out, stdin):
    if args.family == 'multicycle':
        gen = enumerate_instances('multicycle', args.n_min, args.n_max, args.mult_max,
                max_edges=args.max_edges, dedupe=args.dedupe)
    elif args.family == 'multipath':
        gen = enumerate_instances('multipath', args.n_min, args.n_max, args.mult_max, max_edges=args.max_edges)
    else:
        gen = enumerate_instances('bipartite', args.seed, args.count, nv_max=args.n_max,
                ne_max=min(args.mult_max, args.max_edges))
    items = [ (args.family, g, args.seed + j, args.max_edges, args.cost) for j, g in enumerate(gen) ]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_check_row, items, chunksize=8))
    else:
        rows = [ _check_row(item) for item in items ]
    failed = 0
    for key, failures in rows:
        if failures:
            failed += 1
            out.write('%s FAIL %s\n' % (key, '; '.join(failures)))
        else:
            out.write('%s ok\n' % key)
    out.write('checked %d failed %d\n' % (len(rows), failed))
    return 1 if failed else 0

def _parser():
    parser = argparse.ArgumentParser(prog='sumcolor', description='Minimum sum edge coloring of multicycles and multipaths.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='more diagnostics on stderr (repeatable)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('strength', help='print Delta, the load bound, chromatic index and edge strength')
    p.add_argument('instance')
    p.set_defaults(func=cmd_strength)

    p = sub.add_parser('color', help='compute a minimum sum coloring')
    p.add_argument('instance')
    p.add_argument('--algorithm', choices=['auto', 'general', 'even', 'path', 'sweep'], default='auto')
    p.set_defaults(func=cmd_color)

    p = sub.add_parser('verify', help='check a coloring document')
    p.add_argument('instance')
    p.add_argument('coloring', help="coloring document, '-' for stdin")
    p.add_argument('--cost', help='also compare with the oracle under this cost model')
    p.add_argument('--max-edges', type=int, default=DEFAULT_ORACLE_MAX_EDGES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('oracle', help='exhaustive minimum cost search')
    p.add_argument('instance')
    p.add_argument('--cost', default='sum')
    p.add_argument('--max-colors', type=int, default=None)
    p.add_argument('--max-edges', type=int, default=DEFAULT_ORACLE_MAX_EDGES)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser('reduce', help='reduce a bipartite coloring to Delta colors')
    p.add_argument('instance')
    p.add_argument('coloring', help="coloring document, '-' for stdin")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser('gen', help='generate a random instance')
    p.add_argument('--type', choices=['multicycle', 'multipath', 'bipartite'], required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--max-mult', type=int, default=3)
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--edges', type=int, default=None, help='edge count for bipartite instances (default 2n)')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('check', help='compare solvers with the oracle over a family')
    p.add_argument('--family', choices=['multicycle', 'multipath', 'bipartite'], required=True)
    p.add_argument('--n-min', type=int, default=1)
    p.add_argument('--n-max', type=int, required=True, help='vertices (cycles, bipartite) or bundles (paths)')
    p.add_argument('--mult-max', type=int, required=True, help='multiplicity cap (edge cap for bipartite)')
    p.add_argument('--max-edges', type=int, default=DEFAULT_ORACLE_MAX_EDGES)
    p.add_argument('--dedupe', action='store_true', help='one multicycle per rotation/reflection class')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--count', type=int, default=200, help='bipartite instances')
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--cost', action='append', help='also check optimality under this cost model (repeatable)')
    p.set_defaults(func=cmd_check)
    return parser

def _dispatch(args, out, stdin):
    try:
        return args.func(args, out, stdin)
    except (MalformedInstance, PreconditionError, OracleRefusal, OSError) as v:
        sys.stderr.write('sumcolor: %s\n' % v)
        return 2
    except SolverError as v:
        log.error('internal solver failure: %s', v)
        return 1

def run(argv, out=None, stdin=None):
    """Run the command line argv (without the program name). Return the
    exit status.
    """
    try:
        args = _parser().parse_args(argv)
    except SystemExit as v:
        return v.code
    return _dispatch(args, out or sys.stdout, stdin or sys.stdin)

def main():
    args = _parser().parse_args()
    level = { 0: logging.WARNING, 1: logging.INFO }.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    sys.exit(_dispatch(args, sys.stdout, sys.stdin))
