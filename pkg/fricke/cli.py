"""
Command line entry point: fricke reduce|basis|relations|jet|act|depth|verify.

Exit codes: 0 success, 1 usage or input error, 2 a verification witness,
3 an internal failure.
Results go to stdout, logging to stderr.
"""

from __future__ import absolute_import, division, print_function
import argparse
import json
import logging
import os
import sys

from fricke import util, graded, autaction, numcheck
from fricke.freegroup import (Automorphism, parse_word, parse_map,
                              from_shorthand, aut_depth)
from fricke.reduce import trace_reduce, trace_reduce_primed


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_WITNESS = 2
EXIT_INTERNAL = 3

SUITES = ('identities', 'relations', 'filtration', 'all')



class UsageError(util.FrickeError):
    pass



class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)



def _dumps(obj):
    return json.dumps(obj, sort_keys=True)


def _add_common(p, seeded=False):
    p.add_argument('--n', type=int, default=3, help='rank of the free group')
    p.add_argument('--json', action='store_true', help='print JSON')
    if seeded:
        p.add_argument('--seed', type=int, default=None,
                       help='random seed (default: $%s or 0)' % util.SEED_ENV)
        p.add_argument('--trials', type=int, default=util.DEFAULT_TRIALS)
        p.add_argument('--threads', type=int, default=os.cpu_count(),
                       help='worker threads for trials')


def _add_map(p):
    p.add_argument('--map', required=True,
                   help="'x1 -> <word>; ...', 'nielsen:P12' or 'inner:<word>'")
    p.add_argument('--inv', default=None, help='the inverse map')


def build_parser():
    parser = _Parser(prog='fricke',
                     description='Fricke characters of free groups')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('reduce', help='normal form of tr w')
    p.add_argument('word')
    p.add_argument('--primed', action='store_true')
    _add_common(p)

    p = sub.add_parser('basis', help='the bases T and S')
    p.add_argument('--grade', type=int, choices=(1, 2), default=1)
    _add_common(p)

    p = sub.add_parser('relations', help='degree-2 relations')
    p.add_argument('--verify', type=int, default=0, metavar='TRIALS')
    _add_common(p, seeded=True)

    p = sub.add_parser('jet', help="image of tr' w in J/J^3")
    p.add_argument('word')
    _add_common(p)

    p = sub.add_parser('act', help='an automorphism on J/J^3')
    _add_map(p)
    what = p.add_mutually_exclusive_group()
    what.add_argument('--jet', action='store_true')
    what.add_argument('--check-e', type=int, choices=(1, 2), default=None)
    what.add_argument('--eta1', action='store_true')
    what.add_argument('--decompose', action='store_true')
    p.add_argument('--plot', default='', metavar='FILE',
                   help='save the matrix of --jet or --eta1 as an image')
    _add_common(p)

    p = sub.add_parser('depth', help='Andreadakis depth and E-depth')
    _add_map(p)
    p.add_argument('--max-k', type=int, default=3)
    _add_common(p)

    p = sub.add_parser('verify', help='randomized verification suites')
    p.add_argument('--suite', choices=SUITES, default='all')
    _add_common(p, seeded=True)
    return parser


def get_automorphism(args):
    a = from_shorthand(args.map, args.n)
    if a is not None:
        return a
    if args.inv is None:
        raise UsageError("--inv is required unless --map is a shorthand")
    return Automorphism(parse_map(args.map, args.n),
                        parse_map(args.inv, args.n))



def cmd_reduce(args):
    w = parse_word(args.word, args.n)
    p = trace_reduce_primed(w) if args.primed else trace_reduce(w)
    print(_dumps(p.to_json()) if args.json else str(p))
    return EXIT_OK


def cmd_basis(args):
    basis = graded.basis_T(args.n) if args.grade == 1 else \
        graded.basis_S(args.n)
    if args.json:
        print(_dumps({'n': args.n, 'grade': args.grade,
                      'elements': basis.labels}))
    else:
        print('\n'.join(basis.labels))
    return EXIT_OK


def cmd_relations(args):
    rels = graded.relations_deg2(args.n)
    summary = None
    if 2 <= args.n <= graded.MAX_CHECKED_RANK:
        summary = graded.independence_check(args.n)
    if args.json:
        out = {'relations': [{'tag': tag, 'label': label,
                              'poly': poly.to_json()}
                             for tag, label, poly in rels],
               'independence': summary}
    else:
        lines = ['%s %s: %s' % (tag, label, poly) for tag, label, poly in rels]
        if summary:
            lines.append('rank %(rank)d of %(expected)d expected, '
                         '|S| = %(basis_S)d' % summary)
        out = '\n'.join(lines)

    code = EXIT_OK
    if args.verify:
        report = graded.verify_relations(args.n, args.verify,
                                         util.get_seed(args.seed),
                                         args.threads)
        if not report.passed:
            code = EXIT_WITNESS
        if args.json:
            out['verification'] = report.to_json()
        else:
            out = out + '\n' + str(report)
    print(_dumps(out) if args.json else out)
    return code


def cmd_jet(args):
    jet = graded.jet_of_word(parse_word(args.word, args.n))
    if args.json:
        print(_dumps(jet.to_json()))
        return EXIT_OK
    lines = []
    for part, coords in (('linear', jet.linear), ('quadratic', jet.quadratic)):
        for m in sorted(coords, key=graded.mono_key):
            lines.append('%s %s %s' % (part, graded.mono_label(m),
                                       util.fraction_str(coords[m])))
    print('\n'.join(lines) if lines else '0')
    return EXIT_OK


def cmd_act(args):
    a = get_automorphism(args)
    if args.check_e:
        out = {'k': args.check_e, 'in_E': autaction.in_E(a, args.check_e)}
    elif args.jet or args.eta1:
        mat = autaction.action_jet3(a) if args.jet else autaction.eta1(a)
        if args.plot:
            mat.plot(filepath=args.plot)
        if not args.json:
            print(mat.to_text())
            return EXIT_OK
        out = mat.to_json()
    elif args.decompose:
        split = autaction.decompose_inn_a2(a)
        out = {'decomposable': split is not None}
        if split is not None:
            out['inner'] = str(split[0])
            out['residual'] = str(split[1])
    else:
        out = {'map': str(a), 'inverse': str(a.inverse())}
    if args.json:
        print(_dumps(out))
    else:
        print('\n'.join('%s: %s' % (k, out[k]) for k in sorted(out)))
    return EXIT_OK


def cmd_depth(args):
    a = get_automorphism(args)
    out = {'aut_depth': aut_depth(a, args.max_k),
           'e_depth': autaction.e_depth(a)}
    if args.json:
        print(_dumps(out))
    else:
        print('aut_depth: %(aut_depth)d\ne_depth: %(e_depth)d' % out)
    return EXIT_OK


def run_suite(name, n, trials, seed, threads):
    report = numcheck.Report()
    if name in ('identities', 'all'):
        report.merge(numcheck.identity_suite(seed, trials, n, threads))
        report.merge(numcheck.oracle_check(trials, seed, n, threads=threads))
    if name in ('relations', 'all'):
        report.merge(graded.verify_relations(n, trials, seed, threads))
    if name in ('filtration', 'all') and n < 3:
        logging.warning("filtration checks need n >= 3; skipped")
    elif name in ('filtration', 'all'):
        report.merge(autaction.filtration_suite(seed, trials, n))
    return report


def cmd_verify(args):
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    report = run_suite(args.suite, args.n, args.trials,
                       util.get_seed(args.seed), args.threads)
    print(numcheck.dumps(report) if args.json else str(report))
    return EXIT_OK if report.passed else EXIT_WITNESS


COMMANDS = {'reduce': cmd_reduce, 'basis': cmd_basis,
            'relations': cmd_relations, 'jet': cmd_jet, 'act': cmd_act,
            'depth': cmd_depth, 'verify': cmd_verify}

# bad arguments, words, maps or environment; anything else is internal
INPUT_ERRORS = (UsageError, util.ConfigError, util.WordError, util.RankError,
                util.AutomorphismError, util.NotInE1Error)



def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
                                                          logging.DEBUG)
        logging.basicConfig(level=level, stream=sys.stderr,
                            format='%(levelname)s %(message)s')
        if args.command is None:
            raise UsageError("a subcommand is required")
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        return COMMANDS[args.command](args)
    except INPUT_ERRORS as e:
        print('fricke: error: %s' % e, file=sys.stderr)
        return EXIT_USAGE
    except util.FrickeError as e:
        logging.exception("internal failure")
        print('fricke: internal error: %s' % e, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == '__main__':
    sys.exit(main())
