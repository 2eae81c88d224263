"""Command-line front end: restore, parse and interpret programs, plus the
signature-to-grammar tool.

Exit codes: 0 success, 1 language error in the final state, 2 parse or
restore error, 3 step budget exhausted, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import fields

from .conditions import ConditionNotExecutable, erase_assertions
from .interp import BudgetExhausted, DEFAULT_MAX_STEPS, InternalError, Interpreter
from .lexer import ParseError
from .pretty import render_transfer
from .procedures import FunPro, ImpPro
from .restore import load_program, restore
from .siggen import SignatureError, gen_grammar, parse_signature
from .state import OK, State, initial_state
from .values import DEFAULT_LIMITS, Limits, render_body, render_data


def parse_limits_file(path: str) -> Limits:
    """Plain `key = integer` lines; unknown keys are rejected."""
    known = {f.name for f in fields(Limits)}
    values: dict[str, int] = {}
    with open(path, encoding='utf-8') as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            key, _, value = line.partition('=')
            key = key.strip()
            if key not in known:
                raise ValueError(f'{path}:{lineno}: unknown limit {key!r}')
            try:
                values[key] = int(value.strip())
            except ValueError:
                raise ValueError(f'{path}:{lineno}: not an integer: {value.strip()!r}')
    return Limits(**values)


def dump_state(sta: State) -> str:
    lines = []
    bindings = ([( ide, 'var') for ide in sta.valuation]
                + [(ide, 'type') for ide in sta.type_env]
                + [(ide, 'proc') for ide in sta.proc_env])
    for ide, kind in sorted(bindings):
        if kind == 'var':
            val = sta.valuation[ide]
            rendering = 'omega' if val.is_pseudo() else render_data(val.data.data)
            lines.append(f'var {ide} = {rendering}')
        elif kind == 'type':
            typ = sta.type_env[ide]
            lines.append(f'type {ide} = {render_body(typ.body)} '
                         f'with {render_transfer(typ.transfer)}')
        else:
            proc = sta.proc_env[ide]
            if isinstance(proc, ImpPro):
                vals = ', '.join(n for n, _ in proc.val_params) or 'empty-fp'
                refs = ', '.join(n for n, _ in proc.ref_params) or 'empty-fp'
                lines.append(f'proc {ide} = proc(val {vals} ref {refs})')
            elif isinstance(proc, FunPro):
                vals = ', '.join(n for n, _ in proc.val_params) or 'empty-fp'
                lines.append(f'proc {ide} = fun({vals})')
    lines.append(f'error = {sta.error}')
    return '\n'.join(lines) + '\n'


def _read(path: str) -> str:
    with open(path, encoding='utf-8') as handle:
        return handle.read()


def cmd_run(args: argparse.Namespace) -> int:
    limits = parse_limits_file(args.limits) if args.limits else DEFAULT_LIMITS
    text = _read(args.file)
    try:
        if args.no_restore:
            program = load_program(text, limits)
        else:
            program = load_program(restore(text, limits), limits)
    except ParseError as exc:
        print(f'{args.file}:{exc}', file=sys.stderr)
        return 2
    if args.assertions == 'off':
        program = erase_assertions(program)
    trace = (lambda line: print(f'trace: {line}')) if args.trace else None
    interpreter = Interpreter(limits=limits, max_steps=args.max_steps, trace=trace)
    try:
        final = interpreter.run(program, initial_state())
    except BudgetExhausted:
        print('step budget exhausted', file=sys.stderr)
        return 3
    except ConditionNotExecutable as exc:
        print(f'condition not executable: {exc}', file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f'internal error: {exc}', file=sys.stderr)
        return 4
    print(dump_state(final), end='')
    return 0 if final.error == OK else 1


def cmd_check(args: argparse.Namespace) -> int:
    try:
        load_program(restore(_read(args.file)))
    except ParseError as exc:
        print(f'{args.file}:{exc}', file=sys.stderr)
        return 2
    return 0


def cmd_restore(args: argparse.Namespace) -> int:
    try:
        print(restore(_read(args.file)), end='')
    except ParseError as exc:
        print(f'{args.file}:{exc}', file=sys.stderr)
        return 2
    return 0


def cmd_grammar(args: argparse.Namespace) -> int:
    try:
        sig = parse_signature(_read(args.sigfile))
    except SignatureError as exc:
        print(f'{args.sigfile}: {exc}', file=sys.stderr)
        return 2
    print(gen_grammar(sig), end='')
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='lingua')
    sub = parser.add_subparsers(dest='command', required=True)

    run = sub.add_parser('run', help='restore, parse and execute a program')
    run.add_argument('file')
    run.add_argument('--max-steps', type=int, default=DEFAULT_MAX_STEPS)
    run.add_argument('--limits', help='limits file with key = integer lines')
    run.add_argument('--assertions', choices=('on', 'off'), default='on')
    run.add_argument('--no-restore', action='store_true',
                     help='treat the input as concrete syntax')
    run.add_argument('--trace', action='store_true',
                     help='print each executed atomic instruction')
    run.set_defaults(func=cmd_run)

    check = sub.add_parser('check', help='restore and parse only')
    check.add_argument('file')
    check.set_defaults(func=cmd_check)

    res = sub.add_parser('restore', help='print the concrete text')
    res.add_argument('file')
    res.set_defaults(func=cmd_restore)

    grammar = sub.add_parser('grammar', help='generate the abstract-syntax '
                                             'grammar of a signature')
    grammar.add_argument('sigfile')
    grammar.set_defaults(func=cmd_grammar)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == '__main__':
    sys.exit(main())
