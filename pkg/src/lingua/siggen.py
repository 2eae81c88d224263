"""Signature-to-grammar generator and reachability analyzer.

A signature file declares one constructor per line:

    plus : Num x Num -> Num
    one : -> Num          # a constant
    # comments run to end of line

The generated grammar has one equation per carrier, in declaration order,
listing the prefix monomials `fn(C1, ..., Ck)` of that carrier's
constructors (`fn` bare when zero-arity); carriers without constructors
come out as `C = <empty>` written with the empty-set sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

EMPTY = '∅'  # the empty-set sign

_NAME = re.compile(r'[^\s(),|]+')


class SignatureError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(f'line {line}: {message}')
        self.line = line
        self.message = message


@dataclass(frozen=True)
class Signature:
    carriers: tuple[str, ...]
    functions: tuple[str, ...]
    arity: dict[str, tuple[str, ...]]
    sort: dict[str, str]


def parse_signature(text: str) -> Signature:
    carriers: list[str] = []
    functions: list[str] = []
    arity: dict[str, tuple[str, ...]] = {}
    sort: dict[str, str] = {}

    def note_carrier(name: str) -> None:
        if name not in carriers:
            carriers.append(name)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if ':' not in line:
            raise SignatureError(lineno, "missing ':' between name and arity")
        fn, _, rest = line.partition(':')
        fn = fn.strip()
        if not _NAME.fullmatch(fn):
            raise SignatureError(lineno, f'bad function name {fn!r}')
        if fn in arity:
            raise SignatureError(lineno, f'duplicate function name {fn!r}')
        if '->' not in rest:
            raise SignatureError(lineno, "missing '->' before the result carrier")
        args_text, _, result = rest.partition('->')
        result = result.strip()
        if not _NAME.fullmatch(result):
            raise SignatureError(lineno, f'bad carrier name {result!r}')
        args: list[str] = []
        args_text = args_text.strip()
        if args_text:
            # the separator is a free-standing x, not the letter
            for part in re.split(r'\s+x\s+', args_text):
                part = part.strip()
                if not _NAME.fullmatch(part):
                    raise SignatureError(lineno, f'bad carrier name {part!r}')
                args.append(part)
        for cn in args:
            note_carrier(cn)
        note_carrier(result)
        functions.append(fn)
        arity[fn] = tuple(args)
        sort[fn] = result
    return Signature(tuple(carriers), tuple(functions), arity, sort)


def gen_grammar(sig: Signature) -> str:
    lines = []
    for cn in sig.carriers:
        monomials = []
        for fn in sig.functions:
            if sig.sort[fn] != cn:
                continue
            args = sig.arity[fn]
            monomials.append(f'{fn}({", ".join(args)})' if args else fn)
        rhs = ' | '.join(monomials) if monomials else EMPTY
        lines.append(f'{cn} = {rhs}')
    return '\n'.join(lines) + '\n'


def reachable_carriers(sig: Signature) -> set[str]:
    """Least fixed point: a carrier is non-empty iff some constructor of
    that sort has all its argument carriers non-empty.  Empty for every
    carrier iff the signature has no constant."""
    reachable: set[str] = set()
    changed = True
    while changed:
        changed = False
        for fn in sig.functions:
            if sig.sort[fn] in reachable:
                continue
            if all(cn in reachable for cn in sig.arity[fn]):
                reachable.add(sig.sort[fn])
                changed = True
    return reachable


# -- prefix-term validation ---------------------------------------------------

class TermError(Exception):
    pass


def parse_term(text: str):
    """Parse a prefix term `fn(arg, ...)` (bare `fn` for constants) into a
    (name, args) tree."""
    pos = 0

    def parse() -> tuple:
        nonlocal pos
        m = _NAME.match(text, pos)
        if not m:
            raise TermError(f'expected a name at position {pos}')
        name = m.group()
        pos = m.end()
        args = []
        if pos < len(text) and text[pos] == '(':
            pos += 1
            args.append(parse())
            while pos < len(text) and text[pos] == ',':
                pos += 1
                while pos < len(text) and text[pos] == ' ':
                    pos += 1
                args.append(parse())
            if pos >= len(text) or text[pos] != ')':
                raise TermError(f"expected ')' at position {pos}")
            pos += 1
        return name, tuple(args)

    term = parse()
    if text[pos:].strip():
        raise TermError(f'trailing text at position {pos}')
    return term


def term_sort(sig: Signature, term) -> str | None:
    """The carrier of a well-formed term, None when ill-formed."""
    name, args = term
    if name not in sig.sort:
        return None
    expected = sig.arity[name]
    if len(args) != len(expected):
        return None
    for arg, want in zip(args, expected):
        if term_sort(sig, arg) != want:
            return None
    return sig.sort[name]


def validate_term(sig: Signature, text: str) -> str | None:
    try:
        term = parse_term(text)
    except TermError:
        return None
    return term_sort(sig, term)
