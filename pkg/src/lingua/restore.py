"""The restoring transformation: colloquial syntax to concrete syntax.

Most colloquialisms (priorities, grouped declarations, literals, selector
sugar, `with`-yokes) are expanded while parsing; what remains here is the
structural unfolding of assertion decrees:

    begin-asr con ; sin end-asr

inserts `asr con rsa` around every atomic instruction of `sin`, except
inside `off ... on` regions and error handlers.  Nested decrees conjoin
their conditions.  The restored text is the canonical pretty-printing, so
restoring is idempotent and concrete texts pass through modulo whitespace.
"""

from __future__ import annotations

from . import ast as A
from .parser import parse_program
from .pretty import render_program
from .values import DEFAULT_LIMITS, Limits

_ATOMIC = (A.Assign, A.ReplaceTr, A.CallImp, A.Skip)


def _fold(items: list[A.Ins]) -> A.Ins:
    ins = items[-1]
    for item in reversed(items[:-1]):
        ins = A.Seq(item, ins)
    return ins


def _full_wrap(con: A.Condition, sin: A.Ins) -> list[A.Ins]:
    """The decree itself: assertions at both ends of the expansion, except
    that a decree over a bare exclusion region vanishes and nested decrees
    merge conjunctively."""
    match sin:
        case A.Decree(inner_con, inner):
            return _full_wrap(A.CondAnd(con, inner_con), inner)
        case A.Off(inner):
            return [restore_ins(inner)]
    check = A.Assertion(con)
    return [check, *_expand(con, sin), check]


def _expand(con: A.Condition, sin: A.Ins) -> list[A.Ins]:
    check = A.Assertion(con)
    match sin:
        case A.Seq(first, second):
            return [*_expand(con, first), check, *_expand(con, second)]
        case A.If(guard, then, other):
            return [A.If(guard, _fold(_full_wrap(con, then)),
                         _fold(_full_wrap(con, other)))]
        case A.While(guard, body):
            return [A.While(guard, _fold(_full_wrap(con, body)))]
        case A.IfError(guard, handler):
            # assertions do not penetrate error handlers
            return [A.IfError(guard, restore_ins(handler))]
        case A.Off(inner):
            return [restore_ins(inner)]
        case A.Decree(inner_con, inner):
            return _full_wrap(A.CondAnd(con, inner_con), inner)
        case A.Assertion(inner_con):
            return [A.Assertion(A.CondAnd(con, inner_con))]
        case _ if isinstance(sin, _ATOMIC):
            return [sin]
    raise TypeError(f'not an instruction: {sin!r}')


def restore_ins(sin: A.Ins) -> A.Ins:
    """Resolve decree and exclusion markers outside any active decree."""
    match sin:
        case A.Decree(con, inner):
            return _fold(_full_wrap(con, inner))
        case A.Off(inner):
            return restore_ins(inner)
        case A.Seq(first, second):
            return A.Seq(restore_ins(first), restore_ins(second))
        case A.If(guard, then, other):
            return A.If(guard, restore_ins(then), restore_ins(other))
        case A.While(guard, body):
            return A.While(guard, restore_ins(body))
        case A.IfError(guard, handler):
            return A.IfError(guard, restore_ins(handler))
        case _:
            return sin


def _restore_preamble(p: A.Preamble) -> A.Preamble:
    match p:
        case A.PreSeq(first, second):
            return A.PreSeq(_restore_preamble(first), _restore_preamble(second))
        case A.ProcDecl(ide, val_params, ref_params, body):
            return A.ProcDecl(ide, val_params, ref_params, restore_program_ast(body))
        case A.MultiProcDecl(components):
            return A.MultiProcDecl(tuple(_restore_preamble(c) for c in components))
        case A.FunProcDecl(ide, val_params, body, export, export_tex):
            return A.FunProcDecl(ide, val_params, restore_program_ast(body),
                                 export, export_tex)
        case _:
            return p


def restore_program_ast(prog: A.Program) -> A.Program:
    preamble = None if prog.preamble is None else _restore_preamble(prog.preamble)
    return A.Program(preamble, restore_ins(prog.body))


def load_program(text: str, limits: Limits = DEFAULT_LIMITS) -> A.Program:
    """Parse colloquial or concrete text into a fully restored program."""
    return restore_program_ast(parse_program(text, limits))


def restore(text: str, limits: Limits = DEFAULT_LIMITS) -> str:
    """Colloquial text to canonical concrete text."""
    return render_program(load_program(text, limits))
