"""The executable fragment of the condition language.

Condition values are composites or errors.  Boolean connectives between
conditions short-circuit on the left (as data-expression connectives do);
quantified conditions parse but cannot be evaluated, since they range over
all values.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from . import ast as A
from . import errors as E
from .state import State, is_error
from .values import (BOOLEAN_BODY, CompositeE, ErrorWord, FALSE_C, TRUE_C,
                     bool_comp)

if TYPE_CHECKING:
    from .interp import Interpreter


class ConditionNotExecutable(Exception):
    """Raised for quantified conditions: their semantics ranges over all
    values and is not computable."""


def eval_condition(itp: 'Interpreter', con: A.Condition, sta: State) -> CompositeE:
    if is_error(sta):
        return ErrorWord(sta.error)
    match con:
        case A.CondTT():
            return TRUE_C
        case A.CondFF():
            return FALSE_C
        case A.CondExp(exp):
            return itp.eval_dat_exp(exp, sta)
        case A.CondDefinedD(exp):
            c = itp.eval_dat_exp(exp, sta)
            return bool_comp(not isinstance(c, ErrorWord))
        case A.CondDefinedT(tex):
            t = itp.eval_typ_exp(tex, sta)
            return bool_comp(not isinstance(t, ErrorWord))
        case A.CondIs(ide, tex):
            val = sta.valuation.get(ide)
            if val is None:
                return FALSE_C
            typ = itp.eval_typ_exp(tex, sta)
            if isinstance(typ, ErrorWord):
                return typ
            return bool_comp(val.typ == typ)
        case A.CondConformant(ide, exp):
            val = sta.valuation.get(ide)
            if val is None:
                return FALSE_C
            c = itp.eval_dat_exp(exp, sta)
            if isinstance(c, ErrorWord):
                return c
            return bool_comp(val.typ.body == c.body)
        case A.CondAlg(ins, inner):
            return eval_condition(itp, inner, itp.exec_ins(ins, sta))
        case A.CondAnd(left, right):
            return _lazy(itp, left, right, sta, short_on=False)
        case A.CondOr(left, right):
            return _lazy(itp, left, right, sta, short_on=True)
        case A.CondNot(arg):
            c = eval_condition(itp, arg, sta)
            if isinstance(c, ErrorWord):
                return c
            if c.body != BOOLEAN_BODY:
                return ErrorWord(E.BOOLEAN_EXPECTED)
            return bool_comp(not c.data.value)
        case A.CondForall() | A.CondExists():
            raise ConditionNotExecutable('quantified conditions are not executable')
    raise TypeError(f'not a condition: {con!r}')


def _lazy(itp: 'Interpreter', left: A.Condition, right: A.Condition,
          sta: State, short_on: bool) -> CompositeE:
    c1 = eval_condition(itp, left, sta)
    if isinstance(c1, ErrorWord):
        return c1
    if c1.body != BOOLEAN_BODY:
        return ErrorWord(E.BOOLEAN_EXPECTED)
    if c1.data.value == short_on:
        return bool_comp(short_on)
    c2 = eval_condition(itp, right, sta)
    if isinstance(c2, ErrorWord):
        return c2
    if c2.body != BOOLEAN_BODY:
        return ErrorWord(E.BOOLEAN_EXPECTED)
    return bool_comp(c2.data.value)


def erase_assertions(node):
    """Replace every assertion with skip (the `--assertions off` mode)."""
    match node:
        case A.Assertion():
            return A.Skip()
        case A.Seq(first, second):
            return A.Seq(erase_assertions(first), erase_assertions(second))
        case A.If(guard, then, other):
            return A.If(guard, erase_assertions(then), erase_assertions(other))
        case A.IfError(guard, handler):
            return A.IfError(guard, erase_assertions(handler))
        case A.While(guard, body):
            return A.While(guard, erase_assertions(body))
        case A.Program(preamble, body):
            pre = None if preamble is None else erase_assertions(preamble)
            return A.Program(pre, erase_assertions(body))
        case A.PreSeq(first, second):
            return A.PreSeq(erase_assertions(first), erase_assertions(second))
        case A.ProcDecl(ide, val_params, ref_params, body):
            return A.ProcDecl(ide, val_params, ref_params, erase_assertions(body))
        case A.MultiProcDecl(components):
            return A.MultiProcDecl(tuple(erase_assertions(c) for c in components))
        case A.FunProcDecl(ide, val_params, body, export, export_tex):
            return A.FunProcDecl(ide, val_params, erase_assertions(body),
                                 export, export_tex)
        case _:
            return node
