"""The interpreter core: evaluators for expressions, type expressions,
declarations, instructions, preambles and programs.

Every reachable instruction except error handling is transparent: it
returns error-carrying states untouched.  Expression evaluation on an
error state yields that error.  A global step budget stands in for the
genuine partiality of the semantics: exhausting it raises
BudgetExhausted, which is never confused with a language-level error.
"""

from __future__ import annotations

import sys
from dataclasses import replace

from . import ast as A
from . import errors as E
from .procedures import (FunPro, ImpPro, formal_repetitions, make_imp_group,
                         pass_actual, return_referential)
from .state import (OK, OMEGA, State, Value, bind_proc, bind_type, bind_value,
                    clear_error, declared, initial_state, is_error, load_error)
from .transfers import TT, Type, TypeE, eval_transfer, yc_apply
from .values import (BOOLEAN_BODY, Body, Composite, CompositeE, DEFAULT_LIMITS,
                     Bool, ErrorWord, Limits, RecordBody, SimpleBody, Word,
                     bool_comp, cc_apply, is_boolean_composite, is_true,
                     num_comp, sort_of, word_comp)

DEFAULT_MAX_STEPS = 10_000_000


class BudgetExhausted(Exception):
    """The step budget ran out (the stand-in for nontermination)."""


class InternalError(Exception):
    """An interpreter invariant was breached (CLI exit code 4)."""


def coherent(b1: Body, b2: Body) -> bool:
    """Equal bodies, or record bodies whose attribute sets are
    inclusion-comparable and agree on the common attributes."""
    if b1 == b2:
        return True
    if isinstance(b1, RecordBody) and isinstance(b2, RecordBody):
        keys1, keys2 = set(b1.fields), set(b2.fields)
        if not (keys1 <= keys2 or keys2 <= keys1):
            return False
        return all(b1.fields[k] == b2.fields[k] for k in keys1 & keys2)
    return False


class Interpreter:
    def __init__(self, limits: Limits = DEFAULT_LIMITS,
                 max_steps: int = DEFAULT_MAX_STEPS, trace=None):
        self.limits = limits
        self.max_steps = max_steps
        self.trace = trace
        self._steps = max_steps

    # -- budget -------------------------------------------------------------

    def _tick(self) -> None:
        self._steps -= 1
        if self._steps < 0:
            raise BudgetExhausted()

    def run(self, prog: A.Program, sta: State | None = None) -> State:
        """Execute a whole program against a fresh budget."""
        self._steps = self.max_steps
        old_limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old_limit, 20000))
        try:
            return self.exec_program(prog, sta if sta is not None else initial_state())
        except RecursionError:
            # host stack depth folds into the nontermination surrogate
            raise BudgetExhausted() from None
        finally:
            sys.setrecursionlimit(old_limit)

    # -- data expressions -----------------------------------------------------

    def eval_dat_exp(self, e: A.DatExp, sta: State) -> CompositeE:
        if is_error(sta):
            return ErrorWord(sta.error)
        self._tick()
        match e:
            case A.BoolLit(value):
                return bool_comp(value)
            case A.NumLit(num):
                return num_comp(num)
            case A.WordLit(text):
                return word_comp(text)
            case A.Var(ide):
                val = sta.valuation.get(ide)
                if val is None:
                    return ErrorWord(E.UNDECLARED_VARIABLE)
                if val.is_pseudo():
                    return ErrorWord(E.UNINITIALIZED_VARIABLE)
                return val.data
            case A.And(left, right):
                return self._eval_lazy_bool(left, right, sta, short_on=False)
            case A.Or(left, right):
                return self._eval_lazy_bool(left, right, sta, short_on=True)
            case A.Not(arg):
                c = self.eval_dat_exp(arg, sta)
                if isinstance(c, ErrorWord):
                    return c
                if c.body != BOOLEAN_BODY:
                    return ErrorWord(E.BOOLEAN_EXPECTED)
                return bool_comp(not c.data.value)
            case A.When(guard, then, other):
                c = self.eval_dat_exp(guard, sta)
                if isinstance(c, ErrorWord):
                    return c
                if c.body != BOOLEAN_BODY:
                    return ErrorWord(E.BOOLEAN_EXPECTED)
                return self.eval_dat_exp(then if c.data.value else other, sta)
            case A.FunCall(ide, args):
                return self._call_fun_pro(ide, args, sta)
            case A.Cmp(op, left, right) | A.ArithE(op, left, right):
                return self._apply(op, [left, right], sta)
            case A.Glue(left, right):
                return self._apply('glue', [left, right], sta)
            case A.ListCreate(item):
                return self._apply('create-li', [item], sta)
            case A.ListPush(item, lst):
                return self._apply('push-li', [item, lst], sta)
            case A.ListTop(lst):
                return self._apply('top-li', [lst], sta)
            case A.ListPop(lst):
                return self._apply('pop-li', [lst], sta)
            case A.ArrCreate(item):
                return self._apply('create-ar', [item], sta)
            case A.ArrPut(arr, item):
                return self._apply('put-to-ar', [arr, item], sta)
            case A.ArrChange(arr, index, item):
                return self._apply('change-in-ar', [arr, index, item], sta)
            case A.ArrGet(arr, index):
                return self._apply('get-from-ar', [arr, index], sta)
            case A.RecCreate(ide, item):
                return self._apply('create-re', [ide, item], sta)
            case A.RecPut(ide, item, rec):
                return self._apply('put-to-re', [ide, item, rec], sta)
            case A.RecGet(rec, ide):
                return self._apply('get-from-re', [rec, ide], sta)
            case A.RecCut(ide, rec):
                return self._apply('cut-from-re', [ide, rec], sta)
            case A.RecChange(rec, ide, item):
                return self._apply('change-in-re', [rec, ide, item], sta)
        raise InternalError(f'unknown expression node {e!r}')

    def _apply(self, op: str, args: list, sta: State) -> CompositeE:
        # arguments evaluate left to right; attribute names pass through
        evaluated = [a if isinstance(a, str) else self.eval_dat_exp(a, sta)
                     for a in args]
        return cc_apply(op, evaluated, self.limits)

    def _eval_lazy_bool(self, left: A.DatExp, right: A.DatExp, sta: State,
                        short_on: bool) -> CompositeE:
        c1 = self.eval_dat_exp(left, sta)
        if isinstance(c1, ErrorWord):
            return c1
        if c1.body != BOOLEAN_BODY:
            return ErrorWord(E.BOOLEAN_EXPECTED)
        if c1.data.value == short_on:
            return bool_comp(short_on)
        c2 = self.eval_dat_exp(right, sta)
        if isinstance(c2, ErrorWord):
            return c2
        if c2.body != BOOLEAN_BODY:
            return ErrorWord(E.BOOLEAN_EXPECTED)
        return bool_comp(c2.data.value)

    # -- type expressions -------------------------------------------------------

    def eval_typ_exp(self, e: A.TypExp, sta: State) -> TypeE:
        if is_error(sta):
            return ErrorWord(sta.error)
        match e:
            case A.TypSimple(tag):
                return Type(SimpleBody(tag), TT)
            case A.TypConst(ide):
                typ = sta.type_env.get(ide)
                if typ is None:
                    return ErrorWord(E.TYPE_CONSTANT_UNDEFINED)
                return typ
            case A.TypList(inner):
                return yc_apply('create-li', self.eval_typ_exp(inner, sta))
            case A.TypArray(inner):
                return yc_apply('create-ar', self.eval_typ_exp(inner, sta))
            case A.TypRecord(ide, inner):
                return yc_apply('create-re', ide, self.eval_typ_exp(inner, sta))
            case A.TypExpand(rec, ide, inner):
                return yc_apply('put-to-re', self.eval_typ_exp(rec, sta), ide,
                                self.eval_typ_exp(inner, sta))
            case A.TypReplace(inner, transfer):
                return yc_apply('replace-ty-tr', self.eval_typ_exp(inner, sta), transfer)
        raise InternalError(f'unknown type expression node {e!r}')

    # -- declarations --------------------------------------------------------------

    def declare_dat_var(self, d: A.VarDec, sta: State) -> State:
        if is_error(sta):
            return sta
        if declared(d.ide, sta):
            return load_error(sta, E.VARIABLE_DECLARED)
        typ = self.eval_typ_exp(d.tex, sta)
        if isinstance(typ, ErrorWord):
            return load_error(sta, typ.word)
        return bind_value(sta, d.ide, Value(OMEGA, typ))

    def define_typ_con(self, d: A.TypDef, sta: State) -> State:
        if is_error(sta):
            return sta
        if declared(d.ide, sta):
            return load_error(sta, E.IDENTIFIER_NOT_FREE)
        typ = self.eval_typ_exp(d.tex, sta)
        if isinstance(typ, ErrorWord):
            return load_error(sta, typ.word)
        return bind_type(sta, d.ide, typ)

    def declare_imp_pro(self, d: A.ProcDecl, sta: State) -> State:
        if is_error(sta):
            return sta
        if declared(d.ide, sta):
            return load_error(sta, E.VARIABLE_DECLARED)
        if formal_repetitions(d.ref_params, d.val_params):
            return load_error(sta, E.FORMAL_PAR_REPETITIONS)
        (proc,) = make_imp_group((d,), sta.type_env, sta.proc_env)
        return bind_proc(sta, d.ide, proc)

    def declare_imp_mpr(self, d: A.MultiProcDecl, sta: State) -> State:
        if is_error(sta):
            return sta
        names = [c.ide for c in d.components]
        if len(names) != len(set(names)):
            return load_error(sta, E.PROCEDURE_NAMES_REPEATED)
        if any(declared(name, sta) for name in names):
            return load_error(sta, E.PROCEDURE_DECLARED)
        if any(formal_repetitions(c.ref_params, c.val_params) for c in d.components):
            return load_error(sta, E.FORMAL_PAR_REPETITIONS)
        out = sta
        for proc in make_imp_group(d.components, sta.type_env, sta.proc_env):
            out = bind_proc(out, proc.name, proc)
        return out

    def declare_fun_pro(self, d: A.FunProcDecl, sta: State) -> State:
        if is_error(sta):
            return sta
        if declared(d.ide, sta):
            return load_error(sta, E.VARIABLE_DECLARED)
        fun = FunPro(d.ide, d.val_params, d.body, d.export, d.export_tex,
                     sta.type_env, sta.proc_env)
        return bind_proc(sta, d.ide, fun)

    # -- instructions ------------------------------------------------------------

    def assign(self, node: A.Assign, sta: State) -> State:
        if is_error(sta):
            return sta
        val = sta.valuation.get(node.ide)
        if val is None:
            return load_error(sta, E.IDENTIFIER_NOT_DECLARED)
        new = self.eval_dat_exp(node.exp, sta)
        if isinstance(new, ErrorWord):
            return load_error(sta, new.word)
        transfer = val.typ.transfer
        checked = eval_transfer(transfer, new, self.limits)
        if isinstance(checked, ErrorWord):
            return load_error(sta, checked.word)
        former_body = val.typ.body if val.is_pseudo() else val.data.body
        if not coherent(new.body, former_body):
            return load_error(sta, E.NO_COHERENCE)
        if not is_boolean_composite(checked):
            return load_error(sta, E.A_YOKE_EXPECTED)
        if not is_true(checked):
            return load_error(sta, E.YOKE_NOT_SATISFIED)
        return bind_value(sta, node.ide, Value(new, Type(new.body, transfer)))

    def replace_tr(self, node: A.ReplaceTr, sta: State) -> State:
        if is_error(sta):
            return sta
        val = sta.valuation.get(node.ide)
        if val is None:
            return load_error(sta, E.IDENTIFIER_NOT_DECLARED)
        if val.is_pseudo():
            return load_error(sta, E.UNINITIALIZED_VARIABLE)
        if not is_true(eval_transfer(node.transfer, val.data, self.limits)):
            return load_error(sta, E.YOKE_NOT_SATISFIED)
        return bind_value(sta, node.ide,
                          Value(val.data, Type(val.data.body, node.transfer)))

    def exec_ins(self, i: A.Ins, sta: State) -> State:
        self._tick()
        match i:
            case A.Skip():
                if not is_error(sta):
                    self._trace(i)
                return sta
            case A.Assign():
                if not is_error(sta):
                    self._trace(i)
                return self.assign(i, sta)
            case A.ReplaceTr():
                if not is_error(sta):
                    self._trace(i)
                return self.replace_tr(i, sta)
            case A.Seq(first, second):
                return self.exec_ins(second, self.exec_ins(first, sta))
            case A.If(guard, then, other):
                if is_error(sta):
                    return sta
                c = self.eval_dat_exp(guard, sta)
                if isinstance(c, ErrorWord):
                    return load_error(sta, c.word)
                if c.body != BOOLEAN_BODY:
                    return load_error(sta, E.BOOLEAN_EXPECTED)
                return self.exec_ins(then if c.data.value else other, sta)
            case A.While(guard, body):
                while True:
                    if is_error(sta):
                        return sta
                    self._tick()
                    c = self.eval_dat_exp(guard, sta)
                    if isinstance(c, ErrorWord):
                        return load_error(sta, c.word)
                    if c.body != BOOLEAN_BODY:
                        return load_error(sta, E.BOOLEAN_EXPECTED)
                    if not c.data.value:
                        return sta
                    sta = self.exec_ins(body, sta)
            case A.IfError(guard, handler):
                return self._exec_if_error(guard, handler, sta)
            case A.CallImp(ide, val_args, ref_args):
                if not is_error(sta):
                    self._trace(i)
                return self.call_imp_proc(ide, val_args, ref_args, sta)
            case A.Assertion(con):
                return self._exec_assertion(i, con, sta)
            case A.Decree() | A.Off():
                raise InternalError('colloquial node reached the interpreter; '
                                    'restore the program first')
        raise InternalError(f'unknown instruction node {i!r}')

    def _trace(self, i: A.Ins) -> None:
        if self.trace is not None:
            from .pretty import render_ins_inline
            self.trace(render_ins_inline(i))

    def _exec_if_error(self, guard: A.DatExp, handler: A.Ins, sta: State) -> State:
        if not is_error(sta):
            return sta
        err = sta.error
        cleaned = clear_error(sta)
        com = self.eval_dat_exp(guard, cleaned)
        if isinstance(com, ErrorWord):
            return load_error(sta, f'{com.word} @ {E.ERROR_HANDLING_NOT_EXECUTED}')
        if sort_of(com) != 'word':
            return load_error(sta, f'{E.WORD_EXPECTED} @ {E.ERROR_HANDLING_NOT_EXECUTED}')
        if com.data.text != err:
            return sta
        handled = self.exec_ins(handler, cleaned)
        if is_error(handled):
            return load_error(sta, f'{handled.error} @ {E.ERROR_HANDLING_NOT_EXECUTED}')
        return load_error(handled, f'{err} @ {E.ERROR_HANDLING_EXECUTED}')

    def _exec_assertion(self, node: A.Assertion, con: A.Condition, sta: State) -> State:
        if is_error(sta):
            return sta
        self._trace(node)
        from .conditions import eval_condition
        c = eval_condition(self, con, sta)
        if is_true(c):
            return sta
        return load_error(sta, E.ASSERTION_NOT_SATISFIED)

    # -- procedures --------------------------------------------------------------

    def call_imp_proc(self, ide: str, val_args: tuple[str, ...],
                      ref_args: tuple[str, ...], sta: State) -> State:
        if is_error(sta):
            return sta
        proc = sta.proc_env.get(ide)
        if proc is None:
            return load_error(sta, E.PROCEDURE_NOT_DECLARED)
        if isinstance(proc, FunPro):
            return load_error(sta, E.PROCEDURE_NOT_IMPERATIVE)
        local_vat = pass_actual(proc.val_params, proc.ref_params, val_args,
                                ref_args, proc.decl_type_env, sta.valuation,
                                self.eval_typ_exp, self.limits)
        if isinstance(local_vat, str):
            return load_error(sta, local_vat)
        local = State(type_env=proc.decl_type_env, proc_env=proc.local_proc_env(),
                      valuation=local_vat, error=OK)
        terminal = self.exec_program(proc.body, local)
        if is_error(terminal):
            return load_error(sta, terminal.error)
        new_vat = return_referential(proc.ref_params, ref_args,
                                     proc.decl_type_env, terminal.valuation,
                                     sta.valuation, self.eval_typ_exp, self.limits)
        if isinstance(new_vat, str):
            return load_error(sta, new_vat)
        return replace(sta, valuation=new_vat)

    def _call_fun_pro(self, ide: str, args: tuple[str, ...], sta: State) -> CompositeE:
        proc = sta.proc_env.get(ide)
        if proc is None:
            return ErrorWord(E.PROCEDURE_NOT_DECLARED)
        if isinstance(proc, ImpPro):
            return ErrorWord(E.PROCEDURE_NOT_FUNCTIONAL)
        local_vat = pass_actual(proc.val_params, (), args, (),
                                proc.decl_type_env, sta.valuation,
                                self.eval_typ_exp, self.limits)
        if isinstance(local_vat, str):
            return ErrorWord(local_vat)
        local = State(type_env=proc.decl_type_env, proc_env=proc.decl_proc_env,
                      valuation=local_vat, error=OK)
        terminal = self.exec_program(proc.body, local)
        if is_error(terminal):
            return ErrorWord(terminal.error)
        return self._export(proc.export, proc.export_tex, terminal)

    def _export(self, export: A.DatExp, export_tex: A.TypExp, sta: State) -> CompositeE:
        typ = self.eval_typ_exp(export_tex, sta)
        com = self.eval_dat_exp(export, sta)
        if isinstance(typ, ErrorWord):
            return typ
        if isinstance(com, ErrorWord):
            return com
        if not coherent(typ.body, com.body):
            return ErrorWord(E.BODIES_NOT_COHERENT)
        if not is_true(eval_transfer(typ.transfer, com, self.limits)):
            return ErrorWord(E.YOKE_NOT_SATISFIED)
        return com

    # -- preambles and programs -----------------------------------------------------

    def exec_preamble(self, p: A.Preamble, sta: State) -> State:
        match p:
            case A.VarDec():
                return self.declare_dat_var(p, sta)
            case A.TypDef():
                return self.define_typ_con(p, sta)
            case A.ProcDecl():
                return self.declare_imp_pro(p, sta)
            case A.MultiProcDecl():
                return self.declare_imp_mpr(p, sta)
            case A.FunProcDecl():
                return self.declare_fun_pro(p, sta)
            case A.SkipPre():
                return sta
            case A.PreSeq(first, second):
                return self.exec_preamble(second, self.exec_preamble(first, sta))
        raise InternalError(f'unknown preamble node {p!r}')

    def exec_program(self, prog: A.Program, sta: State) -> State:
        if prog.preamble is not None:
            sta = self.exec_preamble(prog.preamble, sta)
        return self.exec_ins(prog.body, sta)
