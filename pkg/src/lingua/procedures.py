"""Procedure objects and the parameter-passing machinery.

Formal parameters are (identifier, type-expression) pairs; actual
parameters are identifiers.  Imperative procedures carry their
declaration-time environment and execute their bodies in it, with the
whole recursion group (themselves plus any mutually recursive siblings)
nested back in, which is what makes recursive calls find the procedure.
Functional procedures also run in their declaration-time environment,
which by construction does not contain themselves: a self-call meets
'procedure-not-declared'.

Compatibility checks compute the types of formal parameters in a
synthetic state built from a type environment and a valuation with an
empty procedure environment (type expressions do not consult it).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

from . import ast as A
from . import errors as E
from .state import OK, State, Value
from .transfers import Type, eval_transfer
from .values import Composite, ErrorWord, Limits, is_true

FormalParams = tuple[tuple[str, A.TypExp], ...]
ActualParams = tuple[str, ...]

# evaluates a type expression in a state; supplied by the interpreter
TypEval = Callable[[A.TypExp, State], Union[Type, ErrorWord]]


@dataclass(frozen=True)
class ImpPro:
    name: str
    val_params: FormalParams
    ref_params: FormalParams
    body: A.Program
    decl_type_env: Mapping[str, Type]
    decl_proc_env: Mapping[str, object]
    group: list = field(default_factory=list, compare=False)  # recursion group

    def local_proc_env(self) -> dict:
        return {**self.decl_proc_env, **{p.name: p for p in self.group}}


@dataclass(frozen=True)
class FunPro:
    name: str
    val_params: FormalParams
    body: A.Program
    export: A.DatExp
    export_tex: A.TypExp
    decl_type_env: Mapping[str, Type]
    decl_proc_env: Mapping[str, object]


Procedure = Union[ImpPro, FunPro]


def make_imp_group(components: tuple[A.ProcDecl, ...], type_env, proc_env) -> list[ImpPro]:
    """Create a recursion group: every member sees all members (n = 1 gives
    plain single recursion)."""
    group: list[ImpPro] = []
    for c in components:
        group.append(ImpPro(c.ide, c.val_params, c.ref_params, c.body,
                            type_env, proc_env, group))
    return group


def formal_repetitions(*param_lists: FormalParams) -> bool:
    names = [name for params in param_lists for name, _ in params]
    return len(names) != len(set(names))


def statically_compatible(fv: FormalParams, fr: FormalParams,
                          av: ActualParams, ar: ActualParams) -> str:
    if formal_repetitions(fr, fv):
        return E.FORMAL_PAR_REPETITIONS
    if len(ar) != len(set(ar)):
        return E.ACTUAL_PAR_REPETITIONS
    if len(fv) != len(av) or len(fr) != len(ar):
        return E.INCOMPATIBLE_NUMBERS_OF_PARAMETERS
    return OK


def dynamically_compatible(fv: FormalParams, fr: FormalParams,
                           av: ActualParams, ar: ActualParams,
                           type_env: Mapping[str, Type],
                           valuation: Mapping[str, Value],
                           eval_typ: TypEval, limits: Limits) -> str:
    message = statically_compatible(fv, fr, av, ar)
    if message != OK:
        return message
    for ide in av:
        if ide not in valuation:
            return E.VALUE_PARAMETER_UNDEFINED
    if any(valuation[ide].is_pseudo() for ide in av):
        return E.VALUE_PARAMETER_UNINITIALIZED
    for ide in ar:
        if ide not in valuation:
            return E.REFERENCE_PARAMETER_UNDECLARED
    if any(valuation[ide].is_pseudo() for ide in ar):
        return E.REFERENCE_PARAMETER_UNINITIALIZED

    synthetic = State(type_env=type_env, proc_env={}, valuation=valuation, error=OK)
    typs_v = [eval_typ(tex, synthetic) for _, tex in fv]
    typs_r = [eval_typ(tex, synthetic) for _, tex in fr]
    if any(isinstance(t, ErrorWord) for t in typs_v):
        return E.TYPE_ERROR_FORMAL_VALUE
    if any(isinstance(t, ErrorWord) for t in typs_r):
        return E.TYPE_ERROR_FORMAL_REFERENCE

    coms_v = [valuation[ide].data for ide in av]
    coms_r = [valuation[ide].data for ide in ar]
    if any(t.body != c.body for t, c in zip(typs_v, coms_v)):
        return E.INCOMPATIBLE_BODIES_VALUE
    if any(t.body != c.body for t, c in zip(typs_r, coms_r)):
        return E.INCOMPATIBLE_BODIES_REFERENCE
    if any(not is_true(eval_transfer(t.transfer, c, limits))
           for t, c in zip(typs_v, coms_v)):
        return E.YOKE_NOT_SATISFIED_BY_VAL
    if any(not is_true(eval_transfer(t.transfer, c, limits))
           for t, c in zip(typs_r, coms_r)):
        return E.YOKE_NOT_SATISFIED_BY_REF
    return OK


def pass_actual(fv: FormalParams, fr: FormalParams,
                av: ActualParams, ar: ActualParams,
                type_env: Mapping[str, Type],
                valuation: Mapping[str, Value],
                eval_typ: TypEval, limits: Limits) -> Union[dict[str, Value], str]:
    """The initial local valuation: formal identifiers bound to the values
    of their actuals; or an error word."""
    message = dynamically_compatible(fv, fr, av, ar, type_env, valuation,
                                     eval_typ, limits)
    if message != OK:
        return message
    local = {name: valuation[ide] for (name, _), ide in zip(fv, av)}
    local.update({name: valuation[ide] for (name, _), ide in zip(fr, ar)})
    return local


def return_referential(fr: FormalParams, ar: ActualParams,
                       type_env: Mapping[str, Type],
                       local_valuation: Mapping[str, Value],
                       global_valuation: Mapping[str, Value],
                       eval_typ: TypEval, limits: Limits) -> Union[dict[str, Value], str]:
    """The terminal global valuation: actual reference parameters updated
    with the formals' terminal values; or an error word."""
    message = dynamically_compatible((), fr, (), ar, type_env,
                                     global_valuation, eval_typ, limits)
    if message != OK:
        return message
    for name, _ in fr:
        if name not in local_valuation:
            return E.VALUE_OF_REFERENCE_PARAMETER_UNDEFINED
    updated = dict(global_valuation)
    for (name, _), ide in zip(fr, ar):
        updated[ide] = local_valuation[name]
    return updated
