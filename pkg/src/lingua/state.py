"""Memory states: environments, valuations and the error register.

A state is ((type-environment, procedure-environment), (valuation,
error-register)).  The three maps keep pairwise-disjoint key sets; every
declaration operator goes through `declared` to enforce this.  States are
treated as values: transformations build new states.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any, Mapping, Union

from .transfers import Type
from .values import Composite

OK = 'OK'


class _Omega:
    """The pseudo-data assigned by declarations before the first assignment."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'OMEGA'


OMEGA = _Omega()


@dataclass(frozen=True)
class Value:
    """A typed data: a composite-or-pseudo-data plus the variable's type."""

    data: Union[Composite, _Omega]
    typ: Type

    def is_pseudo(self) -> bool:
        return self.data is OMEGA


@dataclass(frozen=True)
class State:
    type_env: Mapping[str, Type] = field(default_factory=dict)
    proc_env: Mapping[str, Any] = field(default_factory=dict)  # name -> Procedure
    valuation: Mapping[str, Value] = field(default_factory=dict)
    error: str = OK


def initial_state() -> State:
    return State()


def is_error(sta: State) -> bool:
    return sta.error != OK


def error_of(sta: State) -> str:
    return sta.error


def load_error(sta: State, word: str) -> State:
    return replace(sta, error=word)


def clear_error(sta: State) -> State:
    return replace(sta, error=OK)


def declared(ide: str, sta: State) -> bool:
    return ide in sta.type_env or ide in sta.proc_env or ide in sta.valuation


def bind_value(sta: State, ide: str, val: Value) -> State:
    return replace(sta, valuation={**sta.valuation, ide: val})


def bind_type(sta: State, ide: str, typ: Type) -> State:
    return replace(sta, type_env={**sta.type_env, ide: typ})


def bind_proc(sta: State, ide: str, proc: Any) -> State:
    return replace(sta, proc_env={**sta.proc_env, ide: proc})
