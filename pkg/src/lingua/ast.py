"""Abstract syntax trees for every syntactic category.

Node kinds mirror the constructors of the denotation algebra one-to-one.
Transfer expressions need no AST of their own: their denotations are the
transfer trees themselves (transfers are state-independent), so the parser
builds `lingua.transfers` nodes directly.

Sequences (instructions, preambles) are binary and canonically nested to
the right: `a ; b ; c` parses to Seq(a, Seq(b, c)).

Decree and Off are colloquial-only nodes: the restoring transformation
unfolds them into plain assertions, so they never reach the interpreter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .transfers import Transfer
from .values import Num

# ---------------------------------------------------------------------------
# data expressions

@dataclass(frozen=True)
class BoolLit:
    value: bool


@dataclass(frozen=True)
class NumLit:
    num: Num


@dataclass(frozen=True)
class WordLit:
    text: str


@dataclass(frozen=True)
class Var:
    ide: str


@dataclass(frozen=True)
class And:
    left: 'DatExp'
    right: 'DatExp'


@dataclass(frozen=True)
class Or:
    left: 'DatExp'
    right: 'DatExp'


@dataclass(frozen=True)
class Not:
    arg: 'DatExp'


@dataclass(frozen=True)
class Cmp:
    op: str  # equal | less | leq
    left: 'DatExp'
    right: 'DatExp'


@dataclass(frozen=True)
class ArithE:
    op: str  # add | subtract | multiply | divide
    left: 'DatExp'
    right: 'DatExp'


@dataclass(frozen=True)
class Glue:
    left: 'DatExp'
    right: 'DatExp'


@dataclass(frozen=True)
class ListCreate:
    item: 'DatExp'


@dataclass(frozen=True)
class ListPush:
    item: 'DatExp'
    lst: 'DatExp'


@dataclass(frozen=True)
class ListTop:
    lst: 'DatExp'


@dataclass(frozen=True)
class ListPop:
    lst: 'DatExp'


@dataclass(frozen=True)
class ArrCreate:
    item: 'DatExp'


@dataclass(frozen=True)
class ArrPut:
    arr: 'DatExp'
    item: 'DatExp'


@dataclass(frozen=True)
class ArrChange:
    arr: 'DatExp'
    index: 'DatExp'
    item: 'DatExp'


@dataclass(frozen=True)
class ArrGet:
    arr: 'DatExp'
    index: 'DatExp'


@dataclass(frozen=True)
class RecCreate:
    ide: str
    item: 'DatExp'


@dataclass(frozen=True)
class RecPut:
    ide: str
    item: 'DatExp'
    rec: 'DatExp'


@dataclass(frozen=True)
class RecGet:
    rec: 'DatExp'
    ide: str


@dataclass(frozen=True)
class RecCut:
    ide: str
    rec: 'DatExp'


@dataclass(frozen=True)
class RecChange:
    rec: 'DatExp'
    ide: str
    item: 'DatExp'


@dataclass(frozen=True)
class When:
    """Conditional expression `if guard then a else b fi`; exactly one
    branch is evaluated."""

    guard: 'DatExp'
    then: 'DatExp'
    other: 'DatExp'


@dataclass(frozen=True)
class FunCall:
    ide: str
    args: tuple[str, ...]  # actual parameters are identifiers


DatExp = Union[BoolLit, NumLit, WordLit, Var, And, Or, Not, Cmp, ArithE,
               Glue, ListCreate, ListPush, ListTop, ListPop, ArrCreate,
               ArrPut, ArrChange, ArrGet, RecCreate, RecPut, RecGet,
               RecCut, RecChange, When, FunCall]


# ---------------------------------------------------------------------------
# type expressions

@dataclass(frozen=True)
class TypSimple:
    tag: str  # 'Boolean' | 'number' | 'word'


@dataclass(frozen=True)
class TypConst:
    ide: str


@dataclass(frozen=True)
class TypList:
    inner: 'TypExp'


@dataclass(frozen=True)
class TypArray:
    inner: 'TypExp'


@dataclass(frozen=True)
class TypRecord:
    ide: str
    inner: 'TypExp'


@dataclass(frozen=True)
class TypExpand:
    rec: 'TypExp'
    ide: str
    inner: 'TypExp'


@dataclass(frozen=True)
class TypReplace:
    inner: 'TypExp'
    transfer: Transfer


TypExp = Union[TypSimple, TypConst, TypList, TypArray, TypRecord, TypExpand,
               TypReplace]


# ---------------------------------------------------------------------------
# conditions (assertion layer)

@dataclass(frozen=True)
class CondExp:
    """A data expression used as a condition.  Canonically its root is
    never And/Or/Not: boolean connectives between conditions live at the
    condition level."""

    exp: DatExp


@dataclass(frozen=True)
class CondTT:
    pass


@dataclass(frozen=True)
class CondFF:
    pass


@dataclass(frozen=True)
class CondDefinedD:
    exp: DatExp


@dataclass(frozen=True)
class CondDefinedT:
    tex: TypExp


@dataclass(frozen=True)
class CondIs:
    ide: str
    tex: TypExp


@dataclass(frozen=True)
class CondConformant:
    ide: str
    exp: DatExp


@dataclass(frozen=True)
class CondAlg:
    """Algorithmic condition `ins @ con`: run the instruction, then test
    the condition in the terminal state."""

    ins: 'Ins'
    con: 'Condition'


@dataclass(frozen=True)
class CondAnd:
    left: 'Condition'
    right: 'Condition'


@dataclass(frozen=True)
class CondOr:
    left: 'Condition'
    right: 'Condition'


@dataclass(frozen=True)
class CondNot:
    arg: 'Condition'


@dataclass(frozen=True)
class CondForall:
    """Parsed but not executable."""

    ide: str
    con: 'Condition'


@dataclass(frozen=True)
class CondExists:
    """Parsed but not executable."""

    ide: str
    con: 'Condition'


Condition = Union[CondExp, CondTT, CondFF, CondDefinedD, CondDefinedT,
                  CondIs, CondConformant, CondAlg, CondAnd, CondOr, CondNot,
                  CondForall, CondExists]


# ---------------------------------------------------------------------------
# instructions (the specinstruction layer included)

@dataclass(frozen=True)
class Assign:
    ide: str
    exp: DatExp


@dataclass(frozen=True)
class ReplaceTr:
    """`yoke ide := transfer-expression`"""

    ide: str
    transfer: Transfer


@dataclass(frozen=True)
class Skip:
    pass


@dataclass(frozen=True)
class If:
    guard: DatExp
    then: 'Ins'
    other: 'Ins'


@dataclass(frozen=True)
class IfError:
    guard: DatExp
    handler: 'Ins'


@dataclass(frozen=True)
class While:
    guard: DatExp
    body: 'Ins'


@dataclass(frozen=True)
class Seq:
    first: 'Ins'
    second: 'Ins'


@dataclass(frozen=True)
class CallImp:
    ide: str
    val_args: tuple[str, ...]
    ref_args: tuple[str, ...]


@dataclass(frozen=True)
class Assertion:
    con: Condition


@dataclass(frozen=True)
class Decree:
    """Colloquial `begin-asr con ; sin end-asr`; removed by restoring."""

    con: Condition
    body: 'Ins'


@dataclass(frozen=True)
class Off:
    """Colloquial `off sin on` exclusion region; removed by restoring."""

    body: 'Ins'


Ins = Union[Assign, ReplaceTr, Skip, If, IfError, While, Seq, CallImp,
            Assertion, Decree, Off]


# ---------------------------------------------------------------------------
# declarations, preambles, programs

@dataclass(frozen=True)
class VarDec:
    ide: str
    tex: TypExp


@dataclass(frozen=True)
class TypDef:
    ide: str
    tex: TypExp


@dataclass(frozen=True)
class ProcDecl:
    ide: str
    val_params: tuple[tuple[str, TypExp], ...]
    ref_params: tuple[tuple[str, TypExp], ...]
    body: 'Program'


@dataclass(frozen=True)
class MultiProcDecl:
    components: tuple[ProcDecl, ...]


@dataclass(frozen=True)
class FunProcDecl:
    ide: str
    val_params: tuple[tuple[str, TypExp], ...]
    body: 'Program'
    export: DatExp
    export_tex: TypExp


@dataclass(frozen=True)
class SkipPre:
    pass


@dataclass(frozen=True)
class PreSeq:
    first: 'Preamble'
    second: 'Preamble'


Preamble = Union[VarDec, TypDef, ProcDecl, MultiProcDecl, FunProcDecl,
                 SkipPre, PreSeq]


@dataclass(frozen=True)
class Program:
    """preamble is None for a program built from a bare instruction."""

    preamble: Optional[Preamble]
    body: Ins
