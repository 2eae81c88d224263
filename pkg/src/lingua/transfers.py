"""Transfers (composite-to-composite functions) and the type algebra.

A transfer is stored as a constructor tree and evaluated on demand, so two
types can be compared structurally.  Yokes are the transfers whose results
are Boolean composites; a type is a body paired with a transfer, and its
clan is the set of composites carrying that body and satisfying the yoke.

Boolean connectives over transfers follow Kleene's logic: a conjunction is
false as soon as either side is false, even when the other side errs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import errors as E
from .values import (
    BOOLEAN_BODY, NUMBER_BODY, Composite, CompositeE, DEFAULT_LIMITS,
    ErrorWord, Limits, ListBody, ArrayBody, RecordBody, SimpleBody, Num,
    TRUE_C, FALSE_C, Body, bool_comp, cc_apply, is_true, num_comp,
    oversized, sort_of, word_comp,
)


# ---------------------------------------------------------------------------
# transfer constructor trees

@dataclass(frozen=True)
class ConstNum:
    num: Num


@dataclass(frozen=True)
class ConstWord:
    text: str


@dataclass(frozen=True)
class ConstBool:
    value: bool


@dataclass(frozen=True)
class Arith:
    op: str  # add | subtract | multiply | divide
    left: 'Transfer'
    right: 'Transfer'


@dataclass(frozen=True)
class Agg:
    op: str  # sum | max
    arg: 'Transfer'


@dataclass(frozen=True)
class Pred:
    op: str  # equal | less
    left: 'Transfer'
    right: 'Transfer'


@dataclass(frozen=True)
class Pred1:
    op: str  # small-nu | increasing-nu
    arg: 'Transfer'


@dataclass(frozen=True)
class AndT:
    left: 'Transfer'
    right: 'Transfer'


@dataclass(frozen=True)
class OrT:
    left: 'Transfer'
    right: 'Transfer'


@dataclass(frozen=True)
class NotT:
    arg: 'Transfer'


@dataclass(frozen=True)
class AllOnLi:
    arg: 'Transfer'


@dataclass(frozen=True)
class AllInAr:
    arg: 'Transfer'


@dataclass(frozen=True)
class GetLi:
    pass


@dataclass(frozen=True)
class GetAr:
    index: 'Transfer'


@dataclass(frozen=True)
class GetRe:
    ide: str


@dataclass(frozen=True)
class Pass:
    pass


@dataclass(frozen=True)
class SeqT:
    """Sequential composition: feed the input through `first`, then apply
    `then` to the result.  Produced only by the type constructors (record
    and list types select a component before applying the inherited yoke);
    it has no concrete syntax of its own."""

    first: 'Transfer'
    then: 'Transfer'


Transfer = Union[ConstNum, ConstWord, ConstBool, Arith, Agg, Pred, Pred1,
                 AndT, OrT, NotT, AllOnLi, AllInAr, GetLi, GetAr, GetRe,
                 Pass, SeqT]

TT = ConstBool(True)
FF = ConstBool(False)

# the small-number interval
SMALL_NU_LO = Num.from_int(-9999)
SMALL_NU_HI = Num.from_int(9999)


# ---------------------------------------------------------------------------
# evaluation

def eval_transfer(t: Transfer, com: CompositeE, limits: Limits = DEFAULT_LIMITS) -> CompositeE:
    """Total evaluation; every transfer is transparent for error inputs."""
    if isinstance(com, ErrorWord):
        return com
    match t:
        case ConstNum(num):
            return num_comp(num)
        case ConstWord(text):
            return word_comp(text)
        case ConstBool(value):
            return bool_comp(value)
        case Arith(op, left, right):
            return cc_apply(op, [eval_transfer(left, com, limits),
                                 eval_transfer(right, com, limits)], limits)
        case Pred(op, left, right):
            return cc_apply(op, [eval_transfer(left, com, limits),
                                 eval_transfer(right, com, limits)], limits)
        case Agg(op, arg):
            return _eval_agg(op, eval_transfer(arg, com, limits), limits)
        case Pred1(op, arg):
            return _eval_pred1(op, eval_transfer(arg, com, limits))
        case AndT(left, right):
            c1 = eval_transfer(left, com, limits)
            c2 = eval_transfer(right, com, limits)
            if c1 == FALSE_C or c2 == FALSE_C:
                return FALSE_C
            for c in (c1, c2):
                if isinstance(c, ErrorWord):
                    return c
            for c in (c1, c2):
                if c.body != BOOLEAN_BODY:
                    return ErrorWord(E.BOOLEAN_EXPECTED)
            return TRUE_C
        case OrT(left, right):
            # De Morgan's law by construction
            return eval_transfer(NotT(AndT(NotT(left), NotT(right))), com, limits)
        case NotT(arg):
            c = eval_transfer(arg, com, limits)
            if isinstance(c, ErrorWord):
                return c
            if c.body != BOOLEAN_BODY:
                return ErrorWord(E.BOOLEAN_EXPECTED)
            return bool_comp(not c.data.value)
        case AllOnLi(arg):
            return _eval_all(arg, com, 'L', limits)
        case AllInAr(arg):
            return _eval_all(arg, com, 'A', limits)
        case GetLi():
            return cc_apply('top-li', [com], limits)
        case GetAr(index):
            return cc_apply('get-from-ar', [com, eval_transfer(index, com, limits)], limits)
        case GetRe(ide):
            return cc_apply('get-from-re', [com, ide], limits)
        case Pass():
            return com
        case SeqT(first, then):
            return eval_transfer(then, eval_transfer(first, com, limits), limits)
    raise TypeError(f'not a transfer: {t!r}')


def _eval_all(arg: Transfer, com: Composite, want_sort: str, limits: Limits) -> CompositeE:
    if sort_of(com) != want_sort:
        word = E.LIST_EXPECTED if want_sort == 'L' else E.ARRAY_EXPECTED
        return ErrorWord(word)
    inner = com.body.inner
    results = [eval_transfer(arg, Composite(item, inner), limits)
               for item in com.data.items]
    for c in results:
        if isinstance(c, ErrorWord):
            return c
    # a non-Boolean element result counts as not-satisfied, not as an error
    return bool_comp(all(c == TRUE_C for c in results))


def _number_list(c: CompositeE) -> Union[list[Num], ErrorWord]:
    if sort_of(c) != 'L':
        return ErrorWord(E.LIST_EXPECTED)
    if c.body.inner != NUMBER_BODY:
        return ErrorWord(E.NUMBER_EXPECTED)
    if not c.data.items:
        return ErrorWord(E.EMPTY_LIST)
    return list(c.data.items)


def _eval_agg(op: str, c: CompositeE, limits: Limits) -> CompositeE:
    if isinstance(c, ErrorWord):
        return c
    nums = _number_list(c)
    if isinstance(nums, ErrorWord):
        return nums
    if op == 'sum':
        total = Num.from_int(0)
        for n in nums:
            total = total.add(n)
    else:
        total = nums[0]
        for n in nums[1:]:
            if total.lt(n):
                total = n
    result = num_comp(total.truncated(limits.max_frac_digits))
    if oversized(result, limits):
        return ErrorWord(E.OVERLOAD)
    return result


def _eval_pred1(op: str, c: CompositeE) -> CompositeE:
    if isinstance(c, ErrorWord):
        return c
    if op == 'small-nu':
        if sort_of(c) != 'number':
            return ErrorWord(E.NUMBER_EXPECTED)
        n = c.data
        return bool_comp(SMALL_NU_LO.le(n) and n.le(SMALL_NU_HI))
    nums = _number_list(c)  # increasing-nu
    if isinstance(nums, ErrorWord):
        return nums
    return bool_comp(all(a.lt(b) for a, b in zip(nums, nums[1:])))


def clan_tr_member(t: Transfer, com: Composite, limits: Limits = DEFAULT_LIMITS) -> bool:
    return is_true(eval_transfer(t, com, limits))


# ---------------------------------------------------------------------------
# types

@dataclass(frozen=True)
class Type:
    body: Body
    transfer: Transfer


TypeE = Union[Type, ErrorWord]


def clan_ty_member(ty: Type, com: Composite, limits: Limits = DEFAULT_LIMITS) -> bool:
    return com.body == ty.body and clan_tr_member(ty.transfer, com, limits)


def simple_type(tag: str) -> Type:
    return Type(SimpleBody(tag), TT)


def yc_apply(op: str, *args) -> TypeE:
    """Type constructors; argument errors propagate first."""
    for a in args:
        if isinstance(a, ErrorWord):
            return a
    match op, *args:
        case ('create-li', Type(body, tra)):
            return Type(ListBody(body), AllOnLi(tra))
        case ('create-ar', Type(body, tra)):
            return Type(ArrayBody(body), AllInAr(tra))
        case ('create-re', str(ide), Type(body, tra)):
            return Type(RecordBody({ide: body}), SeqT(GetRe(ide), tra))
        case ('put-to-re', Type(body_r, tra_r), str(ide), Type(body_n, tra_n)):
            if not isinstance(body_r, RecordBody):
                return ErrorWord(E.RECORD_EXPECTED)
            if ide in body_r.fields:
                return ErrorWord(E.ATTRIBUTE_NOT_FREE)
            new_body = RecordBody({**body_r.fields, ide: body_n})
            return Type(new_body, AndT(tra_r, SeqT(GetRe(ide), tra_n)))
        case ('cut-from-re', Type(body, tra), str(ide)):
            if not isinstance(body, RecordBody):
                return ErrorWord(E.RECORD_EXPECTED)
            if ide not in body.fields:
                return ErrorWord(E.UNKNOWN_ATTRIBUTE)
            return Type(RecordBody({k: v for k, v in body.fields.items() if k != ide}), tra)
        case ('replace-ty-tr', Type(body, _), new_tra):
            return Type(body, new_tra)
    raise ValueError(f'unknown type constructor: {op}')
