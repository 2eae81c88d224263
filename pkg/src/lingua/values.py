"""Data, bodies and composites: the value universe of the interpreter.

Every value a program computes is a composite, i.e. a data paired with its
body (the structural descriptor: number, word, list-of, ...).  Composite
constructors are total functions; the partiality of the underlying data
operations surfaces as abstract error words ('division-by-zero', ...),
which are transparent: the first error among the arguments becomes the
result.  Boolean constructors are the exception and short-circuit on a
false first argument.

Numbers are exact decimals (integer coefficient plus fractional scale).
Arithmetic is exact, results are then truncated to the configured number
of fractional digits, and finally checked against the size limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from . import errors as E


@dataclass(frozen=True)
class ErrorWord:
    """An abstract error, e.g. ErrorWord('division-by-zero')."""

    word: str

    def __repr__(self) -> str:
        return f"ErrorWord({self.word!r})"


def is_err(x: object) -> bool:
    return isinstance(x, ErrorWord)


# ---------------------------------------------------------------------------
# numbers

@dataclass(frozen=True)
class Num:
    """Exact decimal: value = coeff / 10**scale, normalized (no trailing
    fractional zeros, scale >= 0, zero is (0, 0))."""

    coeff: int
    scale: int

    @staticmethod
    def normalized(coeff: int, scale: int) -> 'Num':
        if coeff == 0:
            return Num(0, 0)
        while scale > 0 and coeff % 10 == 0:
            coeff //= 10
            scale -= 1
        return Num(coeff, scale)

    @staticmethod
    def from_int(n: int) -> 'Num':
        return Num(n, 0)

    @staticmethod
    def from_text(text: str) -> 'Num':
        """Parse a decimal numeral like '-12.34'."""
        neg = text.startswith('-')
        if neg:
            text = text[1:]
        if '.' in text:
            int_part, frac_part = text.split('.', 1)
        else:
            int_part, frac_part = text, ''
        coeff = int((int_part or '0') + frac_part)
        return Num.normalized(-coeff if neg else coeff, len(frac_part))

    def int_digits(self) -> int:
        return len(str(abs(self.coeff) // 10 ** self.scale))

    def frac_digits(self) -> int:
        return self.scale

    def is_zero(self) -> bool:
        return self.coeff == 0

    def is_integral(self) -> bool:
        return self.scale == 0

    def to_int(self) -> int:
        if self.scale != 0:
            raise ValueError(f'{self} is not integral')
        return self.coeff

    def _aligned(self, other: 'Num') -> tuple[int, int, int]:
        scale = max(self.scale, other.scale)
        return (self.coeff * 10 ** (scale - self.scale),
                other.coeff * 10 ** (scale - other.scale),
                scale)

    def add(self, other: 'Num') -> 'Num':
        a, b, s = self._aligned(other)
        return Num.normalized(a + b, s)

    def sub(self, other: 'Num') -> 'Num':
        a, b, s = self._aligned(other)
        return Num.normalized(a - b, s)

    def mul(self, other: 'Num') -> 'Num':
        return Num.normalized(self.coeff * other.coeff, self.scale + other.scale)

    def div_truncated(self, other: 'Num', frac_digits: int) -> 'Num':
        """Exact quotient truncated toward zero to frac_digits fractional
        digits.  other must be nonzero."""
        num = self.coeff * 10 ** (other.scale + frac_digits)
        den = other.coeff * 10 ** self.scale
        q = abs(num) // abs(den)
        if (num < 0) != (den < 0):
            q = -q
        return Num.normalized(q, frac_digits)

    def truncated(self, frac_digits: int) -> 'Num':
        if self.scale <= frac_digits:
            return self
        drop = 10 ** (self.scale - frac_digits)
        q = abs(self.coeff) // drop
        return Num.normalized(-q if self.coeff < 0 else q, frac_digits)

    def _cmp_key(self, other: 'Num') -> tuple[int, int]:
        a, b, _ = self._aligned(other)
        return a, b

    def lt(self, other: 'Num') -> bool:
        a, b = self._cmp_key(other)
        return a < b

    def le(self, other: 'Num') -> bool:
        a, b = self._cmp_key(other)
        return a <= b

    def render(self) -> str:
        digits = str(abs(self.coeff)).rjust(self.scale + 1, '0')
        text = digits if self.scale == 0 else f'{digits[:-self.scale]}.{digits[-self.scale:]}'
        return f'-{text}' if self.coeff < 0 else text

    def __repr__(self) -> str:
        return f'Num({self.render()})'


# ---------------------------------------------------------------------------
# data

@dataclass(frozen=True)
class Bool:
    value: bool


@dataclass(frozen=True)
class Word:
    """Word text is stored without the delimiting apostrophes; gluing is
    therefore plain concatenation."""

    text: str


@dataclass(frozen=True)
class ListD:
    items: tuple['Data', ...]


@dataclass(frozen=True)
class ArrayD:
    """Reachable arrays always have the key set {1..n}; entry i lives at
    position i-1."""

    items: tuple['Data', ...]


@dataclass(frozen=True)
class RecordD:
    fields: Mapping[str, 'Data']


Data = Union[Bool, Num, Word, ListD, ArrayD, RecordD]


# ---------------------------------------------------------------------------
# bodies

@dataclass(frozen=True)
class SimpleBody:
    tag: str  # 'Boolean' | 'number' | 'word'


@dataclass(frozen=True)
class ListBody:
    inner: 'Body'


@dataclass(frozen=True)
class ArrayBody:
    inner: 'Body'


@dataclass(frozen=True)
class RecordBody:
    fields: Mapping[str, 'Body']


Body = Union[SimpleBody, ListBody, ArrayBody, RecordBody]

BOOLEAN_BODY = SimpleBody('Boolean')
NUMBER_BODY = SimpleBody('number')
WORD_BODY = SimpleBody('word')


@dataclass(frozen=True)
class Composite:
    """A well-structured pair: data belongs to the clan of body."""

    data: Data
    body: Body


CompositeE = Union[Composite, ErrorWord]

TRUE_C = Composite(Bool(True), BOOLEAN_BODY)
FALSE_C = Composite(Bool(False), BOOLEAN_BODY)


def bool_comp(value: bool) -> Composite:
    return TRUE_C if value else FALSE_C


def num_comp(num: Num) -> Composite:
    return Composite(num, NUMBER_BODY)


def word_comp(text: str) -> Composite:
    return Composite(Word(text), WORD_BODY)


def is_true(c: CompositeE) -> bool:
    return c == TRUE_C


def is_boolean_composite(c: CompositeE) -> bool:
    return isinstance(c, Composite) and c.body == BOOLEAN_BODY


# ---------------------------------------------------------------------------
# limits

@dataclass(frozen=True)
class Limits:
    """Size limits of the current implementation; all fields >= 1."""

    max_int_digits: int = 30
    max_frac_digits: int = 10
    max_word_len: int = 1000
    max_collection: int = 10000
    max_depth: int = 50
    max_ident_len: int = 80

    def __post_init__(self) -> None:
        for name, value in vars(self).items():
            if value < 1:
                raise ValueError(f'limit {name} must be >= 1, got {value}')


DEFAULT_LIMITS = Limits()


# ---------------------------------------------------------------------------
# structural inspection

def bod_of(d: Data) -> Body | None:
    """The unique body of d, or None when no unique body exists (mixed
    collections, or empty lists/arrays whose element body is unknowable)."""
    match d:
        case Bool():
            return BOOLEAN_BODY
        case Num():
            return NUMBER_BODY
        case Word():
            return WORD_BODY
        case ListD(items) | ArrayD(items):
            inner = [bod_of(item) for item in items]
            if not inner or any(b is None or b != inner[0] for b in inner):
                return None
            wrap = ListBody if isinstance(d, ListD) else ArrayBody
            return wrap(inner[0])
        case RecordD(fields):
            out = {}
            for name, item in fields.items():
                b = bod_of(item)
                if b is None:
                    return None
                out[name] = b
            return RecordBody(out)
    raise TypeError(f'not a data: {d!r}')


def well_structured(d: Data, b: Body) -> bool:
    """Membership of d in the clan of b (handles empty collections, whose
    element body is unconstrained)."""
    match d, b:
        case Bool(), SimpleBody('Boolean'):
            return True
        case Num(), SimpleBody('number'):
            return True
        case Word(), SimpleBody('word'):
            return True
        case ListD(items), ListBody(inner):
            return all(well_structured(item, inner) for item in items)
        case ArrayD(items), ArrayBody(inner):
            return all(well_structured(item, inner) for item in items)
        case RecordD(fields), RecordBody(body_fields):
            return (set(fields) == set(body_fields)
                    and all(well_structured(fields[k], body_fields[k]) for k in fields))
    return False


def sort_of(c: CompositeE) -> Union[str, ErrorWord]:
    """Errors map to themselves; otherwise the body sort tag."""
    if isinstance(c, ErrorWord):
        return c
    return sort_of_body(c.body)


def sort_of_body(b: Body) -> str:
    match b:
        case SimpleBody(tag):
            return tag
        case ListBody():
            return 'L'
        case ArrayBody():
            return 'A'
        case RecordBody():
            return 'R'
    raise TypeError(f'not a body: {b!r}')


def round_data(d: Data, limits: Limits) -> Data:
    """Truncate numbers toward zero to the configured fractional digits;
    identity on every other data."""
    if isinstance(d, Num):
        return d.truncated(limits.max_frac_digits)
    return d


def data_depth(d: Data) -> int:
    match d:
        case ListD(items) | ArrayD(items):
            return 1 + max((data_depth(item) for item in items), default=0)
        case RecordD(fields):
            return 1 + max((data_depth(item) for item in fields.values()), default=0)
        case _:
            return 1


def oversized(c: Composite, limits: Limits) -> bool:
    """True iff any size limit is exceeded anywhere inside the data."""

    def walk(d: Data) -> bool:
        match d:
            case Num():
                return (d.int_digits() > limits.max_int_digits
                        or d.frac_digits() > limits.max_frac_digits)
            case Word(text):
                return len(text) > limits.max_word_len
            case Bool():
                return False
            case ListD(items) | ArrayD(items):
                return len(items) > limits.max_collection or any(walk(i) for i in items)
            case RecordD(fields):
                return (len(fields) > limits.max_collection
                        or any(walk(i) for i in fields.values()))
        raise TypeError(f'not a data: {d!r}')

    return data_depth(c.data) > limits.max_depth or walk(c.data)


# ---------------------------------------------------------------------------
# composite constructors

Arg = Union[CompositeE, str]  # str arguments are record attributes

_SIMPLE_TAGS = ('Boolean', 'number', 'word')


def _first_error(args: Sequence[Arg]) -> ErrorWord | None:
    for a in args:
        if isinstance(a, ErrorWord):
            return a
    return None


def cc_apply(op: str, args: Sequence[Arg], limits: Limits = DEFAULT_LIMITS) -> CompositeE:
    """Apply a non-Boolean composite constructor: propagate the first
    argument error, run the body-level checks, compute the data, round it
    and reject oversized results with 'overload'."""
    e = _first_error(args)
    if e is not None:
        return e
    result = _cc_data(op, args, limits)
    if isinstance(result, ErrorWord):
        return result
    data, body = result
    com = Composite(round_data(data, limits), body)
    if oversized(com, limits):
        return ErrorWord(E.OVERLOAD)
    return com


def _cc_data(op: str, args: Sequence[Arg], limits: Limits):
    match op:
        case 'equal':
            a, b = args
            if sort_of(a) not in _SIMPLE_TAGS or sort_of(b) not in _SIMPLE_TAGS:
                return ErrorWord(E.SIMPLE_DATA_EXPECTED)
            return Bool(a.data == b.data), BOOLEAN_BODY
        case 'less' | 'leq':
            a, b = args
            if sort_of(a) != 'number' or sort_of(b) != 'number':
                return ErrorWord(E.NUMBER_EXPECTED)
            holds = a.data.lt(b.data) if op == 'less' else a.data.le(b.data)
            return Bool(holds), BOOLEAN_BODY
        case 'add' | 'subtract' | 'multiply':
            a, b = args
            if sort_of(a) != 'number' or sort_of(b) != 'number':
                return ErrorWord(E.NUMBER_EXPECTED)
            num = {'add': Num.add, 'subtract': Num.sub, 'multiply': Num.mul}[op](a.data, b.data)
            return num, NUMBER_BODY
        case 'divide':
            a, b = args
            if sort_of(a) != 'number' or sort_of(b) != 'number':
                return ErrorWord(E.NUMBER_EXPECTED)
            if b.data.is_zero():
                return ErrorWord(E.DIVISION_BY_ZERO)
            return a.data.div_truncated(b.data, limits.max_frac_digits), NUMBER_BODY
        case 'glue':
            a, b = args
            if sort_of(a) != 'word' or sort_of(b) != 'word':
                return ErrorWord(E.WORD_EXPECTED)
            return Word(a.data.text + b.data.text), WORD_BODY
        case 'create-li':
            (a,) = args
            return ListD((a.data,)), ListBody(a.body)
        case 'push-li':
            elem, lst = args
            if sort_of(lst) != 'L':
                return ErrorWord(E.LIST_EXPECTED)
            if lst.body.inner != elem.body:
                return ErrorWord(E.INCONSISTENT_BODIES)
            return ListD(lst.data.items + (elem.data,)), lst.body
        case 'top-li':
            (lst,) = args
            if sort_of(lst) != 'L':
                return ErrorWord(E.LIST_EXPECTED)
            if not lst.data.items:
                return ErrorWord(E.EMPTY_LIST)
            return lst.data.items[-1], lst.body.inner
        case 'pop-li':
            # popping the empty list yields the empty list
            (lst,) = args
            if sort_of(lst) != 'L':
                return ErrorWord(E.LIST_EXPECTED)
            return ListD(lst.data.items[:-1]), lst.body
        case 'create-ar':
            (a,) = args
            return ArrayD((a.data,)), ArrayBody(a.body)
        case 'put-to-ar':
            arr, elem = args
            if sort_of(arr) != 'A':
                return ErrorWord(E.ARRAY_EXPECTED)
            if arr.body.inner != elem.body:
                return ErrorWord(E.INCONSISTENT_BODIES)
            return ArrayD(arr.data.items + (elem.data,)), arr.body
        case 'get-from-ar':
            arr, idx = args
            if sort_of(arr) != 'A':
                return ErrorWord(E.ARRAY_EXPECTED)
            if sort_of(idx) != 'number':
                return ErrorWord(E.NUMBER_EXPECTED)
            i = _array_index(arr.data, idx.data)
            if i is None:
                return ErrorWord(E.ARRAY_INDEX_UNDEFINED)
            return arr.data.items[i], arr.body.inner
        case 'change-in-ar':
            arr, idx, elem = args
            if sort_of(arr) != 'A':
                return ErrorWord(E.ARRAY_EXPECTED)
            if sort_of(idx) != 'number':
                return ErrorWord(E.NUMBER_EXPECTED)
            if arr.body.inner != elem.body:
                return ErrorWord(E.INCONSISTENT_BODIES)
            i = _array_index(arr.data, idx.data)
            if i is None:
                return ErrorWord(E.ARRAY_INDEX_UNDEFINED)
            items = arr.data.items[:i] + (elem.data,) + arr.data.items[i + 1:]
            return ArrayD(items), arr.body
        case 'create-re':
            ide, a = args
            return RecordD({ide: a.data}), RecordBody({ide: a.body})
        case 'put-to-re':
            ide, a, rec = args
            if sort_of(rec) != 'R':
                return ErrorWord(E.RECORD_EXPECTED)
            if ide in rec.body.fields:
                return ErrorWord(E.ATTRIBUTE_NOT_FREE)
            return (RecordD({**rec.data.fields, ide: a.data}),
                    RecordBody({**rec.body.fields, ide: a.body}))
        case 'get-from-re':
            rec, ide = args
            if sort_of(rec) != 'R':
                return ErrorWord(E.RECORD_EXPECTED)
            if ide not in rec.body.fields:
                return ErrorWord(E.UNKNOWN_ATTRIBUTE)
            return rec.data.fields[ide], rec.body.fields[ide]
        case 'cut-from-re':
            ide, rec = args
            if sort_of(rec) != 'R':
                return ErrorWord(E.RECORD_EXPECTED)
            if ide not in rec.body.fields:
                return ErrorWord(E.UNKNOWN_ATTRIBUTE)
            data_fields = {k: v for k, v in rec.data.fields.items() if k != ide}
            body_fields = {k: v for k, v in rec.body.fields.items() if k != ide}
            return RecordD(data_fields), RecordBody(body_fields)
        case 'change-in-re':
            rec, ide, a = args
            if sort_of(rec) != 'R':
                return ErrorWord(E.RECORD_EXPECTED)
            if ide not in rec.body.fields:
                return ErrorWord(E.UNKNOWN_ATTRIBUTE)
            if rec.body.fields[ide] != a.body:
                return ErrorWord(E.INCONSISTENT_BODIES)
            return RecordD({**rec.data.fields, ide: a.data}), rec.body
    raise ValueError(f'unknown composite constructor: {op}')


def _array_index(arr: ArrayD, num: Num) -> int | None:
    if not num.is_integral():
        return None
    i = num.to_int()
    if not 1 <= i <= len(arr.items):
        return None
    return i - 1


# Boolean composite constructors: lazy on the left argument, so not
# transparent for errors in the second position.

def and_c(a: CompositeE, b: CompositeE) -> CompositeE:
    if isinstance(a, ErrorWord):
        return a
    if a.body != BOOLEAN_BODY:
        return ErrorWord(E.BOOLEAN_EXPECTED)
    if a.data == Bool(False):
        return FALSE_C
    if isinstance(b, ErrorWord):
        return b
    if b.body != BOOLEAN_BODY:
        return ErrorWord(E.BOOLEAN_EXPECTED)
    return bool_comp(b.data.value)


def not_c(a: CompositeE) -> CompositeE:
    if isinstance(a, ErrorWord):
        return a
    if a.body != BOOLEAN_BODY:
        return ErrorWord(E.BOOLEAN_EXPECTED)
    return bool_comp(not a.data.value)


def or_c(a: CompositeE, b: CompositeE) -> CompositeE:
    # defined through De Morgan's law
    return not_c(and_c(not_c(a), not_c(b)))


# ---------------------------------------------------------------------------
# rendering (used by the CLI state dump)

def render_data(d: Data) -> str:
    match d:
        case Bool(value):
            return 'true' if value else 'false'
        case Num():
            return d.render()
        case Word(text):
            return f"'{text}'"
        case ListD(items):
            return 'list(' + ', '.join(render_data(i) for i in items) + ')'
        case ArrayD(items):
            return 'array(' + ', '.join(render_data(i) for i in items) + ')'
        case RecordD(fields):
            inner = ', '.join(f'{k}: {render_data(v)}' for k, v in sorted(fields.items()))
            return 'record(' + inner + ')'
    raise TypeError(f'not a data: {d!r}')


def render_body(b: Body) -> str:
    match b:
        case SimpleBody(tag):
            return {'Boolean': 'boolean', 'number': 'number', 'word': 'word'}[tag]
        case ListBody(inner):
            return f'list-of {render_body(inner)}'
        case ArrayBody(inner):
            return f'array-of {render_body(inner)}'
        case RecordBody(fields):
            inner = ', '.join(f'{k}: {render_body(v)}' for k, v in sorted(fields.items()))
            return 'record(' + inner + ')'
    raise TypeError(f'not a body: {b!r}')
