"""Recursive-descent parser for programs, expressions, transfers, types,
conditions and the assertion layer.

The grammar accepted here is the colloquial superset: every concrete text
parses, and so do the colloquialisms (omitted parentheses with the usual
priorities, grouped declarations and formal parameters, array and record
literals, selector sugar, `>`/`>=`/`!=` comparisons, `with`-yokes,
assertion decrees).  Colloquialisms that are pure sugar are expanded into
core nodes during parsing; the decree/off nodes survive parsing and are
unfolded by the restoring transformation (see `lingua.restore`).

Expression priorities, loosest first: or, and, not, comparisons, additive
(+ - glue), multiplicative (* /).  Ties associate to the left.  Semicolon
sequences associate to the right.
"""

from __future__ import annotations

from typing import Callable, Optional

from . import ast as A
from . import transfers as T
from .lexer import KEYWORDS, ParseError, Token, tokenize
from .values import DEFAULT_LIMITS, Limits, Num

_DECL_STARTERS = ('let', 'set', 'proc', 'begin-multiproc', 'fun')
_CMP_OPS = {'=': 'equal', '<': 'less', '<=': 'leq'}
_SWAPPED_OPS = {'>': 'less', '>=': 'leq'}
_ADD_OPS = {'+': 'add', '-': 'subtract'}
_MUL_OPS = {'*': 'multiply', '/': 'divide'}


class Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    # -- token plumbing ----------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind != 'eof':
            self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind in ('keyword', 'punct') and tok.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.next()
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if not self.at(text):
            raise self.error(f'expected {text!r}, found {self._describe(tok)}')
        return self.next()

    def expect_ident(self) -> str:
        tok = self.peek()
        if tok.kind == 'keyword':
            raise self.error(f'keyword {tok.text!r} cannot be used as an identifier')
        if tok.kind != 'ident':
            raise self.error(f'expected an identifier, found {self._describe(tok)}')
        self.next()
        return tok.text

    def error(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(tok.line, tok.col, message)

    @staticmethod
    def _describe(tok: Token) -> str:
        return 'end of input' if tok.kind == 'eof' else repr(tok.text)

    # -- data expressions --------------------------------------------------

    def parse_dat_exp(self) -> A.DatExp:
        return self._parse_or()

    def _parse_or(self) -> A.DatExp:
        e = self._parse_and()
        while self.accept('or'):
            e = A.Or(e, self._parse_and())
        return e

    def _parse_and(self) -> A.DatExp:
        e = self._parse_not()
        while self.accept('and'):
            e = A.And(e, self._parse_not())
        return e

    def _parse_not(self) -> A.DatExp:
        if self.accept('not'):
            return A.Not(self._parse_not())
        return self._parse_cmp()

    def _parse_cmp(self) -> A.DatExp:
        e = self._parse_add()
        while True:
            tok = self.peek()
            if tok.kind == 'punct' and tok.text in _CMP_OPS:
                self.next()
                e = A.Cmp(_CMP_OPS[tok.text], e, self._parse_add())
            elif tok.kind == 'punct' and tok.text in _SWAPPED_OPS:
                self.next()
                e = A.Cmp(_SWAPPED_OPS[tok.text], self._parse_add(), e)
            elif tok.kind == 'punct' and tok.text == '!=':
                self.next()
                e = A.Not(A.Cmp('equal', e, self._parse_add()))
            else:
                return e

    def _parse_add(self) -> A.DatExp:
        e = self._parse_mul()
        while True:
            tok = self.peek()
            if tok.kind == 'punct' and tok.text in _ADD_OPS:
                self.next()
                e = A.ArithE(_ADD_OPS[tok.text], e, self._parse_mul())
            elif self.accept('glue'):
                e = A.Glue(e, self._parse_mul())
            else:
                return e

    def _parse_mul(self) -> A.DatExp:
        e = self._parse_postfix()
        while True:
            tok = self.peek()
            if tok.kind == 'punct' and tok.text in _MUL_OPS:
                self.next()
                e = A.ArithE(_MUL_OPS[tok.text], e, self._parse_postfix())
            else:
                return e

    def _parse_postfix(self) -> A.DatExp:
        e = self._parse_primary()
        while self.at('.'):
            self.next()
            if self.accept('['):
                index = self.parse_dat_exp()
                self.expect(']')
                e = A.ArrGet(e, index)
            elif self.accept('('):
                ide = self.expect_ident()
                self.expect(')')
                e = A.RecGet(e, ide)
            else:
                raise self.error("expected '[' or '(' after selector dot")
        return e

    def _parse_primary(self) -> A.DatExp:
        tok = self.peek()
        if tok.kind == 'number':
            self.next()
            return A.NumLit(Num.from_text(tok.text))
        if tok.kind == 'word':
            self.next()
            return A.WordLit(tok.text)
        if tok.kind == 'punct' and tok.text == '-' and self.peek(1).kind == 'number':
            self.next()
            num_tok = self.next()
            return A.NumLit(Num.from_text('-' + num_tok.text))
        if tok.kind == 'ident':
            self.next()
            if self.at('('):
                return A.FunCall(tok.text, self._parse_call_args())
            return A.Var(tok.text)
        if tok.kind == 'punct' and tok.text == '(':
            self.next()
            e = self.parse_dat_exp()
            self.expect(')')
            return e
        if tok.kind == 'keyword':
            return self._parse_keyword_exp(tok)
        raise self.error(f'expected an expression, found {self._describe(tok)}')

    def _parse_keyword_exp(self, tok: Token) -> A.DatExp:
        match tok.text:
            case 'true':
                self.next()
                return A.BoolLit(True)
            case 'false':
                self.next()
                return A.BoolLit(False)
            case 'list':
                self.next()
                item = self.parse_dat_exp()
                self.expect('ee')
                return A.ListCreate(item)
            case 'push':
                self.next()
                item = self.parse_dat_exp()
                self.expect('on')
                lst = self.parse_dat_exp()
                self.expect('ee')
                return A.ListPush(item, lst)
            case 'top':
                self.next()
                self.expect('(')
                lst = self.parse_dat_exp()
                self.expect(')')
                return A.ListTop(lst)
            case 'pop':
                self.next()
                self.expect('(')
                lst = self.parse_dat_exp()
                self.expect(')')
                return A.ListPop(lst)
            case 'array':
                self.next()
                if self.accept('['):
                    items = [self.parse_dat_exp()]
                    while self.accept(','):
                        items.append(self.parse_dat_exp())
                    self.expect(']')
                    e: A.DatExp = A.ArrCreate(items[0])
                    for item in items[1:]:
                        e = A.ArrPut(e, item)
                    return e
                item = self.parse_dat_exp()
                self.expect('ee')
                return A.ArrCreate(item)
            case 'add-to-arr':
                self.next()
                arr = self.parse_dat_exp()
                self.expect('new')
                item = self.parse_dat_exp()
                self.expect('ee')
                return A.ArrPut(arr, item)
            case 'change-arr':
                self.next()
                arr = self.parse_dat_exp()
                self.expect('at')
                index = self.parse_dat_exp()
                self.expect('by')
                item = self.parse_dat_exp()
                self.expect('ee')
                return A.ArrChange(arr, index, item)
            case 'arr':
                self.next()
                arr = self.parse_dat_exp()
                self.expect('at')
                index = self.parse_dat_exp()
                self.expect('ee')
                return A.ArrGet(arr, index)
            case 'record':
                self.next()
                ide = self.expect_ident()
                if self.accept('of-value'):
                    item = self.parse_dat_exp()
                    self.expect('ee')
                    return A.RecCreate(ide, item)
                self.expect('<=')
                fields = [(ide, self.parse_dat_exp())]
                while self.accept(','):
                    ide = self.expect_ident()
                    self.expect('<=')
                    fields.append((ide, self.parse_dat_exp()))
                self.expect('ee')
                e = A.RecCreate(*fields[0])
                for name, item in fields[1:]:
                    e = A.RecPut(name, item, e)
                return e
            case 'add-attr':
                self.next()
                ide = self.expect_ident()
                self.expect('of-value')
                item = self.parse_dat_exp()
                self.expect('to')
                rec = self.parse_dat_exp()
                self.expect('ee')
                return A.RecPut(ide, item, rec)
            case 'rec':
                self.next()
                rec = self.parse_dat_exp()
                self.expect('at')
                ide = self.expect_ident()
                self.expect('ee')
                return A.RecGet(rec, ide)
            case 'remove-attr':
                self.next()
                ide = self.expect_ident()
                self.expect('from')
                rec = self.parse_dat_exp()
                self.expect('ee')
                return A.RecCut(ide, rec)
            case 'change-rec':
                self.next()
                rec = self.parse_dat_exp()
                self.expect('at')
                ide = self.expect_ident()
                self.expect('by')
                item = self.parse_dat_exp()
                self.expect('ee')
                return A.RecChange(rec, ide, item)
            case 'if':
                self.next()
                guard = self.parse_dat_exp()
                self.expect('then')
                then = self.parse_dat_exp()
                self.expect('else')
                other = self.parse_dat_exp()
                self.expect('fi')
                return A.When(guard, then, other)
        raise self.error(f'expected an expression, found {self._describe(tok)}')

    def _parse_call_args(self) -> tuple[str, ...]:
        self.expect('(')
        if self.accept('empty-ap'):
            self.expect(')')
            return ()
        args = [self.expect_ident()]
        while self.accept(','):
            args.append(self.expect_ident())
        self.expect(')')
        return tuple(args)

    # -- transfer expressions ----------------------------------------------

    def parse_tra_exp(self) -> T.Transfer:
        return self._tra_or()

    def _tra_or(self) -> T.Transfer:
        t = self._tra_and()
        while self.accept('or'):
            t = T.OrT(t, self._tra_and())
        return t

    def _tra_and(self) -> T.Transfer:
        t = self._tra_not()
        while self.accept('and'):
            t = T.AndT(t, self._tra_not())
        return t

    def _tra_not(self) -> T.Transfer:
        if self.accept('not'):
            return T.NotT(self._tra_not())
        return self._tra_cmp()

    def _tra_cmp(self) -> T.Transfer:
        t = self._tra_add()
        while True:
            tok = self.peek()
            if tok.kind == 'punct' and tok.text == '=':
                self.next()
                t = T.Pred('equal', t, self._tra_add())
            elif tok.kind == 'punct' and tok.text == '<':
                self.next()
                t = T.Pred('less', t, self._tra_add())
            elif tok.kind == 'punct' and tok.text == '>':
                self.next()
                t = T.Pred('less', self._tra_add(), t)
            else:
                return t

    def _tra_add(self) -> T.Transfer:
        t = self._tra_mul()
        while True:
            tok = self.peek()
            if tok.kind == 'punct' and tok.text in _ADD_OPS:
                self.next()
                t = T.Arith(_ADD_OPS[tok.text], t, self._tra_mul())
            else:
                return t

    def _tra_mul(self) -> T.Transfer:
        t = self._tra_primary()
        while True:
            tok = self.peek()
            if tok.kind == 'punct' and tok.text in _MUL_OPS:
                self.next()
                t = T.Arith(_MUL_OPS[tok.text], t, self._tra_primary())
            else:
                return t

    def _tra_primary(self) -> T.Transfer:
        tok = self.peek()
        if tok.kind == 'number':
            self.next()
            return T.ConstNum(Num.from_text(tok.text))
        if tok.kind == 'punct' and tok.text == '-' and self.peek(1).kind == 'number':
            self.next()
            num_tok = self.next()
            return T.ConstNum(Num.from_text('-' + num_tok.text))
        if tok.kind == 'word':
            self.next()
            return T.ConstWord(tok.text)
        if tok.kind == 'punct' and tok.text == '(':
            self.next()
            t = self.parse_tra_exp()
            self.expect(')')
            return t
        match tok.text if tok.kind == 'keyword' else None:
            case 'true':
                self.next()
                return T.ConstBool(True)
            case 'false':
                self.next()
                return T.ConstBool(False)
            case 'sum' | 'max' as op:
                self.next()
                self.expect('(')
                arg = self.parse_tra_exp()
                self.expect(')')
                return T.Agg(op, arg)
            case 'small-number':
                self.next()
                self.expect('(')
                arg = self.parse_tra_exp()
                self.expect(')')
                return T.Pred1('small-nu', arg)
            case 'increasing':
                self.next()
                self.expect('(')
                arg = self.parse_tra_exp()
                self.expect(')')
                return T.Pred1('increasing-nu', arg)
            case 'all-list':
                self.next()
                arg = self.parse_tra_exp()
                self.expect('ee')
                return T.AllOnLi(arg)
            case 'all-array':
                self.next()
                arg = self.parse_tra_exp()
                self.expect('ee')
                return T.AllInAr(arg)
            case 'top':
                self.next()
                return T.GetLi()
            case 'array':
                self.next()
                self.expect('[')
                index = self.parse_tra_exp()
                self.expect(']')
                return T.GetAr(index)
            case 'record':
                self.next()
                self.expect('.')
                return T.GetRe(self.expect_ident())
            case 'value':
                self.next()
                return T.Pass()
        raise self.error(f'expected a transfer expression, found {self._describe(tok)}')

    # -- type expressions ----------------------------------------------------

    def parse_typ_exp(self) -> A.TypExp:
        t = self._typ_primary()
        while self.accept('with'):
            t = A.TypReplace(t, self.parse_tra_exp())
        return t

    def _typ_primary(self) -> A.TypExp:
        tok = self.peek()
        if tok.kind == 'ident':
            self.next()
            return A.TypConst(tok.text)
        match tok.text if tok.kind == 'keyword' else None:
            case 'boolean':
                self.next()
                return A.TypSimple('Boolean')
            case 'number':
                self.next()
                return A.TypSimple('number')
            case 'word':
                self.next()
                return A.TypSimple('word')
            case 'list-type':
                self.next()
                inner = self.parse_typ_exp()
                self.expect('ee')
                return A.TypList(inner)
            case 'array-type':
                self.next()
                inner = self.parse_typ_exp()
                self.expect('ee')
                return A.TypArray(inner)
            case 'record-type':
                self.next()
                fields: list[tuple[str, A.TypExp]] = []
                while True:
                    group = [self.expect_ident()]
                    while self.accept(','):
                        group.append(self.expect_ident())
                    self.expect('as')
                    tex = self.parse_typ_exp()
                    fields.extend((name, tex) for name in group)
                    if not self.accept(','):
                        break
                self.expect('ee')
                t: A.TypExp = A.TypRecord(*fields[0])
                for name, tex in fields[1:]:
                    t = A.TypExpand(t, name, tex)
                return t
            case 'expand-record-type':
                self.next()
                rec = self.parse_typ_exp()
                self.expect('at')
                ide = self.expect_ident()
                self.expect('by')
                inner = self.parse_typ_exp()
                self.expect('ee')
                return A.TypExpand(rec, ide, inner)
            case 'replace-transfer-in':
                self.next()
                inner = self.parse_typ_exp()
                self.expect('by')
                tra = self.parse_tra_exp()
                self.expect('ee')
                return A.TypReplace(inner, tra)
        raise self.error(f'expected a type expression, found {self._describe(tok)}')

    # -- record-type field group parsing caveat ------------------------------
    # Inside `record-type`, a group `a, b as T` expands to one field per name;
    # the expansion happens here so the AST carries only single-attribute and
    # expand constructors.

    # -- conditions ----------------------------------------------------------

    def parse_condition(self) -> A.Condition:
        return self._cond_or()

    def _cond_or(self) -> A.Condition:
        c = self._cond_and()
        while self.accept('or'):
            c = A.CondOr(c, self._cond_and())
        return c

    def _cond_and(self) -> A.Condition:
        c = self._cond_not()
        while self.accept('and'):
            c = A.CondAnd(c, self._cond_not())
        return c

    def _cond_not(self) -> A.Condition:
        if self.accept('not'):
            return A.CondNot(self._cond_not())
        return self._cond_atom()

    def _cond_atom(self) -> A.Condition:
        tok = self.peek()
        if tok.kind == 'keyword':
            if tok.text == 'TT':
                self.next()
                return A.CondTT()
            if tok.text == 'FF':
                self.next()
                return A.CondFF()
            if tok.text == 'defined-d':
                self.next()
                self.expect('(')
                exp = self.parse_dat_exp()
                self.expect(')')
                return A.CondDefinedD(exp)
            if tok.text == 'defined-t':
                self.next()
                self.expect('(')
                tex = self.parse_typ_exp()
                self.expect(')')
                return A.CondDefinedT(tex)
            if tok.text in ('forall', 'exists'):
                self.next()
                ide = self.expect_ident()
                self.expect('.')
                body = self._cond_atom()
                node = A.CondForall if tok.text == 'forall' else A.CondExists
                return node(ide, body)
        alg = self._try_algorithmic()
        if alg is not None:
            return alg
        if tok.kind == 'punct' and tok.text == '(':
            return self._cond_paren()
        e = self._parse_cmp()
        if isinstance(e, A.Var):
            if self.accept('is'):
                return A.CondIs(e.ide, self.parse_typ_exp())
            if self.accept('conformant-with'):
                return A.CondConformant(e.ide, self._parse_cmp())
        return A.CondExp(e)

    def _cond_paren(self) -> A.Condition:
        self.expect('(')
        c = self.parse_condition()
        self.expect(')')
        tok = self.peek()
        continues_expression = (
            tok.kind == 'punct'
            and tok.text in ('=', '<', '<=', '>', '>=', '!=', '+', '-', '*', '/', '.')
        ) or self.at('glue')
        if not continues_expression:
            return c
        e = self._cond_to_expr(c)
        e = self._continue_expression(e)
        return A.CondExp(e)

    def _cond_to_expr(self, c: A.Condition) -> A.DatExp:
        match c:
            case A.CondExp(exp):
                return exp
            case A.CondAnd(left, right):
                return A.And(self._cond_to_expr(left), self._cond_to_expr(right))
            case A.CondOr(left, right):
                return A.Or(self._cond_to_expr(left), self._cond_to_expr(right))
            case A.CondNot(arg):
                return A.Not(self._cond_to_expr(arg))
        raise self.error('this condition cannot be used as a data expression')

    def _continue_expression(self, e: A.DatExp) -> A.DatExp:
        # resume the expression tiers with a parenthesized left operand
        while self.at('.'):
            self.next()
            if self.accept('['):
                index = self.parse_dat_exp()
                self.expect(']')
                e = A.ArrGet(e, index)
            else:
                self.expect('(')
                ide = self.expect_ident()
                self.expect(')')
                e = A.RecGet(e, ide)
        while True:
            tok = self.peek()
            if tok.kind == 'punct' and tok.text in _MUL_OPS:
                self.next()
                e = A.ArithE(_MUL_OPS[tok.text], e, self._parse_postfix())
                continue
            if tok.kind == 'punct' and tok.text in _ADD_OPS:
                self.next()
                e = A.ArithE(_ADD_OPS[tok.text], e, self._parse_mul())
                continue
            if self.at('glue'):
                self.next()
                e = A.Glue(e, self._parse_mul())
                continue
            if tok.kind == 'punct' and tok.text in _CMP_OPS:
                self.next()
                e = A.Cmp(_CMP_OPS[tok.text], e, self._parse_add())
                continue
            if tok.kind == 'punct' and tok.text in _SWAPPED_OPS:
                self.next()
                e = A.Cmp(_SWAPPED_OPS[tok.text], self._parse_add(), e)
                continue
            if tok.kind == 'punct' and tok.text == '!=':
                self.next()
                e = A.Not(A.Cmp('equal', e, self._parse_add()))
                continue
            return e

    def _try_algorithmic(self) -> Optional[A.CondAlg]:
        saved = self.pos
        try:
            ins = self.parse_ins_seq(stops=('@',))
        except ParseError:
            self.pos = saved
            return None
        if not self.at('@'):
            self.pos = saved
            return None
        self.next()
        return A.CondAlg(ins, self.parse_condition())

    # -- instructions --------------------------------------------------------

    def parse_ins_seq(self, stops: tuple[str, ...]) -> A.Ins:
        items = [self._parse_ins_single()]
        while self.at(';'):
            after = self.peek(1)
            if after.kind in ('keyword', 'punct') and after.text in stops:
                break
            self.next()
            items.append(self._parse_ins_single())
        ins = items[-1]
        for item in reversed(items[:-1]):
            ins = A.Seq(item, ins)
        return ins

    def _parse_ins_single(self) -> A.Ins:
        tok = self.peek()
        if tok.kind == 'ident':
            self.next()
            self.expect(':=')
            return A.Assign(tok.text, self.parse_dat_exp())
        match tok.text if tok.kind == 'keyword' else None:
            case 'skip':
                self.next()
                return A.Skip()
            case 'yoke':
                self.next()
                ide = self.expect_ident()
                self.expect(':=')
                return A.ReplaceTr(ide, self.parse_tra_exp())
            case 'if':
                self.next()
                guard = self.parse_dat_exp()
                self.expect('then')
                then = self.parse_ins_seq(stops=('else', 'fi'))
                other: A.Ins = A.Skip()
                if self.accept('else'):
                    other = self.parse_ins_seq(stops=('fi',))
                self.expect('fi')
                return A.If(guard, then, other)
            case 'if-error':
                self.next()
                guard = self.parse_dat_exp()
                self.expect('then')
                handler = self.parse_ins_seq(stops=('fi',))
                self.expect('fi')
                return A.IfError(guard, handler)
            case 'while':
                self.next()
                guard = self.parse_dat_exp()
                self.expect('do')
                body = self.parse_ins_seq(stops=('od',))
                self.expect('od')
                return A.While(guard, body)
            case 'call':
                self.next()
                ide = self.expect_ident()
                val_args, ref_args = self._parse_call_sections()
                return A.CallImp(ide, val_args, ref_args)
            case 'asr':
                self.next()
                con = self.parse_condition()
                self.expect('rsa')
                return A.Assertion(con)
            case 'begin-asr':
                self.next()
                con = self.parse_condition()
                if not self.accept(';'):
                    # `begin-asr con off ... on end-asr` omits the semicolon
                    if not self.at('off'):
                        raise self.error("expected ';' after the decree condition")
                body = self.parse_ins_seq(stops=('end-asr',))
                self.expect('end-asr')
                return A.Decree(con, body)
            case 'off':
                self.next()
                body = self.parse_ins_seq(stops=('on',))
                self.expect('on')
                return A.Off(body)
        raise self.error(f'expected an instruction, found {self._describe(tok)}')

    def _parse_call_sections(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        self.expect('(')
        val_args: tuple[str, ...] = ()
        ref_args: tuple[str, ...] = ()
        if self.accept('val'):
            val_args = self._parse_actual_params()
        if self.accept('ref'):
            ref_args = self._parse_actual_params()
        self.expect(')')
        return val_args, ref_args

    def _parse_actual_params(self) -> tuple[str, ...]:
        if self.accept('empty-ap'):
            return ()
        args = [self.expect_ident()]
        while self.at(',') and self.peek(1).kind == 'ident':
            self.next()
            args.append(self.expect_ident())
        return tuple(args)

    # -- declarations, preambles, programs ------------------------------------

    def _parse_formal_params(self) -> tuple[tuple[str, A.TypExp], ...]:
        if self.accept('empty-fp'):
            return ()
        params: list[tuple[str, A.TypExp]] = []
        while True:
            group = [self.expect_ident()]
            while self.accept(','):
                group.append(self.expect_ident())
            self.expect('as')
            tex = self.parse_typ_exp()
            params.extend((name, tex) for name in group)
            if not self.accept(','):
                break
        return tuple(params)

    def _parse_proc_decl(self) -> A.ProcDecl:
        self.expect('proc')
        ide = self.expect_ident()
        self.expect('(')
        val_params: tuple[tuple[str, A.TypExp], ...] = ()
        ref_params: tuple[tuple[str, A.TypExp], ...] = ()
        if self.accept('val'):
            val_params = self._parse_formal_params()
        if self.accept('ref'):
            ref_params = self._parse_formal_params()
        self.expect(')')
        body = self._parse_program_body(stops=('endproc',))
        self.expect('endproc')
        return A.ProcDecl(ide, val_params, ref_params, body)

    def _parse_element(self) -> list[tuple[str, object]]:
        """One semicolon-separated program element; grouped declarations
        expand to several."""
        tok = self.peek()
        match tok.text if tok.kind == 'keyword' else None:
            case 'let':
                self.next()
                names = [self.expect_ident()]
                while self.accept(','):
                    names.append(self.expect_ident())
                self.expect('be')
                tex = self.parse_typ_exp()
                self.expect('tel')
                return [('pre', A.VarDec(name, tex)) for name in names]
            case 'set':
                self.next()
                names = [self.expect_ident()]
                while self.accept(','):
                    names.append(self.expect_ident())
                self.expect('as')
                tex = self.parse_typ_exp()
                self.expect('tes')
                return [('pre', A.TypDef(name, tex)) for name in names]
            case 'proc':
                return [('pre', self._parse_proc_decl())]
            case 'begin-multiproc':
                self.next()
                components = [self._parse_proc_decl()]
                while self.at('proc'):
                    components.append(self._parse_proc_decl())
                self.expect('end-multiproc')
                return [('pre', A.MultiProcDecl(tuple(components)))]
            case 'fun':
                self.next()
                ide = self.expect_ident()
                self.expect('(')
                params = self._parse_formal_params()
                self.expect(')')
                body = self._parse_program_body(stops=('return',))
                self.expect('return')
                export = self.parse_dat_exp()
                self.expect('as')
                tex = self.parse_typ_exp()
                self.expect('endfun')
                return [('pre', A.FunProcDecl(ide, params, body, export, tex))]
        return [('ins', self._parse_ins_single())]

    def _parse_program_body(self, stops: tuple[str, ...]) -> A.Program:
        elements: list[tuple[str, object]] = []
        while True:
            elements.extend(self._parse_element())
            if not self.accept(';'):
                break
        tok = self.peek()
        if not (tok.kind in ('keyword', 'punct') and tok.text in stops):
            raise self.error(f"expected one of {', '.join(stops)}")
        last_decl = max((i for i, (kind, _) in enumerate(elements) if kind == 'pre'),
                        default=-1)
        pre_items: list[A.Preamble] = []
        for kind, node in elements[:last_decl + 1]:
            if kind == 'pre':
                pre_items.append(node)
            elif isinstance(node, A.Skip):
                pre_items.append(A.SkipPre())
            else:
                raise self.error('instructions must follow all declarations')
        ins_items = [node for _, node in elements[last_decl + 1:]]
        preamble: Optional[A.Preamble] = None
        if pre_items:
            preamble = pre_items[-1]
            for item in reversed(pre_items[:-1]):
                preamble = A.PreSeq(item, preamble)
        body: A.Ins = A.Skip() if not ins_items else ins_items[-1]
        for item in reversed(ins_items[:-1]):
            body = A.Seq(item, body)
        return A.Program(preamble, body)

    def parse_program_file(self) -> A.Program:
        self.expect('begin-program')
        program = self._parse_program_body(stops=('end-program',))
        self.expect('end-program')
        if self.peek().kind != 'eof':
            raise self.error('text after end-program')
        return program


def parse_program(text: str, limits: Limits = DEFAULT_LIMITS) -> A.Program:
    return Parser(tokenize(text, limits)).parse_program_file()


def _parse_entire(text: str, method: Callable, limits: Limits):
    parser = Parser(tokenize(text, limits))
    node = method(parser)
    if parser.peek().kind != 'eof':
        raise parser.error('unparsed trailing text')
    return node


def parse_expression(text: str, limits: Limits = DEFAULT_LIMITS) -> A.DatExp:
    return _parse_entire(text, Parser.parse_dat_exp, limits)


def parse_transfer(text: str, limits: Limits = DEFAULT_LIMITS) -> T.Transfer:
    return _parse_entire(text, Parser.parse_tra_exp, limits)


def parse_type(text: str, limits: Limits = DEFAULT_LIMITS) -> A.TypExp:
    return _parse_entire(text, Parser.parse_typ_exp, limits)


def parse_instruction(text: str, limits: Limits = DEFAULT_LIMITS) -> A.Ins:
    return _parse_entire(text, lambda p: p.parse_ins_seq(stops=()), limits)
