"""Deterministic pretty-printer to canonical concrete syntax.

One construct per line, two-space indentation, expressions fully
parenthesized, so the output reparses unambiguously:
parse(pretty(ast)) is structurally equal to ast.
"""

from __future__ import annotations

from . import ast as A
from . import transfers as T

INDENT = '  '

_CMP_SYMBOL = {'equal': '=', 'less': '<', 'leq': '<='}
_ARITH_SYMBOL = {'add': '+', 'subtract': '-', 'multiply': '*', 'divide': '/'}


def render_exp(e: A.DatExp) -> str:
    match e:
        case A.BoolLit(value):
            return 'true' if value else 'false'
        case A.NumLit(num):
            return num.render()
        case A.WordLit(text):
            return f"'{text}'"
        case A.Var(ide):
            return ide
        case A.And(left, right):
            return f'({render_exp(left)} and {render_exp(right)})'
        case A.Or(left, right):
            return f'({render_exp(left)} or {render_exp(right)})'
        case A.Not(arg):
            return f'(not {render_exp(arg)})'
        case A.Cmp(op, left, right):
            return f'({render_exp(left)} {_CMP_SYMBOL[op]} {render_exp(right)})'
        case A.ArithE(op, left, right):
            return f'({render_exp(left)} {_ARITH_SYMBOL[op]} {render_exp(right)})'
        case A.Glue(left, right):
            return f'({render_exp(left)} glue {render_exp(right)})'
        case A.ListCreate(item):
            return f'list {render_exp(item)} ee'
        case A.ListPush(item, lst):
            return f'push {render_exp(item)} on {render_exp(lst)} ee'
        case A.ListTop(lst):
            return f'top({render_exp(lst)})'
        case A.ListPop(lst):
            return f'pop({render_exp(lst)})'
        case A.ArrCreate(item):
            return f'array {render_exp(item)} ee'
        case A.ArrPut(arr, item):
            return f'add-to-arr {render_exp(arr)} new {render_exp(item)} ee'
        case A.ArrChange(arr, index, item):
            return (f'change-arr {render_exp(arr)} at {render_exp(index)} '
                    f'by {render_exp(item)} ee')
        case A.ArrGet(arr, index):
            return f'arr {render_exp(arr)} at {render_exp(index)} ee'
        case A.RecCreate(ide, item):
            return f'record {ide} of-value {render_exp(item)} ee'
        case A.RecPut(ide, item, rec):
            return f'add-attr {ide} of-value {render_exp(item)} to {render_exp(rec)} ee'
        case A.RecGet(rec, ide):
            return f'rec {render_exp(rec)} at {ide} ee'
        case A.RecCut(ide, rec):
            return f'remove-attr {ide} from {render_exp(rec)} ee'
        case A.RecChange(rec, ide, item):
            return (f'change-rec {render_exp(rec)} at {ide} '
                    f'by {render_exp(item)} ee')
        case A.When(guard, then, other):
            return (f'if {render_exp(guard)} then {render_exp(then)} '
                    f'else {render_exp(other)} fi')
        case A.FunCall(ide, args):
            return f'{ide}({", ".join(args) if args else "empty-ap"})'
    raise TypeError(f'not a data expression: {e!r}')


def render_transfer(t: T.Transfer) -> str:
    match t:
        case T.ConstNum(num):
            return num.render()
        case T.ConstWord(text):
            return f"'{text}'"
        case T.ConstBool(value):
            return 'true' if value else 'false'
        case T.Arith(op, left, right):
            return f'({render_transfer(left)} {_ARITH_SYMBOL[op]} {render_transfer(right)})'
        case T.Pred(op, left, right):
            symbol = {'equal': '=', 'less': '<'}[op]
            return f'({render_transfer(left)} {symbol} {render_transfer(right)})'
        case T.Agg(op, arg):
            return f'{op}({render_transfer(arg)})'
        case T.Pred1(op, arg):
            name = {'small-nu': 'small-number', 'increasing-nu': 'increasing'}[op]
            return f'{name}({render_transfer(arg)})'
        case T.AndT(left, right):
            return f'({render_transfer(left)} and {render_transfer(right)})'
        case T.OrT(left, right):
            return f'({render_transfer(left)} or {render_transfer(right)})'
        case T.NotT(arg):
            return f'(not {render_transfer(arg)})'
        case T.AllOnLi(arg):
            return f'all-list {render_transfer(arg)} ee'
        case T.AllInAr(arg):
            return f'all-array {render_transfer(arg)} ee'
        case T.GetLi():
            return 'top'
        case T.GetAr(index):
            return f'array[{render_transfer(index)}]'
        case T.GetRe(ide):
            return f'record.{ide}'
        case T.Pass():
            return 'value'
        case T.SeqT(first, then):
            # internal composition node; shown in dumps only
            return f'seq({render_transfer(first)}, {render_transfer(then)})'
    raise TypeError(f'not a transfer: {t!r}')


def render_typ(t: A.TypExp) -> str:
    match t:
        case A.TypSimple(tag):
            return {'Boolean': 'boolean', 'number': 'number', 'word': 'word'}[tag]
        case A.TypConst(ide):
            return ide
        case A.TypList(inner):
            return f'list-type {render_typ(inner)} ee'
        case A.TypArray(inner):
            return f'array-type {render_typ(inner)} ee'
        case A.TypRecord(ide, inner):
            return f'record-type {ide} as {render_typ(inner)} ee'
        case A.TypExpand(rec, ide, inner):
            return (f'expand-record-type {render_typ(rec)} at {ide} '
                    f'by {render_typ(inner)} ee')
        case A.TypReplace(inner, transfer):
            return (f'replace-transfer-in {render_typ(inner)} '
                    f'by {render_transfer(transfer)} ee')
    raise TypeError(f'not a type expression: {t!r}')


def render_condition(c: A.Condition) -> str:
    match c:
        case A.CondTT():
            return 'TT'
        case A.CondFF():
            return 'FF'
        case A.CondExp(exp):
            return render_exp(exp)
        case A.CondAnd(left, right):
            return f'({render_condition(left)} and {render_condition(right)})'
        case A.CondOr(left, right):
            return f'({render_condition(left)} or {render_condition(right)})'
        case A.CondNot(arg):
            return f'(not {render_condition(arg)})'
        case A.CondDefinedD(exp):
            return f'defined-d({render_exp(exp)})'
        case A.CondDefinedT(tex):
            return f'defined-t({render_typ(tex)})'
        case A.CondIs(ide, tex):
            return f'{ide} is {render_typ(tex)}'
        case A.CondConformant(ide, exp):
            return f'{ide} conformant-with {render_exp(exp)}'
        case A.CondAlg(ins, con):
            return f'{render_ins_inline(ins)} @ {render_condition(con)}'
        case A.CondForall(ide, con):
            return f'forall {ide} . {_render_cond_atom(con)}'
        case A.CondExists(ide, con):
            return f'exists {ide} . {_render_cond_atom(con)}'
    raise TypeError(f'not a condition: {c!r}')


def _render_cond_atom(c: A.Condition) -> str:
    text = render_condition(c)
    if isinstance(c, (A.CondAlg, A.CondIs, A.CondConformant)):
        return f'({text})'
    return text


def render_ins_inline(i: A.Ins) -> str:
    """Single-line instruction rendering, used inside conditions."""
    return ' ; '.join(' '.join(line.split()) for line in render_ins(i))


def render_ins(i: A.Ins) -> list[str]:
    match i:
        case A.Assign(ide, exp):
            return [f'{ide} := {render_exp(exp)}']
        case A.ReplaceTr(ide, transfer):
            return [f'yoke {ide} := {render_transfer(transfer)}']
        case A.Skip():
            return ['skip']
        case A.Assertion(con):
            return [f'asr {render_condition(con)} rsa']
        case A.If(guard, then, other):
            return [f'if {render_exp(guard)} then',
                    *_indent(render_ins(then)),
                    'else',
                    *_indent(render_ins(other)),
                    'fi']
        case A.IfError(guard, handler):
            return [f'if-error {render_exp(guard)} then',
                    *_indent(render_ins(handler)),
                    'fi']
        case A.While(guard, body):
            return [f'while {render_exp(guard)} do',
                    *_indent(render_ins(body)),
                    'od']
        case A.Seq(first, second):
            first_lines = render_ins(first)
            return [*first_lines[:-1], first_lines[-1] + ' ;', *render_ins(second)]
        case A.CallImp(ide, val_args, ref_args):
            vals = ', '.join(val_args) if val_args else 'empty-ap'
            refs = ', '.join(ref_args) if ref_args else 'empty-ap'
            return [f'call {ide} (val {vals} ref {refs})']
        case A.Decree(con, body):
            return [f'begin-asr {render_condition(con)} ;',
                    *_indent(render_ins(body)),
                    'end-asr']
        case A.Off(body):
            return ['off', *_indent(render_ins(body)), 'on']
    raise TypeError(f'not an instruction: {i!r}')


def _indent(lines: list[str]) -> list[str]:
    return [INDENT + line for line in lines]


def _render_formals(params: tuple[tuple[str, A.TypExp], ...]) -> str:
    if not params:
        return 'empty-fp'
    return ', '.join(f'{name} as {render_typ(tex)}' for name, tex in params)


def render_preamble_item(p: A.Preamble) -> list[str]:
    match p:
        case A.VarDec(ide, tex):
            return [f'let {ide} be {render_typ(tex)} tel']
        case A.TypDef(ide, tex):
            return [f'set {ide} as {render_typ(tex)} tes']
        case A.SkipPre():
            return ['skip']
        case A.ProcDecl(ide, val_params, ref_params, body):
            return [f'proc {ide} (val {_render_formals(val_params)} '
                    f'ref {_render_formals(ref_params)})',
                    *_indent(render_program_body(body)),
                    'endproc']
        case A.MultiProcDecl(components):
            lines = ['begin-multiproc']
            for component in components:
                lines.extend(_indent(render_preamble_item(component)))
            lines.append('end-multiproc')
            return lines
        case A.FunProcDecl(ide, val_params, body, export, export_tex):
            return [f'fun {ide} ({_render_formals(val_params)})',
                    *_indent(render_program_body(body)),
                    *_indent([f'return {render_exp(export)} as {render_typ(export_tex)}']),
                    'endfun']
        case A.PreSeq():
            raise TypeError('preamble sequences are rendered by render_program_body')
    raise TypeError(f'not a preamble item: {p!r}')


def _flatten_preamble(p: A.Preamble) -> list[A.Preamble]:
    if isinstance(p, A.PreSeq):
        return _flatten_preamble(p.first) + _flatten_preamble(p.second)
    return [p]


def render_program_body(prog: A.Program) -> list[str]:
    lines: list[str] = []
    if prog.preamble is not None:
        for item in _flatten_preamble(prog.preamble):
            block = render_preamble_item(item)
            lines.extend(block[:-1])
            lines.append(block[-1] + ' ;')
    lines.extend(render_ins(prog.body))
    return lines


def render_program(prog: A.Program) -> str:
    lines = ['begin-program', *_indent(render_program_body(prog)), 'end-program']
    return '\n'.join(lines) + '\n'


def pretty(node) -> str:
    """Render any AST node; programs come out as full multi-line texts."""
    match node:
        case A.Program():
            return render_program(node)
        case A.VarDec() | A.TypDef() | A.ProcDecl() | A.MultiProcDecl() | \
             A.FunProcDecl() | A.SkipPre() | A.PreSeq():
            return '\n'.join(render_preamble_item(node))
        case _ if isinstance(node, A.Ins.__args__):
            return '\n'.join(render_ins(node))
        case _ if isinstance(node, A.Condition.__args__):
            return render_condition(node)
        case _ if isinstance(node, A.TypExp.__args__):
            return render_typ(node)
        case _ if isinstance(node, A.DatExp.__args__):
            return render_exp(node)
        case _ if isinstance(node, T.Transfer.__args__):
            return render_transfer(node)
    raise TypeError(f'cannot pretty-print {node!r}')
