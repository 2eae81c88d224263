"""Tokenizer for the concrete and colloquial syntax.

Identifiers start with a letter and continue with letters, digits and
underscores; a hyphen is part of an identifier only when a letter follows
it (so `ch-name` is one token while `x - 1` needs the spaces around the
minus).  Keywords are reserved and may contain hyphens.  Comments run
from `#` to the end of the line.
"""

from __future__ import annotations

from dataclasses import dataclass

from .values import Limits, DEFAULT_LIMITS


class ParseError(Exception):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f'{line}:{col}: {message}')
        self.line = line
        self.col = col
        self.message = message


class RestoreError(ParseError):
    """Raised when colloquial text cannot be restored to concrete syntax."""


KEYWORDS = frozenset({
    # constants, operators, the expression closer
    'true', 'false', 'and', 'or', 'not', 'glue', 'ee',
    # list, array and record expressions
    'list', 'push', 'on', 'top', 'pop',
    'array', 'add-to-arr', 'new', 'change-arr', 'at', 'by', 'arr',
    'record', 'of-value', 'add-attr', 'to', 'rec', 'remove-attr', 'from',
    'change-rec',
    # conditional
    'if', 'then', 'else', 'fi',
    # type expressions
    'boolean', 'number', 'word', 'list-type', 'array-type', 'record-type',
    'as', 'expand-record-type', 'replace-transfer-in', 'with',
    # transfer expressions
    'sum', 'max', 'small-number', 'increasing', 'all-list', 'all-array',
    'value',
    # declarations and instructions
    'let', 'be', 'tel', 'set', 'tes', 'skip', 'yoke',
    'while', 'do', 'od', 'if-error',
    # procedures
    'call', 'ref', 'val', 'proc', 'endproc',
    'begin-multiproc', 'end-multiproc',
    'fun', 'endfun', 'return', 'empty-ap', 'empty-fp',
    # programs
    'begin-program', 'end-program',
    # assertion layer
    'asr', 'rsa', 'begin-asr', 'end-asr', 'off',
    'TT', 'FF', 'defined-d', 'defined-t', 'is', 'conformant-with',
    'forall', 'exists',
})

PUNCT = (':=', '<=', '>=', '!=', ';', ',', '(', ')', '[', ']', '.', '@',
         '+', '-', '*', '/', '=', '<', '>')


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident' | 'keyword' | 'number' | 'word' | 'punct' | 'eof'
    text: str
    line: int
    col: int


def tokenize(source: str, limits: Limits = DEFAULT_LIMITS) -> list[Token]:
    tokens: list[Token] = []
    line, col, i = 1, 1, 0
    n = len(source)

    def error(msg: str) -> ParseError:
        return ParseError(line, col, msg)

    while i < n:
        ch = source[i]
        if ch == '\n':
            line += 1
            col = 1
            i += 1
            continue
        if ch in ' \t\r':
            i += 1
            col += 1
            continue
        if ch == '#':
            while i < n and source[i] != '\n':
                i += 1
            continue
        start_line, start_col = line, col
        if ch == "'":
            j = i + 1
            while j < n and source[j] not in "'\n":
                j += 1
            if j >= n or source[j] != "'":
                raise error('unterminated word constant')
            text = source[i + 1:j]
            if len(text) > limits.max_word_len:
                raise error('word constant longer than max_word_len')
            tokens.append(Token('word', text, start_line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            if j < n and source[j] == '.' and j + 1 < n and source[j + 1].isdigit():
                j += 1
                while j < n and source[j].isdigit():
                    j += 1
            text = source[i:j]
            int_part, _, frac_part = text.partition('.')
            if len(int_part.lstrip('0') or '0') > limits.max_int_digits:
                raise error('number constant exceeds max_int_digits')
            if len(frac_part) > limits.max_frac_digits:
                raise error('number constant exceeds max_frac_digits')
            tokens.append(Token('number', text, start_line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n:
                c = source[j]
                if c.isalnum() or c == '_':
                    j += 1
                elif c == '-' and j + 1 < n and source[j + 1].isalpha():
                    j += 1
                else:
                    break
            text = source[i:j]
            if text in KEYWORDS:
                tokens.append(Token('keyword', text, start_line, start_col))
            else:
                if len(text) > limits.max_ident_len:
                    raise error('identifier longer than max_ident_len')
                tokens.append(Token('ident', text, start_line, start_col))
            col += j - i
            i = j
            continue
        for p in PUNCT:
            if source.startswith(p, i):
                tokens.append(Token('punct', p, start_line, start_col))
                i += len(p)
                col += len(p)
                break
        else:
            raise error(f'unexpected character {ch!r}')
    tokens.append(Token('eof', '', line, col))
    return tokens
