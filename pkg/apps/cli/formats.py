"""
File Formats

Four line-based formats share one grammar: header lines in a fixed order,
entry lines, then `end`. `#` starts a comment, blank lines are skipped,
indices are 1-based and unlisted entries are zero. Anything after `end` is
ignored, so a report that starts with a serialized file still parses.

    algebra <name>        map <name>        rep <name>                 cochain <degree>
    dim <n>               rows <m>          algdim <n>                 algdim <n>
    <i> <j> <k> <q>       cols <n>          repdim <m>                 repdim <m>
    end                   <r> <c> <q>       rho|mu <i> <r> <c> <q>     <i1> .. <id> <v> <q>
                          end               end                        end

Serialization is canonical: entries sorted lexicographically, zeros
omitted, rationals in lowest terms.
"""

from pathlib import Path

import numpy as np

from apps.algebras.structures import Algebra, zero_tensor
from apps.cli.exceptions import DuplicateEntry, IndexOutOfRange, ParseError, ZeroDenominator
from apps.cohomology.cochains import Cochain
from apps.ratlinalg.exceptions import InvalidScalar
from apps.ratlinalg.linalg import zeros
from apps.ratlinalg.scalars import format_scalar, parse_scalar
from apps.representations.structures import Representation


# ============================================================================
# TOKENS
# ============================================================================

def _integer(text, line, minimum=None):
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"Expected an integer, got '{text}'", line) from None
    if minimum is not None and value < minimum:
        raise ParseError(f'Expected an integer >= {minimum}, got {value}', line)
    return value


def _index(text, line, bound, label):
    value = _integer(text, line)
    if not 1 <= value <= bound:
        raise IndexOutOfRange(f'{label} index {value} is outside 1..{bound}', line)
    return value - 1


def _scalar(text, line):
    try:
        return parse_scalar(text)
    except InvalidScalar as exc:
        if exc.zero_denominator:
            raise ZeroDenominator(f"Zero denominator in '{text}'", line) from None
        raise ParseError(str(exc), line) from None


class _Reader:
    """Numbered, comment-stripped token lines of one file."""

    def __init__(self, text):
        self.lines = []
        for number, raw in enumerate(text.splitlines(), start=1):
            content = raw.split('#', 1)[0].split()
            if content:
                self.lines.append((number, content))
        self.pos = 0

    def _next(self, expected):
        if self.pos >= len(self.lines):
            last = self.lines[-1][0] if self.lines else None
            raise ParseError(f'Unexpected end of file, expected {expected}', last)
        item = self.lines[self.pos]
        self.pos += 1
        return item

    def header(self, keyword):
        number, tokens = self._next(f"'{keyword}'")
        if tokens[0] != keyword or len(tokens) < 2:
            raise ParseError(f"Expected '{keyword} <value>', got '{' '.join(tokens)}'", number)
        return number, tokens[1:]

    def name(self, keyword):
        _, tokens = self.header(keyword)
        return ' '.join(tokens)

    def size(self, keyword, minimum=1):
        return self.numbered_size(keyword, minimum)[1]

    def numbered_size(self, keyword, minimum=1):
        number, tokens = self.header(keyword)
        if len(tokens) != 1:
            raise ParseError(f"Expected '{keyword} <integer>'", number)
        return number, _integer(tokens[0], number, minimum)

    def body(self, arity):
        """Entry lines up to `end`, each with `arity` tokens."""
        while True:
            number, tokens = self._next("'end'")
            if tokens == ['end']:
                return
            if len(tokens) != arity:
                raise ParseError(f'Expected {arity} fields, got {len(tokens)}', number)
            yield number, tokens


def _store(target, seen, key, value, line):
    if key in seen:
        raise DuplicateEntry(f'Entry {tuple(i + 1 for i in key)} is listed twice', line)
    seen.add(key)
    target[key] = value


def _lines(*parts):
    return '\n'.join(parts) + '\n'


# ============================================================================
# ALGEBRAS
# ============================================================================

def parse_algebra(text):
    reader = _Reader(text)
    name = reader.name('algebra')
    dim = reader.size('dim')
    sc = zero_tensor(dim, dim, dim)
    seen = set()
    for number, (i, j, k, q) in reader.body(4):
        key = tuple(_index(t, number, dim, label) for t, label in ((i, 'i'), (j, 'j'), (k, 'k')))
        _store(sc, seen, key, _scalar(q, number), number)
    return Algebra(sc, name)


def serialize_algebra(a):
    body = [f'{i} {j} {k} {format_scalar(c)}' for i, j, k, c in a.entries()]
    return _lines(f'algebra {a.name}', f'dim {a.dim}', *body, 'end')


# ============================================================================
# LINEAR MAPS
# ============================================================================

def parse_map(text):
    """Returns (name, matrix); entry (r, c) is the e_r coordinate of the image of e_c."""
    reader = _Reader(text)
    name = reader.name('map')
    rows = reader.size('rows')
    cols = reader.size('cols')
    m = zeros(rows, cols)
    seen = set()
    for number, (r, c, q) in reader.body(3):
        key = (_index(r, number, rows, 'row'), _index(c, number, cols, 'column'))
        _store(m, seen, key, _scalar(q, number), number)
    return name, m


def serialize_map(m, name='N'):
    body = [f'{r + 1} {c + 1} {format_scalar(m[r, c])}' for r, c in np.argwhere(m.astype(bool))]
    return _lines(f'map {name}', f'rows {m.shape[0]}', f'cols {m.shape[1]}', *body, 'end')


# ============================================================================
# REPRESENTATIONS
# ============================================================================

def parse_representation(text, algebra):
    reader = _Reader(text)
    name = reader.name('rep')
    number, algdim = reader.numbered_size('algdim')
    if algdim != algebra.dim:
        raise ParseError(f"algdim {algdim} does not match '{algebra.name}' (dim {algebra.dim})", number)
    repdim = reader.size('repdim')
    stacks = {'rho': zero_tensor(algdim, repdim, repdim), 'mu': zero_tensor(algdim, repdim, repdim)}
    seen = set()
    for number, (which, i, r, c, q) in reader.body(5):
        if which not in stacks:
            raise ParseError(f"Expected 'rho' or 'mu', got '{which}'", number)
        key = (_index(i, number, algdim, 'algebra'), _index(r, number, repdim, 'row'),
               _index(c, number, repdim, 'column'))
        if (which,) + key in seen:
            raise DuplicateEntry(f'{which} entry {tuple(x + 1 for x in key)} is listed twice', number)
        seen.add((which,) + key)
        stacks[which][key] = _scalar(q, number)
    return Representation(algebra, stacks['rho'], stacks['mu'], name)


def serialize_representation(r):
    body = [
        f'{which} {i + 1} {row + 1} {col + 1} {format_scalar(stack[i, row, col])}'
        for which, stack in (('rho', r.rho), ('mu', r.mu))
        for i, row, col in np.argwhere(stack.astype(bool))
    ]
    return _lines(f'rep {r.name}', f'algdim {r.alg.dim}', f'repdim {r.vdim}', *body, 'end')


# ============================================================================
# COCHAINS
# ============================================================================

def parse_cochain(text):
    reader = _Reader(text)
    number, tokens = reader.header('cochain')
    if len(tokens) != 1:
        raise ParseError("Expected 'cochain <degree>'", number)
    degree = _integer(tokens[0], number, minimum=0)
    algdim = reader.size('algdim')
    repdim = reader.size('repdim')
    values = zero_tensor(*((algdim,) * degree + (repdim,)))
    seen = set()
    for number, tokens in reader.body(degree + 2):
        key = tuple(_index(t, number, algdim, 'argument') for t in tokens[:degree])
        key += (_index(tokens[degree], number, repdim, 'value'),)
        _store(values, seen, key, _scalar(tokens[-1], number), number)
    return Cochain(degree, algdim, repdim, values)


def serialize_cochain(f):
    body = [' '.join(str(i) for i in idx) + f' {format_scalar(value)}' for idx, value in f.entries()]
    return _lines(f'cochain {f.degree}', f'algdim {f.algdim}', f'repdim {f.vdim}', *body, 'end')


# ============================================================================
# FILES
# ============================================================================

def read_text(path):
    return Path(path).read_text(encoding='utf-8')


def write_text(path, text):
    Path(path).write_text(text, encoding='utf-8')
