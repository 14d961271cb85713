"""
Plain-text reports.

A report is a human-readable section followed by the machine section, one
`RESULT <key>=<value>` line per fact. Nothing time- or environment-dependent
is written, so identical inputs give byte-identical reports.
"""

from fractions import Fraction

import numpy as np

from apps.ratlinalg.scalars import format_scalar


def format_value(value):
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (Fraction, int, np.integer)):
        return format_scalar(value)
    if isinstance(value, (tuple, list)):
        return '[' + ','.join(format_value(v) for v in value) + ']'
    return str(value)


def format_row(row):
    return '[' + ' '.join(format_scalar(x) for x in row) + ']'


class Report:

    def __init__(self, title=None):
        self.lines = [title] if title else []
        self.results = []

    def line(self, text=''):
        self.lines.append(text)

    def section(self, title):
        self.lines.extend(['', title])

    def block(self, text):
        self.lines.extend(text.rstrip('\n').split('\n'))

    def fact(self, label, value):
        self.lines.append(f'  {label}: {format_value(value)}')

    def matrix(self, label, m):
        m = np.asarray(m, dtype=object)
        self.lines.append(f'  {label}:')
        self.lines.extend(f'    {format_row(row)}' for row in m)

    def witnesses(self, witnesses, total=None):
        for w in witnesses:
            self.lines.append(f'  witness {w.describe()}')
        if total is not None and total > len(witnesses):
            self.lines.append(f'  ... {total - len(witnesses)} more (use --verbose)')

    def result(self, key, value):
        self.results.append(f'RESULT {key}={format_value(value)}')

    def render(self):
        return '\n'.join(self.lines + [''] + self.results) + '\n'
