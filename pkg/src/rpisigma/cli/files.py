"""Line-based tower and problem file formats.

Tower file (UTF-8, '#' comments):

    constants cyclotomic <m>
    base x : shift
    rgen <name> : order <lambda>, ratio <expr>
    pgen <name> : ratio <expr>
    sgen <name> : delta <expr>

Problem file:

    order <m>
    a<i> = <expr>        # one line per i = 0..m
    rhs f<j> = <expr>    # one line per j = 1..d
"""

from __future__ import annotations

import re

from ..errors import RPiSigmaError, SubringViolation
from ..tower import Tower
from .parser import parse_expression


class FileFormatError(RPiSigmaError):
    pass


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def load_tower(text):
    tower = None
    saw_base = False
    for lineno, line in _lines(text):
        if line.startswith("constants"):
            m = re.fullmatch(r"constants\s+cyclotomic\s+(\d+)", line)
            if not m:
                raise FileFormatError(f"line {lineno}: bad constants declaration")
            tower = Tower(int(m.group(1)))
        elif line.startswith("base"):
            if not re.fullmatch(r"base\s+x\s*:\s*shift", line):
                raise FileFormatError(f"line {lineno}: only `base x : shift` is supported")
            saw_base = True
        elif line.startswith("rgen"):
            m = re.fullmatch(r"rgen\s+(\w+)\s*:\s*order\s+(\d+)\s*,\s*ratio\s+(.*)", line)
            if not m or tower is None:
                raise FileFormatError(f"line {lineno}: bad rgen declaration")
            ratio = parse_expression(tower, m.group(3))
            if not ratio.is_constant_value():
                raise SubringViolation(f"line {lineno}: rgen ratio must be a constant")
            tower.add_rgen(m.group(1), int(m.group(2)), ratio.to_ratfun().constant_value())
        elif line.startswith("pgen"):
            m = re.fullmatch(r"pgen\s+(\w+)\s*:\s*ratio\s+(.*)", line)
            if not m or tower is None:
                raise FileFormatError(f"line {lineno}: bad pgen declaration")
            tower.add_pgen(m.group(1), parse_expression(tower, m.group(2)))
        elif line.startswith("sgen"):
            m = re.fullmatch(r"sgen\s+(\w+)\s*:\s*delta\s+(.*)", line)
            if not m or tower is None:
                raise FileFormatError(f"line {lineno}: bad sgen declaration")
            tower.add_sgen(m.group(1), parse_expression(tower, m.group(2)))
        else:
            raise FileFormatError(f"line {lineno}: unrecognized directive {line.split()[0]!r}")
    if tower is None:
        raise FileFormatError("missing `constants cyclotomic <m>` declaration")
    if not saw_base:
        raise FileFormatError("missing `base x : shift` declaration")
    return tower.freeze()


def load_problem(text, tower):
    order = None
    a_entries = {}
    f_entries = {}
    for lineno, line in _lines(text):
        m = re.fullmatch(r"order\s+(\d+)", line)
        if m:
            order = int(m.group(1))
            continue
        m = re.fullmatch(r"a(\d+)\s*=\s*(.*)", line)
        if m:
            a_entries[int(m.group(1))] = parse_expression(tower, m.group(2))
            continue
        m = re.fullmatch(r"rhs\s+f(\d+)\s*=\s*(.*)", line)
        if m:
            f_entries[int(m.group(1))] = parse_expression(tower, m.group(2))
            continue
        raise FileFormatError(f"line {lineno}: unrecognized problem line")
    if order is None:
        raise FileFormatError("missing `order <m>` line")
    a = []
    for i in range(order + 1):
        if i not in a_entries:
            raise FileFormatError(f"missing coefficient a{i}")
        a.append(a_entries[i])
    if not f_entries:
        raise FileFormatError("at least one `rhs f<j> = ...` line is required")
    f = []
    for j in range(1, max(f_entries) + 1):
        if j not in f_entries:
            raise FileFormatError(f"missing parameter f{j}")
        f.append(f_entries[j])
    if all(not ai for ai in a):
        raise FileFormatError("coefficient vector a must not be identically zero")
    return a, f
