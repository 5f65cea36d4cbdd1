"""Canonical expression printer; inverse of the DSL parser.

Terms are emitted in descending canonical order, coefficients as rational
functions in x, non-rational constants via the reserved name `zeta`.
"""

from __future__ import annotations


def format_fraction(q):
    return str(q)


def format_constant(c, wrap=False):
    if c.is_rational():
        return str(c.rational_value())
    parts = []
    for i, v in enumerate(c.coeffs):
        if not v:
            continue
        if i == 0:
            parts.append(str(v))
        else:
            z = "zeta" if i == 1 else f"zeta^{i}"
            if v == 1:
                parts.append(z)
            elif v == -1:
                parts.append(f"-{z}")
            else:
                parts.append(f"{v}*{z}")
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    if wrap and len(parts) > 1:
        return f"({out})"
    return out


def format_poly(p, wrap=False):
    if not p:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if not c:
            continue
        if i == 0:
            parts.append(format_constant(c, wrap=True))
            continue
        xs = "x" if i == 1 else f"x^{i}"
        if c == c.field.one:
            parts.append(xs)
        elif c == -c.field.one:
            parts.append(f"-{xs}")
        else:
            parts.append(f"{format_constant(c, wrap=True)}*{xs}")
    out = parts[0]
    for q in parts[1:]:
        out += " - " + q[1:] if q.startswith("-") else " + " + q
    if wrap and len(parts) > 1:
        return f"({out})"
    return out


def format_ratfun(r, wrap=False):
    num = format_poly(r.num, wrap=r.den.degree > 0 or wrap)
    if r.den.degree == 0:
        return num
    den = format_poly(r.den, wrap=True)
    return f"{num}/{den}"


def _format_monomial(tower, key):
    parts = []
    for i, e in enumerate(key):
        if not e:
            continue
        name = tower.gens[i].name
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_element(g):
    """Deterministic canonical string; parses back to the same element."""
    if not g:
        return "0"
    tower = g.tower
    pieces = []
    for key, coeff in sorted(g.terms.items(), key=lambda kv: tuple(reversed(kv[0])), reverse=True):
        mono = _format_monomial(tower, key)
        if not mono:
            pieces.append(format_ratfun(coeff))
            continue
        if coeff.is_constant():
            c = coeff.constant_value()
            if c == c.field.one:
                pieces.append(mono)
                continue
            if c == -c.field.one:
                pieces.append(f"-{mono}")
                continue
            pieces.append(f"{format_constant(c, wrap=True)}*{mono}")
            continue
        cs = format_ratfun(coeff, wrap=True)
        pieces.append(f"{cs}*{mono}")
    out = pieces[0]
    for p in pieces[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out
