"""Text rendering of scalars, polynomials, tensors and one-forms.

The output is accepted by :mod:`qflag.parser`, so printing then parsing
gives back the same normal form.
"""

from fractions import Fraction

LETTERS = {(1, 1): "a", (1, 2): "b", (2, 1): "c", (2, 2): "d"}


def _qpart(e, root):
    if e == 0:
        return ""
    p = Fraction(e, root)
    if p == 1:
        return "q"
    if p.denominator == 1:
        return f"q^{p.numerator}"
    return f"q^({p.numerator}/{p.denominator})"


def _laurent_pieces(poly, root):
    """[(negative?, text)] for a Laurent tuple, highest exponent first."""
    out = []
    for e, c in sorted(poly, reverse=True):
        mag = abs(c)
        qp = _qpart(e, root)
        if not qp:
            body = str(mag)
        elif mag == 1:
            body = qp
        else:
            body = f"{mag}*{qp}"
        out.append((c < 0, body))
    return out


def _join(pieces):
    if not pieces:
        return "0"
    neg, body = pieces[0]
    text = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        text += (" - " if neg else " + ") + body
    return text


def format_laurent(poly, root):
    return _join(_laurent_pieces(poly, root))


def format_scalar(x):
    if x.is_laurent():
        return format_laurent(x.num, x.root)
    return f"({format_laurent(x.num, x.root)})/({format_laurent(x.den, x.root)})"


def _scalar_factor(x):
    """(negative?, prefix) so that a term reads sign + prefix + monomial."""
    if x.is_laurent() and len(x.num) == 1:
        (neg, body), = _laurent_pieces(x.num, x.root)
        return neg, ("" if body == "1" else body)
    if x.is_laurent():
        neg = x.num[-1][1] < 0
        y = -x if neg else x
        return neg, f"({format_scalar(y)})"
    return False, f"({format_scalar(x)})"


def gen_name(ctx, g, letters=False):
    i, j = ctx.gen_pair(g)
    if letters and ctx.size == 2:
        return LETTERS[(i, j)]
    return f"u[{i},{j}]"


def _power(name, k):
    return name if k == 1 else f"{name}^{k}"


def format_monomial(ctx, mon, letters=False):
    dp, word = mon
    parts = []
    if dp:
        if ctx.kind == "UnitaryGroup" and ctx.size == 1:
            parts.append(_power("t", dp))
        elif dp < 0:
            parts.append(_power("detinv", -dp))
        else:
            parts.append(_power("det", dp))
    k = 0
    while k < len(word):
        g = word[k]
        run = 1
        while k + run < len(word) and word[k + run] == g:
            run += 1
        name = gen_name(ctx, g, letters)
        if letters and ctx.size == 2:
            parts.append(_power(name, run))
        else:
            parts.extend([name] * run)
        k += run
    return "*".join(parts)


def term_order(mon):
    dp, word = mon
    return (-len(word), word, dp)


def poly_pieces(f, letters=False):
    out = []
    for mon, c in sorted(f.terms.items(), key=lambda t: term_order(t[0])):
        m = format_monomial(f.ctx, mon, letters)
        neg, pref = _scalar_factor(c)
        if not m:
            body = pref or "1"
        elif not pref:
            body = m
        else:
            body = f"{pref}*{m}"
        out.append((neg, body))
    return out


def format_poly(f, letters=False):
    return _join(poly_pieces(f, letters))


def format_tensor(t, letters=False):
    from .ncalg import NCPoly
    pieces = []
    groups = {}
    for (a, b), c in t.terms.items():
        groups.setdefault(b, {})[a] = c
    for b in sorted(groups, key=term_order):
        left = NCPoly(t.left, groups[b])
        right = format_monomial(t.right, b, letters) or "1"
        lp = poly_pieces(left, letters)
        if len(lp) == 1:
            neg, body = lp[0]
            pieces.append((neg, f"{body} (x) {right}"))
        else:
            pieces.append((False, f"({format_poly(left, letters)}) (x) {right}"))
    return _join(pieces)


def format_form(w, letters=False):
    pieces = []
    for label, coeff in zip(w.labels(), w.coeffs):
        if coeff.is_zero():
            continue
        cp = poly_pieces(coeff, letters)
        if len(cp) == 1:
            neg, body = cp[0]
            pieces.append((neg, label if body == "1" else f"{body} {label}"))
        else:
            pieces.append((False, f"({format_poly(coeff, letters)}) {label}"))
    return _join(pieces)


def format_matrix(m):
    return "[" + ", ".join("[" + ", ".join(format_scalar(x) for x in row) + "]"
                           for row in m.rows) + "]"
