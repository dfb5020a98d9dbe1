"""Independent reference computations with sympy.

Nothing here touches deltawitt arithmetic: ghost equations are solved
directly with sympy polynomials, and results are compared after printing
and re-parsing.
"""

import sympy as sp

T = sp.Symbol("t")


def _poly(expr, gens, p, equal_char):
    if equal_char:
        return sp.Poly(expr, T, *gens, modulus=p)
    return sp.Poly(expr, *gens, domain=sp.ZZ)


def unghost(ws, q, p, gens, equal_char):
    """Solve w_i = sum_j pi^j x_j^(q^(i-j)) for the x_i by exact division."""
    pi = T if equal_char else p
    xs = []
    for i, w in enumerate(ws):
        rest = _poly(w, gens, p, equal_char)
        for j, x in enumerate(xs):
            rest = rest - _poly(pi**j, gens, p, equal_char) * x ** (q ** (i - j))
        if equal_char:
            quo, rem = sp.div(rest, _poly(T**i, gens, p, equal_char))
            assert rem.is_zero
        else:
            quo = rest.exquo_ground(p**i)
        xs.append(quo)
    return xs


def ghost(xs, q, p, gens, equal_char):
    pi = T if equal_char else p
    return [
        sum((pi**j * xs[j] ** (q ** (i - j)) for j in range(i + 1)), sp.Integer(0))
        for i in range(len(xs))
    ]


def universal(n, op, q, p, equal_char):
    x = sp.symbols(f"x0:{n + 1}")
    y = sp.symbols(f"y0:{n + 1}")
    gens = list(x) + list(y)
    gx, gy = ghost(list(x), q, p, gens, equal_char), ghost(list(y), q, p, gens, equal_char)
    ws = [sp.expand(a + b if op == "add" else a * b) for a, b in zip(gx, gy)]
    return unghost(ws, q, p, gens, equal_char)


def frobenius_orbit(x, image, n):
    """[x, phi(x), ...] for phi(t) = t and phi(u) = image."""
    u = sp.Symbol("u")
    out = [sp.sympify(x)]
    for _ in range(n):
        out.append(sp.expand(out[-1].subs(u, image, simultaneous=True)))
    return out


def to_text(poly) -> str:
    """sympy polynomial -> text accepted by PolyAlg.parse."""
    expr = poly.as_expr() if isinstance(poly, sp.Poly) else poly
    return str(sp.expand(expr)).replace("**", "^")
