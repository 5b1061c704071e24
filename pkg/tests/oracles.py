"""Slow, independent reference implementations used as test oracles.

Everything here works on nested lists of ``fractions.Fraction`` and
evaluates multilinear maps literally, argument vector by argument vector.
Nothing is imported from the package under test.
"""

import itertools
from fractions import Fraction

import sympy


def frac_tensor(t):
    """Nested lists of Fractions from any array-like of rationals."""
    if hasattr(t, "tolist"):
        t = t.tolist()
    if isinstance(t, list):
        return [frac_tensor(x) for x in t]
    return Fraction(int(t.numerator), int(t.denominator))


def unit(d, i):
    return [Fraction(int(k == i)) for k in range(d)]


def add(u, v):
    return [a + b for a, b in zip(u, v)]


def scale(c, v):
    return [c * a for a in v]


def apply_map(alpha, v):
    """alpha[i][j] is the e_j coefficient of alpha(e_i)."""
    d = len(v)
    out = [Fraction(0)] * d
    for i in range(d):
        if v[i]:
            out = add(out, scale(v[i], alpha[i]))
    return out


def power(alpha, v, k):
    for _ in range(k):
        v = apply_map(alpha, v)
    return v


def evaluate(f, args):
    """Evaluate the multilinear map with coefficient tensor f on vectors."""
    d = len(args[0]) if args else len(f)
    out = [Fraction(0)] * d
    for idx in itertools.product(*(range(len(a)) for a in args)):
        c = Fraction(1)
        for a, i in zip(args, idx):
            c *= a[i]
            if not c:
                break
        if not c:
            continue
        node = f
        for i in idx:
            node = node[i]
        out = add(out, scale(c, node))
    return out


def tabulate(fn, d, n):
    """Coefficient tensor of the n-linear map fn(list of vectors)."""
    def build(prefix):
        if len(prefix) == n:
            return fn([unit(d, i) for i in prefix])
        return [build(prefix + [i]) for i in range(d)]
    return build([])


def twisted_delta(mu, alpha, f, n):
    d = len(mu)

    def fn(a):
        out = evaluate(mu, [power(alpha, a[0], n - 1), evaluate(f, a[1:])])
        for i in range(1, n + 1):
            args = [apply_map(alpha, x) for x in a[:i - 1]]
            args.append(evaluate(mu, [a[i - 1], a[i]]))
            args += [apply_map(alpha, x) for x in a[i + 1:]]
            out = add(out, scale(Fraction((-1) ** i), evaluate(f, args)))
        last = evaluate(mu, [evaluate(f, a[:n]), power(alpha, a[n], n - 1)])
        return add(out, scale(Fraction((-1) ** (n + 1)), last))

    return tabulate(fn, d, n + 1)


def partial(f, m, g, n, i, alpha):
    """(f o_i g) with alpha^(n-1) on the spectator inputs, i one-based."""
    d = len(alpha)

    def fn(a):
        args = [power(alpha, x, n - 1) for x in a[:i - 1]]
        args.append(evaluate(g, a[i - 1:i - 1 + n]))
        args += [power(alpha, x, n - 1) for x in a[i - 1 + n:]]
        return evaluate(f, args)

    return tabulate(fn, d, m + n - 1)


def cup(mu, alpha, f, m, g, n):
    d = len(alpha)

    def fn(a):
        left = evaluate(f, [power(alpha, x, n - 1) for x in a[:m]])
        right = evaluate(g, [power(alpha, x, m - 1) for x in a[m:]])
        return evaluate(mu, [left, right])

    return tabulate(fn, d, m + n)


def gerstenhaber_circle(f, m, g, n, alpha):
    """sum_i (-1)^((n-1)(i-1)) f o_i g"""
    d = len(alpha)
    total = None
    for i in range(1, m + 1):
        term = partial(f, m, g, n, i, alpha)
        flat = flatten(term)
        s = (-1) ** ((n - 1) * (i - 1))
        total = [s * x for x in flat] if total is None else [t + s * x for t, x in zip(total, flat)]
    return total


def flatten(t):
    if isinstance(t, list):
        return [x for s in t for x in flatten(s)]
    return [t]


# ---------------------------------------------------------------------------
# classical Hochschild cohomology (alpha = id), ranks by sympy


def _classical_delta_matrix(mu, n):
    """Matrix of delta: Hom(A^n, A) -> Hom(A^(n+1), A) in the flat bases."""
    d = len(mu)
    cols = []
    for idx in itertools.product(range(d), repeat=n):
        for k in range(d):
            # elementary cochain sending e_idx to e_k, everything else to 0
            def build(prefix):
                if len(prefix) == n:
                    return unit(d, k) if tuple(prefix) == idx else [Fraction(0)] * d
                return [build(prefix + [i]) for i in range(d)]
            f = build([])
            ident = [unit(d, i) for i in range(d)]
            cols.append(flatten(twisted_delta(mu, ident, f, n)))
    return sympy.Matrix(cols).T


def classical_hochschild_dims(mu, top):
    """dim HH^n for 2 <= n <= top of the associative algebra with tensor mu."""
    mu = frac_tensor(mu)
    d = len(mu)
    ranks = {0: 0}
    for n in range(1, top + 1):
        ranks[n] = _classical_delta_matrix(mu, n).rank()
    dims = {}
    for n in range(2, top + 1):
        dims[n] = d ** (n + 1) - ranks[n] - ranks[n - 1]
    return dims


def kernel_dimension(rows):
    return sympy.Matrix(rows).cols - sympy.Matrix(rows).rank()


# ---------------------------------------------------------------------------
# trees, written from scratch as nested tuples


def trees(n):
    if n == 0:
        return [()]
    out = []
    for p in range(n):
        for left in trees(p):
            for right in trees(n - 1 - p):
                out.append((left, right))
    return out


def size(t):
    return 0 if t == () else 1 + size(t[0]) + size(t[1])


def word(t):
    if t == ():
        return ()
    return tuple(c for c in word(t[0]) + (size(t),) + word(t[1]) if c)


def catalan(n):
    return sympy.binomial(2 * n, n) // (n + 1)
