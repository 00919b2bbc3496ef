"""Univariate polynomials over an exact field handle.

A polynomial is a tuple of field elements, lowest degree first, with
no trailing zeros; the zero polynomial is the empty tuple.  All
functions take the field handle as the first argument.

factor_poly returns monic irreducible factors with multiplicities in
a canonical order, so downstream canonical forms are reproducible.
Over finite fields the factorization is exhaustive trial division
while q^deg stays small and distinct-degree plus equal-degree
splitting (seeded) beyond that.  Over Q and Q(i) only degrees up to 4
are supported.
"""

import math
import random

from .fields import apply_hom, FieldHom, GF


class BudgetError(Exception):
    """Raised when a computation would exceed its enumeration budget."""


def poly_trim(field, coeffs):
    coeffs = list(coeffs)
    while coeffs and field.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def poly_from_ints(field, ints):
    return poly_trim(field, [field.from_int(c) for c in ints])


def poly_degree(f):
    return len(f) - 1


def poly_is_zero(f):
    return not f


def poly_constant(field, c):
    return poly_trim(field, [c])


def poly_x(field):
    return (field.zero, field.one)


def poly_add(field, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = field.add(out[i], c)
    return poly_trim(field, out)


def poly_neg(field, f):
    return tuple(field.neg(c) for c in f)


def poly_sub(field, f, g):
    return poly_add(field, f, poly_neg(field, g))


def poly_scale(field, c, f):
    if field.is_zero(c):
        return ()
    return poly_trim(field, [field.mul(c, a) for a in f])


def poly_mul(field, f, g):
    if not f or not g:
        return ()
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if field.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    return poly_trim(field, out)


def poly_divmod(field, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    inv_lead = field.inv(g[-1])
    q = [field.zero] * max(0, len(f) - dg)
    while len(r) - 1 >= dg and r:
        c = field.mul(r[-1], inv_lead)
        shift = len(r) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = field.sub(r[shift + i], field.mul(c, b))
        while r and field.is_zero(r[-1]):
            r.pop()
    return poly_trim(field, q), poly_trim(field, r)


def poly_mod(field, f, g):
    return poly_divmod(field, f, g)[1]


def poly_monic(field, f):
    if not f:
        return f
    return poly_scale(field, field.inv(f[-1]), f)


def poly_gcd(field, f, g):
    while g:
        f, g = g, poly_mod(field, f, g)
    return poly_monic(field, f)


def poly_pow_mod(field, f, e, mod):
    result = poly_constant(field, field.one)
    f = poly_mod(field, f, mod)
    while e:
        if e & 1:
            result = poly_mod(field, poly_mul(field, result, f), mod)
        f = poly_mod(field, poly_mul(field, f, f), mod)
        e >>= 1
    return result


def poly_deriv(field, f):
    out = [field.mul(field.from_int(i), f[i]) for i in range(1, len(f))]
    return poly_trim(field, out)


def poly_eval(field, f, x):
    acc = field.zero
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_shift_compose(field, f, a):
    """f(x + a), by Horner with the linear polynomial x + a."""
    lin = poly_trim(field, [a, field.one])
    acc = ()
    for c in reversed(f):
        acc = poly_add(field, poly_mul(field, acc, lin),
                       poly_constant(field, c))
    return acc


def poly_apply_hom(field, hom, f):
    return tuple(apply_hom(field, hom, c) for c in f)


def poly_key(field, f):
    """Sort key giving a stable canonical order on polynomials."""
    if field.kind in ("prime", "extension"):
        return (len(f),) + tuple(field.index(c) for c in f)
    if field.kind == "rational":
        return (len(f),) + tuple((c.numerator, c.denominator) for c in f)
    return (len(f),) + tuple((c[0].numerator, c[0].denominator,
                              c[1].numerator, c[1].denominator) for c in f)


def _poly_at_index(field, deg, code):
    """Monic polynomial of given degree whose non-leading coefficients
    encode the base-q digits of code."""
    coeffs = []
    for _ in range(deg):
        coeffs.append(field.elem_at(code % field.order))
        code //= field.order
    coeffs.append(field.one)
    return tuple(coeffs)


EXHAUSTIVE_FACTOR_CAP = 2 ** 16


def _factor_exhaustive(field, f):
    factors = []
    d = 1
    while 2 * d <= poly_degree(f):
        for code in range(field.order ** d):
            g = _poly_at_index(field, d, code)
            q, r = poly_divmod(field, f, g)
            if poly_is_zero(r):
                mult = 0
                while poly_is_zero(r):
                    f, mult = q, mult + 1
                    q, r = poly_divmod(field, f, g)
                factors.append((g, mult))
            if poly_degree(f) < 2 * d:
                break
        d += 1
    if poly_degree(f) >= 1:
        factors.append((poly_monic(field, f), 1))
    return factors


def _squarefree_parts(field, f):
    """Yield (squarefree factor, multiplicity) pairs over a finite field,
    including the p-th power descent when the derivative vanishes."""
    p = field.char
    out = {}

    def descend(g, outer_mult):
        if poly_degree(g) < 1:
            return
        dg = poly_deriv(field, g)
        if poly_is_zero(dg):
            # g = h(x^p); take p-th roots of coefficients
            root = []
            for i in range(0, len(g), p):
                root.append(field.pow(g[i], field.order // p))
            descend(poly_trim(field, root), outer_mult * p)
            return
        c = poly_gcd(field, g, dg)
        w = poly_divmod(field, g, c)[0]
        mult = 1
        while poly_degree(w) >= 1:
            y = poly_gcd(field, w, c)
            part = poly_divmod(field, w, y)[0]
            if poly_degree(part) >= 1:
                key = part
                out[key] = out.get(key, 0) + outer_mult * mult
            c = poly_divmod(field, c, y)[0]
            w = y
            mult += 1
        descend(c, outer_mult * p)

    descend(poly_monic(field, f), 1)
    return list(out.items())


def _distinct_degree(field, f):
    """Split a squarefree monic f into products of irreducibles of a
    common degree.  Returns (degree, product) pairs."""
    out = []
    x = poly_x(field)
    h = x
    d = 0
    while poly_degree(f) > 0:
        d += 1
        if 2 * d > poly_degree(f):
            out.append((poly_degree(f), f))
            break
        h = poly_pow_mod(field, h, field.order, f)
        g = poly_gcd(field, poly_sub(field, h, x), f)
        if poly_degree(g) > 0:
            out.append((d, g))
            f = poly_divmod(field, f, g)[0]
            h = poly_mod(field, h, f)
    return out


def _equal_degree_split(field, f, d, rng):
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    n = poly_degree(f)
    if n == d:
        return [f]
    q = field.order
    while True:
        a = poly_trim(field, [field.elem_at(rng.randrange(q))
                              for _ in range(n)])
        if poly_degree(a) < 1:
            continue
        g = poly_gcd(field, a, f)
        if 0 < poly_degree(g) < n:
            pass
        elif field.char == 2:
            # trace map sum a^(2^i) over the degree-d subfield tower
            t = a
            acc = a
            for _ in range(d * field.deg - 1):
                t = poly_mod(field, poly_mul(field, t, t), f)
                acc = poly_add(field, acc, t)
            g = poly_gcd(field, acc, f)
        else:
            e = (q ** d - 1) // 2
            b = poly_pow_mod(field, a, e, f)
            g = poly_gcd(field, poly_sub(field, b,
                                         poly_constant(field, field.one)), f)
        if 0 < poly_degree(g) < n:
            left = _equal_degree_split(field, g, d, rng)
            right = _equal_degree_split(field, poly_divmod(field, f, g)[0],
                                        d, rng)
            return left + right


def _factor_large_finite(field, f, seed):
    rng = random.Random(seed)
    factors = []
    for squarefree, mult in _squarefree_parts(field, f):
        for d, prod in _distinct_degree(field, squarefree):
            for irr in _equal_degree_split(field, prod, d, rng):
                factors.append((poly_monic(field, irr), mult))
    return factors


def _rational_roots(field, f):
    """Roots in Q by the rational root theorem."""
    lcm = 1
    for c in f:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in f]
    const = next((c for c in ints if c), 0)
    lead = ints[-1]
    if ints[0] == 0:
        roots = [field.zero]
    else:
        roots = []
        const = ints[0]
    from fractions import Fraction
    seen = set(roots)
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for sign in (1, -1):
                r = Fraction(sign * p, q)
                if r not in seen and field.is_zero(poly_eval(field, f, r)):
                    seen.add(r)
                    roots.append(r)
    return roots


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _gaussian_sqrt(field, z):
    """Square root of a Q(i) element, or None."""
    from fractions import Fraction
    re, im = z
    if im == 0:
        if re >= 0:
            s = _fraction_sqrt(re)
            return (s, Fraction(0)) if s is not None else None
        s = _fraction_sqrt(-re)
        return (Fraction(0), s) if s is not None else None
    # (a+bi)^2 = z: a^2 - b^2 = re, 2ab = im, a^2 + b^2 = |z|
    norm = re * re + im * im
    mod = _fraction_sqrt(norm)
    if mod is None:
        return None
    a2 = (re + mod) / 2
    a = _fraction_sqrt(a2)
    if a is None or a == 0:
        return None
    b = im / (2 * a)
    return (a, b)


def _fraction_sqrt(x):
    if x < 0:
        return None
    from fractions import Fraction
    num = math.isqrt(x.numerator)
    den = math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


def _sqrt_in_field(field, z):
    if field.kind == "rational":
        return _fraction_sqrt(z)
    if field.kind == "gaussian":
        return _gaussian_sqrt(field, z)
    raise ValueError("square roots here only for Q and Q(i)")


def _gaussian_roots(field, f):
    """Roots in Q(i), found degree by degree via quadratic formulas and
    a bounded divisor search on the constant term."""
    from fractions import Fraction
    roots = []
    # pull out root zero
    while f and field.is_zero(f[0]):
        roots.append(field.zero)
        f = f[1:]
    deg = poly_degree(f)
    if deg <= 0:
        return roots
    if deg == 1:
        roots.append(field.div(field.neg(f[0]), f[1]))
        return roots
    if deg == 2:
        a, b, c = f[2], f[1], f[0]
        disc = field.sub(field.mul(b, b),
                         field.mul(field.from_int(4), field.mul(a, c)))
        s = _gaussian_sqrt(field, disc)
        if s is None:
            return roots
        twoa = field.mul(field.from_int(2), a)
        for sgn in (s, field.neg(s)):
            roots.append(field.div(field.add(field.neg(b), sgn), twoa))
        return roots
    # degree 3 or 4: search Gaussian-integer candidates u + vi with
    # bounded norm after clearing denominators
    lcm = 1
    for re, im in f:
        for part in (re, im):
            lcm = lcm * part.denominator // math.gcd(lcm, part.denominator)
    scaled = [(re * lcm, im * lcm) for re, im in f]
    c0 = scaled[0]
    n0 = int(c0[0] * c0[0] + c0[1] * c0[1])
    lead = scaled[-1]
    nl = int(lead[0] * lead[0] + lead[1] * lead[1])
    if n0 * nl > 10 ** 6:
        raise BudgetError("constant term too large for root search in Q(i)")
    bound = math.isqrt(n0 * nl)
    found = []
    dens = _divisors(nl)
    for u in range(-bound, bound + 1):
        for v in range(-bound, bound + 1):
            if u == 0 and v == 0:
                continue
            if u * u + v * v > n0 * nl:
                continue
            for du in dens:
                cand = (Fraction(u, du), Fraction(v, du))
                if cand not in found and \
                        field.is_zero(poly_eval(field, f, cand)):
                    found.append(cand)
    for r in found:
        roots.append(r)
    return roots


def _factor_char_zero(field, f, seed):
    deg = poly_degree(f)
    if deg > 4:
        raise BudgetError("factoring over %r limited to degree 4" % field)
    factors = {}
    f = poly_monic(field, f)

    def record(g):
        g = poly_monic(field, g)
        factors[g] = factors.get(g, 0) + 1

    def roots_of(g):
        if field.kind == "rational":
            return _rational_roots(field, g)
        return _gaussian_roots(field, g)

    # strip linear factors
    changed = True
    while changed and poly_degree(f) >= 1:
        changed = False
        for r in roots_of(f):
            lin = poly_trim(field, [field.neg(r), field.one])
            q, rem = poly_divmod(field, f, lin)
            if poly_is_zero(rem):
                record(lin)
                f = q
                changed = True
                break
    deg = poly_degree(f)
    if deg == 0:
        pass
    elif deg in (2, 3):
        # no roots left, so no linear factor; degree 3 with no linear
        # factor is irreducible, degree 2 likewise
        record(f)
    elif deg == 4:
        split = _quartic_two_quadratics(field, f)
        if split is None:
            record(f)
        else:
            record(split[0])
            record(split[1])
    elif deg == 1:
        record(f)
    ordered = sorted(factors.items(), key=lambda kv: poly_key(field, kv[0]))
    return ordered


def _quartic_two_quadratics(field, f):
    """Try to write a rootless monic quartic as a product of two monic
    quadratics over the field, via the resolvent cubic."""
    p3, q2, r1, s0 = f[3], f[2], f[1], f[0]
    one = field.one
    four = field.from_int(4)
    # resolvent: y^3 - q y^2 + (pr - 4s) y - (p^2 s - 4 q s + r^2)
    res = poly_trim(field, [
        field.neg(field.sub(field.add(field.mul(field.mul(p3, p3), s0),
                                      field.mul(r1, r1)),
                            field.mul(four, field.mul(q2, s0)))),
        field.sub(field.mul(p3, r1), field.mul(four, s0)),
        field.neg(q2),
        one,
    ])
    if field.kind == "rational":
        ys = _rational_roots(field, res)
    else:
        ys = _gaussian_roots(field, res)
    two = field.from_int(2)
    for y in ys:
        # a + c = p, ac = q - y; b + d = y, bd = s; cross check ad+bc = r
        da = field.sub(field.mul(p3, p3),
                       field.mul(four, field.sub(q2, y)))
        db = field.sub(field.mul(y, y), field.mul(four, s0))
        sa = _sqrt_in_field(field, da)
        sb = _sqrt_in_field(field, db)
        if sa is None or sb is None:
            continue
        a = field.div(field.add(p3, sa), two)
        c = field.sub(p3, a)
        for b, d in (
            (field.div(field.add(y, sb), two),
             field.div(field.sub(y, sb), two)),
            (field.div(field.sub(y, sb), two),
             field.div(field.add(y, sb), two)),
        ):
            cross = field.add(field.mul(a, d), field.mul(b, c))
            if cross == r1:
                g1 = poly_trim(field, [b, a, one])
                g2 = poly_trim(field, [d, c, one])
                return tuple(sorted((g1, g2),
                                    key=lambda g: poly_key(field, g)))
    return None


def factor_poly(field, f, seed=0):
    """Monic irreducible factors of f with multiplicities, in canonical
    order.  The leading coefficient is dropped; callers needing it can
    read f[-1] themselves."""
    f = poly_trim(field, f)
    if poly_degree(f) < 1:
        return []
    if field.kind in ("prime", "extension"):
        f = poly_monic(field, f)
        if field.order ** poly_degree(f) <= EXHAUSTIVE_FACTOR_CAP:
            factors = _factor_exhaustive(field, f)
        else:
            factors = _factor_large_finite(field, f, seed)
        merged = {}
        for g, m in factors:
            merged[g] = merged.get(g, 0) + m
        return sorted(merged.items(), key=lambda kv: poly_key(field, kv[0]))
    return _factor_char_zero(field, f, seed)


def poly_roots(field, f, seed=0):
    """Roots in the field with multiplicity, canonically ordered."""
    out = []
    for g, m in factor_poly(field, f, seed):
        if poly_degree(g) == 1:
            root = field.div(field.neg(g[0]), g[1])
            out.extend([root] * m)
    return out


def splits_into_linears(field, f, seed=0):
    factors = factor_poly(field, f, seed)
    return all(poly_degree(g) == 1 for g, _ in factors)


def splitting_field(field, f, seed=0):
    """Smallest field over which f splits, with an embedding map.

    Finite base GF(p^k): returns (GF(p^(k*m)), embed) where m is the
    lcm of the irreducible factor degrees and embed sends base values
    into the larger field.  Over Q and Q(i) the polynomial must
    already split; otherwise a BudgetError is raised since general
    algebraic extensions are out of scope.
    """
    f = poly_trim(field, f)
    factors = factor_poly(field, f, seed)
    degs = [poly_degree(g) for g, _ in factors]
    if field.kind in ("rational", "gaussian"):
        if any(d > 1 for d in degs):
            raise BudgetError("splitting field over %r not representable"
                              % field)
        return field, (lambda x: x)
    m = 1
    for d in degs:
        m = m * d // math.gcd(m, d)
    if m == 1:
        return field, (lambda x: x)
    big = GF(field.char, field.deg * m)
    embed = embedding(field, big)
    return big, embed


def embedding(small, big):
    """Field embedding GF(p^k) -> GF(p^(k*m)), when one exists.

    The generator of the small field is sent to the first root of its
    defining polynomial in the big field (first in element index
    order), which makes the embedding deterministic.
    """
    if small.kind == "prime":
        return lambda c, F=big: F.from_int(c)
    if big.char != small.char or big.deg % small.deg:
        raise ValueError("no embedding of %r into %r" % (small, big))
    mod_in_big = poly_from_ints(big, small.modulus)
    root = None
    # roots of the small modulus form a Frobenius orbit; find one by
    # factoring rather than scanning all of the big field
    for g, _ in factor_poly(big, mod_in_big):
        if poly_degree(g) == 1:
            cand = big.div(big.neg(g[0]), g[1])
            if root is None or big.index(cand) < big.index(root):
                root = cand
    if root is None:
        raise ValueError("defining polynomial has no root in %r" % big)
    powers = [big.one]
    for _ in range(small.deg - 1):
        powers.append(big.mul(powers[-1], root))

    def embed(value, F=big, powers=powers):
        acc = F.zero
        for c, pw in zip(value, powers):
            acc = F.add(acc, F.mul(F.from_int(c), pw))
        return acc

    return embed
