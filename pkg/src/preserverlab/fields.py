"""Exact field arithmetic for GF(p), GF(p^k), Q, and Q(i).

Field elements are plain immutable values, not wrapper objects:

  GF(p)      int in [0, p)
  GF(p^k)    tuple of k ints, coefficients of 1, g, ..., g^(k-1) mod p
             (g = residue class of x modulo the defining polynomial)
  Q          fractions.Fraction
  Q(i)       pair (Fraction, Fraction) for re + im*i

All arithmetic goes through a field handle, so hot loops pay no
per-element dispatch cost and values hash/compare structurally.
Handles are interned: field_make on equal descriptors returns the
same object.
"""

from fractions import Fraction
import functools

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(p):
    """Deterministic Miller-Rabin, valid far beyond 2^31."""
    if p < 2:
        return False
    for q in _SMALL_PRIMES:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


# Low-level polynomials over GF(p) as int lists, lowest degree first,
# no trailing zeros.  Used for modulus validation, extension-field
# inversion, and the deterministic search for defining polynomials.

def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _pdivmod(f, g, p):
    # g must be nonzero
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    q = [0] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        _ptrim(f)
    return _ptrim(q), f


def _pmod(f, g, p):
    return _pdivmod(f, g, p)[1]


def _pgcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        f, g = g, _pmod(f, g, p)
    if f:
        inv = pow(f[-1], p - 2, p)
        f = [a * inv % p for a in f]
    return f


def _ppowmod(f, e, mod, p):
    result = [1]
    f = _pmod(f, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, f, p), mod, p)
        f = _pmod(_pmul(f, f, p), mod, p)
        e >>= 1
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def poly_irreducible_mod_p(f, p):
    """Rabin's test for an int-list polynomial over GF(p)."""
    f = _ptrim(list(f))
    d = len(f) - 1
    if d < 1:
        return False
    x = [0, 1]
    # x^(p^d) == x mod f
    t = _ppowmod(x, p ** d, f, p)
    diff = _ptrim([(a - b) % p for a, b in
                   zip(t + [0] * len(x), x + [0] * len(t))])
    if diff:
        return False
    for ell in _prime_factors(d):
        t = _ppowmod(x, p ** (d // ell), f, p)
        diff = _ptrim([(a - b) % p for a, b in
                       zip(t + [0] * len(x), x + [0] * len(t))])
        if len(_pgcd(diff, f, p)) != 1:
            return False
    return True


def default_modulus(p, k):
    """First monic irreducible of degree k over GF(p), ordered by the
    base-p value of the non-leading coefficient vector.  Deterministic,
    so serialized data stays readable across runs."""
    assert k >= 2
    for code in range(p ** k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        f = coeffs + [1]
        if poly_irreducible_mod_p(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class FieldHom:
    """A field homomorphism usable entry-wise on matrices.

    kind is one of "identity", "frobenius" (x -> x^(p^power), finite
    fields only), or "conjugation" (Q(i) only).
    """

    __slots__ = ("kind", "power")

    def __init__(self, kind, power=0):
        self.kind = kind
        self.power = power

    def __eq__(self, other):
        return (isinstance(other, FieldHom)
                and (self.kind, self.power) == (other.kind, other.power))

    def __hash__(self):
        return hash((self.kind, self.power))

    def __repr__(self):
        if self.kind == "frobenius":
            return "FieldHom(frobenius, %d)" % self.power
        return "FieldHom(%s)" % self.kind

    def is_identity(self):
        return self.kind == "identity" or (self.kind == "frobenius"
                                           and self.power == 0)


IDENTITY_HOM = FieldHom("identity")
CONJUGATION = FieldHom("conjugation")


def hom_make(kind, power=0):
    if kind == "identity":
        return IDENTITY_HOM
    if kind == "conjugation":
        return CONJUGATION
    if kind == "frobenius":
        return FieldHom("frobenius", power)
    raise ValueError("unknown homomorphism kind %r" % kind)


class PrimeField:
    kind = "prime"

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError("not a prime: %r" % (p,))
        self.p = p
        self.deg = 1
        self.order = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, c):
        return c % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def is_zero(self, a):
        return a == 0

    def elements(self):
        return range(self.p)

    def index(self, a):
        return a

    def elem_at(self, i):
        return i

    def random(self, rng):
        return rng.randrange(self.p)

    def to_str(self, a):
        return str(a)

    def parse(self, s):
        return int(s) % self.p

    def descriptor(self):
        return {"kind": "gf", "p": self.p}

    def __repr__(self):
        return "GF(%d)" % self.p


class ExtensionField:
    kind = "extension"

    def __init__(self, p, modulus):
        if not is_prime(p):
            raise ValueError("not a prime: %r" % (p,))
        modulus = tuple(c % p for c in modulus)
        if len(modulus) < 3 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 2")
        if not poly_irreducible_mod_p(list(modulus), p):
            raise ValueError("reducible modulus %r over GF(%d)" % (modulus, p))
        self.p = p
        self.modulus = modulus
        self.deg = len(modulus) - 1
        self.order = p ** self.deg
        self.char = p
        self.zero = (0,) * self.deg
        self.one = (1,) + (0,) * (self.deg - 1)
        # x^(deg+i) reduced mod modulus, for the multiplication fold
        base = [(-c) % p for c in modulus[:-1]]
        self._red = [tuple(base)]
        cur = base
        for _ in range(self.deg - 2):
            cur = [0] + cur
            lead = cur.pop()
            cur = [(a + lead * r) % p for a, r in zip(cur, base)]
            self._red.append(tuple(cur))

    def generator(self):
        """Residue class of x, a root of the defining polynomial."""
        if self.deg == 1:
            raise ValueError("prime field has no generator element")
        return (0, 1) + (0,) * (self.deg - 2)

    def from_int(self, c):
        return (c % self.p,) + (0,) * (self.deg - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p, m = self.p, self.deg
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] = (conv[i + j] + x * y) % p
        out = conv[:m]
        for i in range(m, 2 * m - 1):
            c = conv[i]
            if c:
                red = self._red[i - m]
                for j in range(m):
                    out[j] = (out[j] + c * red[j]) % p
        return tuple(out)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero in %r" % self)
        # extended Euclid in GF(p)[x]: track s with s*a = r mod modulus
        p = self.p
        r0, r1 = list(self.modulus), _ptrim(list(a))
        s0, s1 = [], [1]
        while r1:
            q, r = _pdivmod(r0, r1, p)
            qs = _pmul(q, s1, p)
            s = [(x - y) % p for x, y in
                 zip(s0 + [0] * max(0, len(qs) - len(s0)),
                     qs + [0] * max(0, len(s0) - len(qs)))]
            r0, r1 = r1, r
            s0, s1 = s1, _ptrim(s)
        # r0 is the gcd, a nonzero constant since the modulus is irreducible
        c = pow(r0[0], p - 2, p)
        out = [x * c % p for x in s0]
        return tuple((out + [0] * self.deg)[:self.deg])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def is_zero(self, a):
        return not any(a)

    def elements(self):
        p, m = self.p, self.deg
        for code in range(self.order):
            out = []
            c = code
            for _ in range(m):
                out.append(c % p)
                c //= p
            yield tuple(out)

    def index(self, a):
        code = 0
        for c in reversed(a):
            code = code * self.p + c
        return code

    def elem_at(self, i):
        out = []
        for _ in range(self.deg):
            out.append(i % self.p)
            i //= self.p
        return tuple(out)

    def random(self, rng):
        return self.elem_at(rng.randrange(self.order))

    def to_str(self, a):
        return [str(c) for c in a]

    def parse(self, s):
        if isinstance(s, str):
            raise ValueError("extension element must be a coefficient array")
        vals = [int(c) % self.p for c in s]
        if len(vals) != self.deg:
            raise ValueError("expected %d coefficients" % self.deg)
        return tuple(vals)

    def descriptor(self):
        return {"kind": "gf", "p": self.p, "k": self.deg,
                "modulus": list(self.modulus)}

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.deg)


def _parse_fraction(s):
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


class RationalField:
    kind = "rational"

    def __init__(self):
        self.char = 0
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, c):
        return Fraction(c)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / a

    def div(self, a, b):
        return a / b

    def pow(self, a, e):
        return a ** e

    def is_zero(self, a):
        return a == 0

    def random(self, rng):
        return Fraction(rng.randrange(-9, 10), rng.randrange(1, 10))

    def to_str(self, a):
        return "%d/%d" % (a.numerator, a.denominator) \
            if a.denominator != 1 else str(a.numerator)

    def parse(self, s):
        return _parse_fraction(s)

    def descriptor(self):
        return {"kind": "q"}

    def __repr__(self):
        return "Q"


class GaussianRationalField:
    """Q(i), elements (re, im) with Fraction parts."""

    kind = "gaussian"

    def __init__(self):
        self.char = 0
        self.zero = (Fraction(0), Fraction(0))
        self.one = (Fraction(1), Fraction(0))
        self.i = (Fraction(0), Fraction(1))

    def from_int(self, c):
        return (Fraction(c), Fraction(0))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def neg(self, a):
        return (-a[0], -a[1])

    def conj(self, a):
        return (a[0], -a[1])

    def inv(self, a):
        n = a[0] * a[0] + a[1] * a[1]
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return (a[0] / n, -a[1] / n)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def is_zero(self, a):
        return a[0] == 0 and a[1] == 0

    def random(self, rng):
        return (Fraction(rng.randrange(-9, 10), rng.randrange(1, 10)),
                Fraction(rng.randrange(-9, 10), rng.randrange(1, 10)))

    def to_str(self, a):
        def frac(x):
            return "%d/%d" % (x.numerator, x.denominator) \
                if x.denominator != 1 else str(x.numerator)
        return {"re": frac(a[0]), "im": frac(a[1])}

    def parse(self, s):
        if isinstance(s, dict):
            return (_parse_fraction(s.get("re", "0")),
                    _parse_fraction(s.get("im", "0")))
        return (_parse_fraction(s), Fraction(0))

    def descriptor(self):
        return {"kind": "qi"}

    def __repr__(self):
        return "Q(i)"


@functools.lru_cache(maxsize=None)
def _make_gf(p, modulus):
    if modulus is None:
        return PrimeField(p)
    return ExtensionField(p, modulus)


_Q = RationalField()
_QI = GaussianRationalField()


def GF(p, k=1, modulus=None):
    """Field handle for GF(p^k).  When k > 1 and no modulus is given,
    a deterministic irreducible of degree k is chosen."""
    if k == 1 and modulus is None:
        return _make_gf(p, None)
    if modulus is None:
        modulus = default_modulus(p, k)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) - 1 != k:
        raise ValueError("modulus degree %d, expected %d"
                         % (len(modulus) - 1, k))
    return _make_gf(p, modulus)


def field_of_order(q):
    """GF(q) for a prime power q, with the default modulus."""
    if q < 2:
        raise ValueError("bad field order %d" % q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError("%d is not a prime power" % q)
    return GF(p, k)


def QQ():
    return _Q


def QI():
    return _QI


def field_make(desc):
    """Build a field handle from a JSON-style descriptor."""
    kind = desc.get("kind")
    if kind == "gf":
        p = int(desc["p"])
        k = int(desc.get("k", 1))
        modulus = desc.get("modulus")
        return GF(p, k, tuple(int(c) for c in modulus) if modulus else None)
    if kind == "q":
        return _Q
    if kind == "qi":
        return _QI
    raise ValueError("unknown field kind %r" % (kind,))


def enumerate_homs(field):
    """All field automorphisms: Frobenius powers for finite fields,
    identity for Q, identity and conjugation for Q(i)."""
    if field.kind == "prime" or field.kind == "rational":
        return [IDENTITY_HOM]
    if field.kind == "extension":
        return [FieldHom("frobenius", e) for e in range(field.deg)]
    if field.kind == "gaussian":
        return [IDENTITY_HOM, CONJUGATION]
    raise ValueError("unknown field %r" % (field,))


def apply_hom(field, hom, x):
    if hom.kind == "identity":
        return x
    if hom.kind == "frobenius":
        if field.kind == "prime":
            return x
        if field.kind != "extension":
            raise ValueError("frobenius needs a finite field")
        return field.pow(x, field.p ** hom.power)
    if hom.kind == "conjugation":
        if field.kind != "gaussian":
            raise ValueError("conjugation needs Q(i)")
        return field.conj(x)
    raise ValueError("unknown hom %r" % (hom,))


def hom_fixes(field, hom, values):
    """True when the homomorphism fixes every value in the iterable."""
    return all(apply_hom(field, hom, v) == v for v in values)
