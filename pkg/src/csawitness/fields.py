"""Exact field arithmetic over Q, F_p and F_{p^k}.

Element representations are plain Python values so they hash and compare
naturally:

* rationals        -> fractions.Fraction (always normalized)
* prime field F_p  -> int in [0, p)
* extension F_{p^k} -> tuple of k ints, coefficients on the power basis of
  the modulus, lowest degree first

A field object carries the operations; elements do not know their field.
All arithmetic is exact.  Fields are immutable and safe to share.
"""

from fractions import Fraction

from .errors import InvalidInputError, StructuralError

# ---------------------------------------------------------------------------
# primality / irreducibility helpers (self-contained: poly.py builds on us)

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond any desk-scale modulus."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pm_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pm_mulmod(a, b, f, p):
    """(a*b) mod f over F_p; a, b, f int lists, f monic."""
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _pm_mod(prod, f, p)


def _pm_mod(a, f, p):
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - df
            for i in range(df + 1):
                a[shift + i] = (a[shift + i] - lead * f[i]) % p
        a.pop()
    return _pm_trim(a)


def _pm_gcd(a, b, p):
    a, b = _pm_trim(list(a)), _pm_trim(list(b))
    while b:
        a, b = b, _pm_mod(a, b, p)
    return a


def _pm_powmod_x(e, f, p):
    """x^e mod f over F_p by square and multiply."""
    result = [1]
    base = _pm_mod([0, 1], f, p)
    while e:
        if e & 1:
            result = _pm_mulmod(result, base, f, p)
        base = _pm_mulmod(base, base, f, p)
        e >>= 1
    return result


def _is_irreducible_mod_p(f, p):
    """Rabin test for a monic int-list polynomial f over F_p."""
    k = len(f) - 1
    if k < 1:
        return False
    x = [0, 1]
    # x^(p^k) == x mod f
    if _pm_trim(list(_pm_powmod_x(p ** k, f, p))) != _pm_mod(x, f, p):
        return False
    n, ell = k, 2
    prime_divs = []
    while ell * ell <= n:
        if n % ell == 0:
            prime_divs.append(ell)
            while n % ell == 0:
                n //= ell
        ell += 1
    if n > 1:
        prime_divs.append(n)
    for ell in prime_divs:
        g = _pm_powmod_x(p ** (k // ell), f, p)
        g = _pm_trim([(g[i] if i < len(g) else 0) - (x[i] if i < len(x) else 0)
                      for i in range(max(len(g), len(x)))])
        g = [c % p for c in g]
        if len(_pm_gcd(g, f, p)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------


class Rationals:
    """The field Q.  Elements are fractions.Fraction."""

    kind = "rationals"
    char = 0
    size = None  # infinite

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

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
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / self._nonzero(b)

    @staticmethod
    def _nonzero(b):
        if b == 0:
            raise ZeroDivisionError("division by 0")
        return b

    def is_zero(self, a):
        return a == 0

    def pow(self, a, n):
        if n < 0:
            return self.inv(a) ** (-n)
        return a ** n

    def random(self, rng, height=9):
        return Fraction(rng.randint(-height, height), rng.randint(1, 4))

    def sort_key(self, a):
        return a

    def to_json(self, a):
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def parse(self, text):
        try:
            return Fraction(str(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"bad rational scalar {text!r}") from exc

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"

    def spec(self):
        return {"kind": "rationals"}


class PrimeField:
    """F_p for a prime p.  Elements are ints in [0, p)."""

    kind = "prime"

    def __init__(self, p):
        if not is_prime(p):
            raise InvalidInputError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.size = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def elements(self):
        return range(self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def sort_key(self, a):
        return a

    def to_json(self, a):
        return str(a)

    def parse(self, text):
        try:
            return int(str(text), 10) % self.p
        except ValueError as exc:
            raise InvalidInputError(f"bad F_{self.p} scalar {text!r}") from exc

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"

    def spec(self):
        return {"kind": "prime", "p": self.p}


class ExtensionField:
    """F_{p^k} = F_p[x]/(f), f monic irreducible of degree k.

    Elements are k-tuples of ints (coefficients on 1, x, ..., x^(k-1)).
    The modulus is verified irreducible at construction.
    """

    kind = "extension"

    def __init__(self, p, modulus):
        if not is_prime(p):
            raise InvalidInputError(f"{p} is not prime")
        mod = [int(c) % p for c in modulus]
        while mod and mod[-1] == 0:
            mod.pop()
        if len(mod) < 2:
            raise InvalidInputError("modulus must have degree >= 1")
        if mod[-1] != 1:
            raise InvalidInputError("modulus must be monic")
        if not _is_irreducible_mod_p(mod, p):
            raise InvalidInputError(f"modulus {mod} is reducible over F_{p}")
        self.p = p
        self.modulus = tuple(mod)
        self.k = len(mod) - 1
        self.char = p
        self.size = p ** self.k
        self.zero = (0,) * self.k
        self.one = tuple([1 % p] + [0] * (self.k - 1))
        # reduction table: x^(k+i) mod f for i in [0, k)
        self._xpow = []
        cur = [(-c) % p for c in mod[:-1]]  # x^k
        for _ in range(self.k):
            self._xpow.append(tuple(cur))
            cur = [0] + cur  # multiply by x
            lead = cur.pop()
            if lead:
                cur = [(cur[i] - lead * mod[i]) % p for i in range(self.k)]
        self.gen = tuple([0, 1 % p] + [0] * (self.k - 2)) if self.k >= 2 else self._xpow[0]

    def from_int(self, n):
        return tuple([n % self.p] + [0] * (self.k - 1))

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
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        out = prod[:k]
        for i in range(k, 2 * k - 1):
            c = prod[i]
            if c:
                red = self._xpow[i - k]
                out = [(out[t] + c * red[t]) % p for t in range(k)]
        return tuple(out)

    def inv(self, a):
        # extended Euclid over F_p[x]
        if all(c == 0 for c in a):
            raise ZeroDivisionError("inverse of 0")
        p = self.p
        r0, r1 = list(self.modulus), _pm_trim([c % p for c in a])
        s0, s1 = [], [1]
        while r1:
            # divide r0 by r1
            q = []
            r = list(r0)
            dl = len(r1) - 1
            inv_lead = pow(r1[-1], p - 2, p)
            while len(r) - 1 >= dl and r:
                coef = r[-1] * inv_lead % p
                deg = len(r) - 1 - dl
                if coef:
                    while len(q) <= deg:
                        q.append(0)
                    q[deg] = coef
                    for i in range(dl + 1):
                        r[deg + i] = (r[deg + i] - coef * r1[i]) % p
                r.pop()
            _pm_trim(r)
            # s0 - q*s1
            qs = [0] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        qs[i + j] = (qs[i + j] + qi * sj) % p
            new_s = [( (s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0) ) % p
                     for i in range(max(len(s0), len(qs)) or 1)]
            r0, r1 = r1, r
            s0, s1 = s1, _pm_trim(new_s)
        # r0 = gcd, a unit in F_p since modulus is irreducible
        c = pow(r0[0], p - 2, p)
        out = [x * c % p for x in s0]
        out += [0] * (self.k - len(out))
        return tuple(out[:self.k])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return all(c == 0 for c in a)

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def elements(self):
        def gen():
            idx = [0] * self.k
            while True:
                yield tuple(idx)
                i = 0
                while i < self.k:
                    idx[i] += 1
                    if idx[i] < self.p:
                        break
                    idx[i] = 0
                    i += 1
                else:
                    return
        return gen()

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def sort_key(self, a):
        return tuple(a)

    def to_json(self, a):
        return [str(c) for c in a]

    def parse(self, value):
        if isinstance(value, str):
            parts = value.split(",") if value else []
        else:
            parts = list(value)
        try:
            coeffs = [int(str(c), 10) % self.p for c in parts]
        except ValueError as exc:
            raise InvalidInputError(f"bad F_{self.p}^{self.k} scalar {value!r}") from exc
        if len(coeffs) > self.k:
            raise InvalidInputError("too many coefficients for this extension")
        coeffs += [0] * (self.k - len(coeffs))
        return tuple(coeffs)

    def lift(self, a):
        """Embed an F_p scalar as a constant of this extension."""
        return self.from_int(a)

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("Fq", self.p, self.modulus))

    def __repr__(self):
        return f"F_{self.p}^{self.k}"

    def spec(self):
        return {"kind": "extension", "p": self.p, "modulus": [str(c) for c in self.modulus]}


QQ = Rationals()


def field_from_spec(spec):
    """Build a field from its JSON description."""
    kind = spec.get("kind")
    if kind == "rationals":
        return QQ
    if kind == "prime":
        return PrimeField(int(spec["p"]))
    if kind == "extension":
        return ExtensionField(int(spec["p"]), [int(c) for c in spec["modulus"]])
    raise InvalidInputError(f"unknown field kind {kind!r}")


def parse_field_flag(text):
    """Parse the CLI field syntax: 'q', 'fp:<p>' or 'fq:<p>:<k>'.

    For fq the modulus is the standard one (first monic irreducible of
    degree k in lexicographic coefficient order), so the flag is reproducible.
    """
    text = text.strip().lower()
    if text == "q":
        return QQ
    if text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    if text.startswith("fq:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise InvalidInputError(f"bad field flag {text!r}")
        p, k = int(parts[1]), int(parts[2])
        return standard_extension(p, k)
    raise InvalidInputError(f"bad field flag {text!r}")


def standard_extension(p, k):
    """F_{p^k} with a canonical modulus: the lexicographically first monic
    irreducible of degree k over F_p (constant coefficient varies fastest)."""
    if k == 1:
        return PrimeField(p)
    if not is_prime(p):
        raise InvalidInputError(f"{p} is not prime")
    # iterate over lower coefficients in lex order, low degree fastest
    total = p ** k
    for idx in range(total):
        coeffs = []
        n = idx
        for _ in range(k):
            coeffs.append(n % p)
            n //= p
        f = coeffs + [1]
        if _is_irreducible_mod_p(f, p):
            return ExtensionField(p, f)
    raise StructuralError("no irreducible polynomial found")  # pragma: no cover
