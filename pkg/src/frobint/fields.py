"""Arithmetic in the finite field F_q, q = p^e.

Elements are plain ints in [0, q).  For e = 1 an element is its residue
mod p.  For e > 1 an element encodes a polynomial c_0 + c_1*g + ... in the
generator g of F_q over F_p, packed base p: sum(c_i * p**i).  All arithmetic
goes through an FqField instance, which owns p, e and the modulus.

The modulus must be irreducible over F_p; this is verified at construction
by trial division against every monic polynomial of degree <= e // 2.
"""

from .errors import ValidationError


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_mod(num, den, p):
    """Remainder of num by den, both coefficient lists over F_p (len = deg+1)."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        factor = num[-1] * inv_lead % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        while num and num[-1] == 0:
            num.pop()
    return num


def _is_irreducible(modulus, p):
    """Trial division by all monic polys of degree 1..deg//2."""
    deg = len(modulus) - 1
    if deg < 1 or modulus[-1] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for code in range(p ** d):
            cand = []
            c = code
            for _ in range(d):
                cand.append(c % p)
                c //= p
            cand.append(1)
            if not _poly_mod(modulus, cand, p):
                return False
    return True


class FqField:
    """The field F_q with q = p^e, elements encoded as ints in [0, q)."""

    def __init__(self, p, e=1, modulus=None):
        if not is_prime(p):
            raise ValidationError(f"p = {p} is not prime")
        if e < 1:
            raise ValidationError(f"extension degree e = {e} must be >= 1")
        if e == 1:
            if modulus is not None:
                raise ValidationError("modulus only allowed when e > 1")
        else:
            if modulus is None:
                raise ValidationError("extension field needs an explicit modulus")
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValidationError(
                    f"modulus must be monic of degree {e} (got {modulus})")
            if not _is_irreducible(list(modulus), p):
                raise ValidationError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        self.zero = 0
        self.one = 1

    def __eq__(self, other):
        return (isinstance(other, FqField) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"FqField({self.p})"
        return f"FqField({self.p}, {self.e})"

    # -- encoding helpers --------------------------------------------------

    def digits(self, a):
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, ds):
        a = 0
        for c in reversed(ds):
            a = a * self.p + c % self.p
        return a

    def from_int(self, n):
        """Embed an integer via reduction mod p (prime subfield)."""
        return n % self.p

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValidationError(f"{a!r} is not an element of {self!r}")
        return a

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def sub(self, a, b):
        if self.e == 1:
            return (a - b) % self.p
        return self.from_digits([x - y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        return self.from_digits([-x for x in self.digits(a)])

    def mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_mod(prod, list(self.modulus), self.p)
        rem += [0] * (self.e - len(rem))
        return self.from_digits(rem)

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        if a == 0:
            return 0 if n else 1
        n %= self.q - 1
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def root(self, a, m):
        """The m-th root of a when x -> x^m is bijective on F_q.

        Used with m = p^j (Frobenius powers), where the root is a^(q/m * ???);
        concretely a^(m') with m*m' = 1 mod (q-1) for nonzero a.
        """
        if a == 0:
            return 0
        minv = pow(m % (self.q - 1), -1, self.q - 1)
        return self.pow(a, minv)

    def elements(self):
        return range(self.q)

    # -- printing ----------------------------------------------------------

    def fmt(self, a, gen="g"):
        if self.e == 1:
            return str(a)
        parts = []
        for i, c in reversed(list(enumerate(self.digits(a)))):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(gen if c == 1 else f"{c}*{gen}")
            else:
                parts.append(f"{gen}^{i}" if c == 1 else f"{c}*{gen}^{i}")
        return "+".join(parts) if parts else "0"


def random_irreducible(p, deg, rng):
    """A monic irreducible polynomial of the given degree over F_p."""
    while True:
        coeffs = [rng.randrange(p) for _ in range(deg)] + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
