"""Dense integer polynomials in one variable t.

Everything downstream (factorization, Hartley tests, congruence screens)
works with `IntPoly`: an immutable dense coefficient vector over Z with
index i holding the coefficient of t^i.  The zero polynomial is the empty
vector and has degree NEG_INF so that degree comparisons stay total.

Text format, both directions: symbolic "c_k*t^k + ... + c_0" with the "*"
optional ("3t^2" parses), or a comma separated ascending coefficient list.
Whitespace is ignored.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros so the representation is canonical."""
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPoly:
    """A polynomial in Z[t], stored densely in ascending order.

    >>> p = IntPoly((1, -3, 1))
    >>> p.degree, p[2], p[5]
    (2, 1, 0)
    >>> str(p)
    't^2 - 3*t + 1'
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = _trim(self.coeffs)
        if c != self.coeffs or not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", c)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"integer coefficients required, got {a!r}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        """c * t^k."""
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> "IntPoly":
        """Build from (exponent, coefficient) pairs; repeats accumulate."""
        acc: dict[int, int] = {}
        for k, c in terms:
            if k < 0:
                raise ValueError("negative exponent")
            acc[k] = acc.get(k, 0) + c
        if not acc:
            return cls.zero()
        out = [0] * (max(acc) + 1)
        for k, c in acc.items():
            out[k] = c
        return cls(tuple(out))

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def max_abs(self) -> int:
        """Height: max |c_i| (0 for the zero polynomial)."""
        return max((abs(a) for a in self.coeffs), default=0)

    def l2_norm_sq(self) -> int:
        """Sum of squared coefficients, exact."""
        return sum(a * a for a in self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(_trim(out))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPoly(_trim(out))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-a for a in self.coeffs))

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            if other == 0:
                return IntPoly.zero()
            return IntPoly(tuple(other * a for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        # schoolbook; degrees stay modest outside the mod-p kernels
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Scalar:
        """Evaluate by Horner's rule; exact over int or Fraction."""
        acc: Scalar = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    # -- structural operations ---------------------------------------------

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * a for i, a in enumerate(self.coeffs))[1:] or ())

    def inflate(self, n: int) -> "IntPoly":
        """Return f(t^n).

        >>> str(IntPoly((1, -3, 1)).inflate(2))
        't^4 - 3*t^2 + 1'
        """
        if n <= 0:
            raise ValueError("inflation exponent must be positive")
        if n == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * n + 1)
        for i, a in enumerate(self.coeffs):
            out[i * n] = a
        return IntPoly(tuple(out))

    def deflate(self, n: int) -> "IntPoly":
        """Inverse of inflate: f(t^{1/n}).  Requires support inside n*Z."""
        if n <= 0:
            raise ValueError("deflation exponent must be positive")
        if n == 1 or not self.coeffs:
            return self
        for i, a in enumerate(self.coeffs):
            if a and i % n:
                raise ValueError(f"coefficient at t^{i} obstructs deflation by {n}")
        return IntPoly(tuple(self.coeffs[::n]))

    def reverse(self) -> "IntPoly":
        """Reciprocal polynomial t^deg * f(1/t) (zero maps to zero)."""
        return IntPoly(_trim(self.coeffs[::-1]))

    def is_palindromic_up_to_sign(self) -> bool:
        """True when f equals +reverse(f) or -reverse(f)."""
        if not self.coeffs:
            return True
        r = self.coeffs[::-1]
        return self.coeffs == r or self.coeffs == tuple(-a for a in r)

    def order_at_zero(self) -> int:
        """Multiplicity of the root t = 0 (0 for the zero polynomial)."""
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        return 0

    def shift_down(self, k: int) -> "IntPoly":
        """Divide by t^k; requires t^k | f."""
        if k == 0:
            return self
        if self.order_at_zero() < k:
            raise ValueError(f"t^{k} does not divide")
        return IntPoly(self.coeffs[k:])

    # -- content and division ----------------------------------------------

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def try_divide(self, d: "IntPoly") -> "IntPoly | None":
        """Exact quotient self / d in Z[t], or None when d does not divide.

        Top-down synthetic division; any non-integral quotient coefficient
        or nonzero remainder proves non-divisibility.
        """
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return IntPoly.zero()
        dn, dd = self.degree, d.degree
        if dn < dd:
            return None
        rem = list(self.coeffs)
        dl = d.lc
        q = [0] * (dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            top = rem[k + dd]
            if top % dl:
                return None
            c = top // dl
            q[k] = c
            if c:
                for j, a in enumerate(d.coeffs):
                    rem[k + j] -= c * a
        if any(rem[:dd]):
            return None
        return IntPoly(tuple(q))

    def divmod_q(self, d: "IntPoly") -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Quotient and remainder over Q, as ascending Fraction tuples."""
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(a) for a in self.coeffs]
        dd = d.degree
        if self.degree < dd:
            return (), tuple(rem)
        dl = Fraction(d.lc)
        q = [Fraction(0)] * (len(self.coeffs) - dd)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + dd] / dl
            q[k] = c
            if c:
                for j, a in enumerate(d.coeffs):
                    rem[k + j] -= c * a
        while rem and rem[-1] == 0:
            rem.pop()
        return tuple(q), tuple(rem)

    # -- formatting --------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"


def content_primitive(f: IntPoly) -> tuple[int, IntPoly, int]:
    """Split f as sign * content * primitive_part with positive leading term.

    Returns (content, primitive_part, sign).  The zero polynomial has no
    primitive part and is rejected.

    >>> content_primitive(IntPoly((-12, 0, 6)))
    (6, IntPoly((-2, 0, 1)), 1)
    """
    if not f:
        raise ValueError("zero polynomial has no content decomposition")
    c = f.content()
    sign = 1 if f.lc > 0 else -1
    pp = IntPoly(tuple(a // (sign * c) for a in f.coeffs))
    return c, pp, sign


def log_mahler_upper(f: IntPoly) -> Fraction:
    """Exact rational q with Mahler measure M(f) <= 2^q (Landau's bound).

    M(f) <= ||f||_2 = sqrt(sum c_i^2), so log2 M <= log2(S)/2 with
    S = ||f||_2^2 an exact integer.  We overestimate log2(S)/2 by
    bit_length arithmetic on S^64: log2 S <= bit_length(S^64)/64.
    """
    if not f:
        raise ValueError("zero polynomial has no Mahler measure")
    s = f.l2_norm_sq()
    # log2(s) <= bit_length(s^64) / 64, exact integer work only
    e = (s**64).bit_length()
    return Fraction(e, 128)


# -- text format -----------------------------------------------------------

_TERM_RE = re.compile(r"^([+-]?\d+|[+-]?)\*?t(?:\^([+-]?\d+))?$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def parse_poly(text: str) -> IntPoly:
    """Parse symbolic ("4t^6-17*t^5+...") or ascending comma list ("4,-17,...").

    >>> parse_poly("t^2 - 3t + 1")
    IntPoly((1, -3, 1))
    >>> parse_poly("1, -3, 1")
    IntPoly((1, -3, 1))
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial text")
    if "," in s:
        coeffs = []
        for piece in s.split(","):
            if not _INT_RE.match(piece):
                raise ValueError(f"bad coefficient {piece!r} in list form")
            coeffs.append(int(piece))
        return IntPoly(tuple(coeffs))
    # split keeping signs: insert breaks before +/- that start a new term
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"malformed polynomial text {text!r}")
    pairs: list[tuple[int, int]] = []
    for term in terms:
        if _INT_RE.match(term):
            pairs.append((0, int(term)))
            continue
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"malformed term {term!r}")
        craw, eraw = m.groups()
        coef = int(craw) if craw not in ("", "+", "-") else (-1 if craw == "-" else 1)
        exp = int(eraw) if eraw is not None else 1
        if exp < 0:
            raise ValueError(f"negative exponent in term {term!r}")
        pairs.append((exp, coef))
    return IntPoly.from_terms(pairs)


def format_poly(f: IntPoly) -> str:
    """Canonical symbolic form, descending powers; reparses to f."""
    if not f:
        return "0"
    parts: list[str] = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "t" if k == 1 else f"t^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
