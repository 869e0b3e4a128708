"""Polynomial arithmetic and factorization over prime fields F_p.

Coefficient vectors are plain Python lists of residues in [0, p), ascending,
trimmed.  The multiplication and division kernels switch between three
strategies: schoolbook for short operands, numpy int64 convolution while
(p-1)^2 * min(len) stays below 2^62, and Kronecker substitution (packing
into one big integer) beyond that.  Equal-degree splitting is randomized
but seeded from a hash of the input, so factorizations are reproducible.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

import numpy as np

# -- primality -------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


# -- kernel helpers --------------------------------------------------------

_NUMPY_LIMIT = 1 << 62


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _kron_mul(a: list[int], b: list[int]) -> list[int]:
    """Product over Z of nonnegative-coefficient polynomials.

    Packs each operand into one big integer with fixed-width slots and
    lets CPython's subquadratic integer multiply do the work.
    """
    amax, bmax = max(a), max(b)
    slot = (amax.bit_length() + bmax.bit_length() + min(len(a), len(b)).bit_length() + 7) // 8 * 8
    nbytes = slot // 8
    abuf = bytearray(nbytes * len(a))
    for i, c in enumerate(a):
        abuf[i * nbytes : i * nbytes + (c.bit_length() + 7) // 8] = c.to_bytes(
            (c.bit_length() + 7) // 8 or 1, "little"
        )
    bbuf = bytearray(nbytes * len(b))
    for i, c in enumerate(b):
        bbuf[i * nbytes : i * nbytes + (c.bit_length() + 7) // 8] = c.to_bytes(
            (c.bit_length() + 7) // 8 or 1, "little"
        )
    prod = int.from_bytes(bytes(abuf), "little") * int.from_bytes(bytes(bbuf), "little")
    out_len = len(a) + len(b) - 1
    pbuf = prod.to_bytes(out_len * nbytes + nbytes, "little")
    return [int.from_bytes(pbuf[i * nbytes : (i + 1) * nbytes], "little") for i in range(out_len)]


def gfp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    """Product in F_p[t]."""
    if not a or not b:
        return []
    la, lb = len(a), len(b)
    if la + lb < 24:
        out = [0] * (la + lb - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % p
        return _trim(out)
    if (p - 1) * (p - 1) * min(la, lb) < _NUMPY_LIMIT:
        out = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)) % p
        return _trim([int(x) for x in out])
    return _trim([c % p for c in _kron_mul(a, b)])


def gfp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder in F_p[t]."""
    if not b:
        raise ZeroDivisionError("mod-p division by zero polynomial")
    if len(a) < len(b):
        return [], list(a)
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    use_np = db >= 24 and (p - 1) * (p - 1) * 2 < _NUMPY_LIMIT
    if use_np:
        rem = np.array(a, dtype=np.int64)
        bv = np.array(b, dtype=np.int64)
        q = [0] * (len(a) - db)
        for k in range(len(q) - 1, -1, -1):
            c = int(rem[k + db]) * inv % p
            q[k] = c
            if c:
                rem[k : k + db + 1] = (rem[k : k + db + 1] - c * bv) % p
        return _trim(q), _trim([int(x) for x in rem[:db]])
    rem = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + db] * inv % p
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                if bj:
                    rem[k + j] = (rem[k + j] - c * bj) % p
    return _trim(q), _trim(rem[:db])


def gfp_mod(a: list[int], b: list[int], p: int) -> list[int]:
    return gfp_divmod(a, b, p)[1]


def gfp_monic(a: list[int], p: int) -> list[int]:
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def gfp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd in F_p[t]."""
    a, b = list(a), list(b)
    while b:
        a, b = b, gfp_mod(a, b, p)
    return gfp_monic(a, p)


def gfp_extgcd(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Monic g = gcd(a, b) plus s, t with s*a + t*b = g in F_p[t]."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gfp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gfp_sub(s0, gfp_mul(q, s1, p), p)
        t0, t1 = t1, gfp_sub(t0, gfp_mul(q, t1, p), p)
    if r0 and r0[-1] != 1:
        inv = pow(r0[-1], p - 2, p)
        r0 = [c * inv % p for c in r0]
        s0 = [c * inv % p for c in s0]
        t0 = [c * inv % p for c in t0]
    return r0, s0, t0


def gfp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def gfp_powmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    """a^e reduced modulo mod, in F_p[t]."""
    result = [1]
    base = gfp_mod(a, mod, p)
    while e:
        if e & 1:
            result = gfp_mod(gfp_mul(result, base, p), mod, p)
        base = gfp_mod(gfp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def gfp_deriv(a: list[int], p: int) -> list[int]:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def gfp_eval(a: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def reduce_mod_p(coeffs, p: int) -> list[int]:
    """Reduce an integer coefficient vector into F_p[t] form."""
    return _trim([c % p for c in coeffs])


# -- public carrier type ---------------------------------------------------


@dataclass(frozen=True)
class ModPoly:
    """Dense polynomial over F_p; residues ascending, trimmed."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"composite modulus {self.p}")
        c = [x % self.p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0


# -- squarefree, distinct-degree, equal-degree -----------------------------


def _sqfree_parts_mod_p(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of monic f in F_p[t]: (part, multiplicity)."""
    out: list[tuple[list[int], int]] = []

    def descend(g: list[int], scale: int) -> None:
        # scale carries the p-power picked up through Frobenius descent
        e = 1
        while len(g) > 1:
            d = gfp_deriv(g, p)
            if not d:
                # g = h(t^p); p-th root is coefficient extraction in F_p
                root = g[::p]
                descend(root, scale * p)
                return
            c = gfp_gcd(g, d, p)
            w = gfp_divmod(g, c, p)[0]
            # w carries the squarefree product of parts with mult not divisible by p
            while len(w) > 1:
                y = gfp_gcd(w, c, p)
                part = gfp_divmod(w, y, p)[0]
                if len(part) > 1:
                    out.append((part, e * scale))
                w = y
                c = gfp_divmod(c, y, p)[0]
                e += 1
            g = c

    descend(gfp_monic(f, p), 1)
    return out


def distinct_degree_split(v: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split monic squarefree v into (product of degree-d irreducibles, d)."""
    parts: list[tuple[list[int], int]] = []
    h = gfp_mod([0, 1], v, p)
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = gfp_powmod(h, p, v, p)
        g = gfp_gcd(gfp_sub(h, [0, 1], p), v, p)
        if len(g) > 1:
            parts.append((g, d))
            v = gfp_divmod(v, g, p)[0]
            h = gfp_mod(h, v, p)
    if len(v) > 1:
        parts.append((v, len(v) - 1))
    return parts


def ddf_degree_multiset(f: list[int], p: int) -> list[int]:
    """Sorted degrees of the irreducible factors of squarefree monic f."""
    out: list[int] = []
    for prod, d in distinct_degree_split(gfp_monic(f, p), p):
        out.extend([d] * ((len(prod) - 1) // d))
    return sorted(out)


def _edf(u: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Equal-degree splitting: u = product of irreducibles of degree d."""
    n = len(u) - 1
    if n == d:
        return [u]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _trim(a)
        if len(a) <= 1 and d > 1:
            continue
        if p == 2:
            # trace map over F_{2^d}
            b = gfp_mod(a, u, p)
            tr = b
            for _ in range(d - 1):
                b = gfp_mod(gfp_mul(b, b, p), u, p)
                tr = gfp_sub(tr, [p - c for c in b], p)
            g = gfp_gcd(tr, u, p)
        else:
            b = gfp_powmod(a, (p**d - 1) // 2, u, p)
            g = gfp_gcd(gfp_sub(b, [1], p), u, p)
        if 0 < len(g) - 1 < n:
            left = _edf(g, d, p, rng)
            right = _edf(gfp_divmod(u, g, p)[0], d, p, rng)
            return left + right


def _seed_for(p: int, coeffs) -> int:
    h = hashlib.sha256(repr((p, tuple(coeffs))).encode()).digest()
    return int.from_bytes(h[:8], "big")


def factor_squarefree_mod_p(f: list[int], p: int) -> list[list[int]]:
    """Monic irreducible factors of squarefree monic f, sorted."""
    rng = random.Random(_seed_for(p, f))
    out: list[list[int]] = []
    for prod, d in distinct_degree_split(f, p):
        out.extend(_edf(prod, d, p, rng))
    return sorted(out, key=lambda g: (len(g), tuple(reversed(g))))


def factor_mod_p(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Full factorization over F_p into monic irreducibles with multiplicity.

    The leading unit is not stored: lc(f) times the product of the returned
    powers reproduces f.  Splitting randomness is seeded from the input.
    """
    p = f.p
    if len(f.coeffs) <= 1:
        return []
    work = list(f.coeffs)
    out: list[tuple[ModPoly, int]] = []
    for part, mult in _sqfree_parts_mod_p(work, p):
        for g in factor_squarefree_mod_p(part, p):
            out.append((ModPoly(p, tuple(g)), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs, fm[1]))
    return out
