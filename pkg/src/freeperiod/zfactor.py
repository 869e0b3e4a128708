"""Complete factorization in Z[t]: Yun splitting, Hensel lifting, Zassenhaus.

The pipeline for one squarefree primitive part: probe a few odd primes that
keep the input squarefree, intersect the mod-p factor-degree subset sums to
rule out impossible factor degrees (often proving irreducibility outright),
lift the best prime's factorization to above twice the Mignotte bound, and
recombine subsets smallest-first with exact division checks.  Everything is
deterministic: probe primes ascend from 3, equal-degree splitting is seeded
from the input, subsets enumerate in sorted index order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .intpoly import IntPoly, content_primitive
from .modpoly import (
    _kron_mul,
    ddf_degree_multiset,
    factor_squarefree_mod_p,
    gfp_deriv,
    gfp_extgcd,
    gfp_gcd,
    gfp_mul,
    is_prime,
    reduce_mod_p,
)

# recombination subset budget before hunting for a sparser prime
_SUBSET_CAP = 1 << 20
_PROBE_COUNT = 3
_EXTRA_PROBES = 5


@dataclass(frozen=True)
class FactoredPoly:
    """sign * content * prod(factor^mult) with primitive positive-lc factors."""

    sign: int
    content: int
    factors: tuple[tuple[IntPoly, int], ...]

    def expand(self) -> IntPoly:
        out = IntPoly.constant(self.sign * self.content)
        for g, a in self.factors:
            out = out * g**a
        return out

    def degree(self) -> int:
        return sum((g.degree * a for g, a in self.factors), 0)

    def __str__(self) -> str:
        head = f"{self.sign * self.content}"
        body = " * ".join(f"({g})^{a}" if a > 1 else f"({g})" for g, a in self.factors)
        return f"{head} * {body}" if body else head


# -- integer polynomial gcd ------------------------------------------------


def _pp_positive(f: IntPoly) -> IntPoly:
    _, pp, _ = content_primitive(f)
    return pp


def gcd_z(f: IntPoly, g: IntPoly) -> IntPoly:
    """Nonnegative gcd in Z[t]; primitive positive-lc when nonconstant.

    A degree-0 gcd modulo any good prime certifies coprime primitive parts,
    which settles the common squarefree case without coefficient growth.
    The fallback is a primitive pseudo-remainder sequence.
    """
    if not f:
        return g if g.lc > 0 else -g
    if not g:
        return f if f.lc > 0 else -f
    cf, pf, _ = content_primitive(f)
    cg, pg, _ = content_primitive(g)
    c = math.gcd(cf, cg)
    if pf.is_constant() or pg.is_constant():
        return IntPoly.constant(c)
    # modular certificate: deg gcd_Z <= deg gcd_p at primes not dividing lcs
    tried = 0
    p = 3
    while tried < 4:
        if pf.lc % p and pg.lc % p:
            d = len(gfp_gcd(reduce_mod_p(pf.coeffs, p), reduce_mod_p(pg.coeffs, p), p)) - 1
            if d == 0:
                return IntPoly.constant(c)
            tried += 1
        p = _next_odd_prime(p)
    # primitive PRS
    a, b = (pf, pg) if pf.degree >= pg.degree else (pg, pf)
    while True:
        r = _pseudo_rem(a, b)
        if not r:
            return _pp_positive(b) * c
        a, b = b, _pp_positive(r)


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of lc(b)^(da-db+1) * a by b; integral by construction."""
    da, db = a.degree, b.degree
    if da < db:
        return a
    scaled = a * (b.lc ** (da - db + 1))
    _, r = scaled.divmod_q(b)
    assert all(x.denominator == 1 for x in r)
    return IntPoly(tuple(int(x) for x in r))


def _next_odd_prime(p: int) -> int:
    p += 2
    while not is_prime(p):
        p += 2
    return p


# -- squarefree decomposition over Z ---------------------------------------


def squarefree_decompose(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: f = +-prod(part^mult), mult strictly increasing.

    Parts are primitive with positive leading coefficient, squarefree, and
    pairwise coprime; the sign is sign(lc(f)).  Requires f nonzero.
    """
    if not f:
        raise ValueError("zero polynomial has no squarefree decomposition")
    _, g, _ = content_primitive(f)
    if g.is_constant():
        return []
    out: list[tuple[IntPoly, int]] = []
    df = g.derivative()
    a = gcd_z(g, df)
    # divisions below are exact over Z: divisors are primitive (Gauss)
    b = g.try_divide(a)
    c = df.try_divide(a)
    assert b is not None and c is not None
    d = c - b.derivative()
    i = 1
    while not b.is_constant():
        part = gcd_z(b, d)
        b2 = b.try_divide(part)
        c2 = d.try_divide(part)
        assert b2 is not None and c2 is not None
        if not part.is_constant():
            out.append((part, i))
        b, c = b2, c2
        d = c - b.derivative()
        i += 1
    return out


# -- arithmetic modulo p^l -------------------------------------------------


def _zm_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zm_mul(a: list[int], b: list[int], m: int) -> list[int]:
    if not a or not b:
        return []
    if len(a) + len(b) < 24 or max(a) == 0 or max(b) == 0:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % m
        return _zm_trim(out)
    return _zm_trim([c % m for c in _kron_mul(a, b)])


def _zm_sub(a: list[int], b: list[int], m: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _zm_trim(out)


def _zm_divmod_monic(a: list[int], b: list[int], m: int) -> tuple[list[int], list[int]]:
    """Division by a monic divisor over Z/m."""
    assert b and b[-1] == 1
    db = len(b) - 1
    if len(a) < len(b):
        return [], list(a)
    rem = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + db]
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                if bj:
                    rem[k + j] = (rem[k + j] - c * bj) % m
    return _zm_trim(q), _zm_trim(rem[:db])


def _hensel_pair(
    f: list[int], g: list[int], h: list[int], s: list[int], t: list[int], p: int, target: int
) -> tuple[list[int], list[int]]:
    """Lift f = g*h from mod p to mod p^target (g, h monic; s*g + t*h = 1).

    Quadratic iteration; moduli double each round and stop at p^target.
    """
    level = 1
    while level < target:
        level = min(2 * level, target)
        m = p**level
        fm = [c % m for c in f]
        e = _zm_sub(fm, _zm_mul(g, h, m), m)
        q, r = _zm_divmod_monic(_zm_mul(s, e, m), h, m)
        g = _zm_trim([x % m for x in _add_lists(g, _add_lists(_zm_mul(t, e, m), _zm_mul(q, g, m)))])
        h = _zm_trim([x % m for x in _add_lists(h, r)])
        b = _zm_sub(_add_lists(_zm_mul(s, g, m), _zm_mul(t, h, m)), [1], m)
        c, d = _zm_divmod_monic(_zm_mul(s, b, m), h, m)
        s = _zm_sub(s, d, m)
        t = _zm_sub(t, _add_lists(_zm_mul(t, b, m), _zm_mul(c, g, m)), m)
    return g, h


def _add_lists(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] += c
    return out


def _hensel_tree(f_star: list[int], hs: list[list[int]], p: int, target: int) -> list[list[int]]:
    """Lift monic f_star = prod(hs) from mod p to mod p^target, recursively."""
    if len(hs) == 1:
        m = p**target
        return [[c % m for c in f_star]]
    k = len(hs) // 2
    left, right = hs[:k], hs[k:]
    g0 = [1]
    for u in left:
        g0 = gfp_mul(g0, u, p)
    h0 = [1]
    for u in right:
        h0 = gfp_mul(h0, u, p)
    one, s, t = gfp_extgcd(g0, h0, p)
    assert len(one) == 1, "modular factors not coprime"
    g1, h1 = _hensel_pair(f_star, g0, h0, s, t, p, target)
    return _hensel_tree(g1, left, p, target) + _hensel_tree(h1, right, p, target)


# -- Zassenhaus ------------------------------------------------------------


def _mignotte_level(f: IntPoly, p: int) -> int:
    """Exponent l with p^l > 2 * (coefficient bound for lc-scaled factors)."""
    n = f.degree
    bound = math.comb(n, n // 2) * (math.isqrt(f.l2_norm_sq()) + 1) * abs(f.lc)
    l = 1
    while p**l <= 2 * bound:
        l += 1
    return l


def _good_primes(f: IntPoly, start: int, count: int) -> list[int]:
    """Odd primes keeping f squarefree with unit leading coefficient."""
    out = []
    p = start
    while len(out) < count:
        if f.lc % p:
            fb = reduce_mod_p(f.coeffs, p)
            if len(gfp_gcd(fb, gfp_deriv(fb, p), p)) == 1:
                out.append(p)
        p = _next_odd_prime(p)
    return out


def _subset_degrees(degs: list[int]) -> int:
    """Bitset of degrees achievable as sub-multiset sums."""
    reach = 1
    for d in degs:
        reach |= reach << d
    return reach


def degree_set_filter(f: IntPoly, target_degree: int, trials: int = 3) -> bool:
    """False only when provably no integer factor of target_degree exists.

    Checks whether target_degree is a subset sum of the mod-p irreducible
    factor degrees at each of `trials` good primes; sound because integer
    factors stay factors mod p.
    """
    if target_degree < 0 or target_degree > f.degree:
        return False
    if target_degree in (0, f.degree):
        return True
    # Repeated factors kill squarefreeness at every prime; cap the scan so
    # such inputs fall through to True rather than looping.
    p = 3
    found = 0
    for _ in range(max(24, 8 * trials)):
        if found >= trials:
            break
        if f.lc % p:
            fb = reduce_mod_p(f.coeffs, p)
            if len(gfp_gcd(fb, gfp_deriv(fb, p), p)) == 1:
                found += 1
                degs = ddf_degree_multiset(fb, p)
                if not (_subset_degrees(degs) >> target_degree) & 1:
                    return False
        p = _next_odd_prime(p)
    return True


def _sym(x: int, m: int) -> int:
    r = x % m
    return r - m if r > m // 2 else r


def _factor_squarefree(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree positive-lc polynomial."""
    if f.degree <= 1:
        return [f] if f.degree == 1 else []
    probes: list[tuple[int, list[int]]] = []  # (prime, degree multiset)
    possible = (1 << (f.degree + 1)) - 1
    for p in _good_primes(f, 3, _PROBE_COUNT):
        degs = ddf_degree_multiset(reduce_mod_p(f.coeffs, p), p)
        if len(degs) == 1:
            return [f]
        probes.append((p, degs))
        possible &= _subset_degrees(degs)
    proper = possible & ~(1 | (1 << f.degree))
    if proper == 0:
        return [f]
    probes.sort(key=lambda pr: len(pr[1]))
    best_p, best_degs = probes[0]
    if _combo_budget(len(best_degs)) > _SUBSET_CAP:
        # hunt for a sparser factorization pattern before recombining
        start = _next_odd_prime(max(pr[0] for pr in probes))
        extra = []
        p = start
        seen = 0
        while seen < _EXTRA_PROBES:
            found = _good_primes(f, p, 1)
            q = found[0]
            degs = ddf_degree_multiset(reduce_mod_p(f.coeffs, q), q)
            if len(degs) == 1:
                return [f]
            extra.append((q, degs))
            seen += 1
            p = _next_odd_prime(q)
        for q, degs in extra:
            possible &= _subset_degrees(degs)
        proper = possible & ~(1 | (1 << f.degree))
        if proper == 0:
            return [f]
        for q, degs in extra:
            if len(degs) < len(best_degs):
                best_p, best_degs = q, degs
    return _zassenhaus(f, best_p, possible)


def _combo_budget(k: int) -> int:
    return sum(math.comb(k, s) for s in range(1, k // 2 + 1))


def _zassenhaus(f: IntPoly, p: int, possible: int) -> list[IntPoly]:
    level = _mignotte_level(f, p)
    big = p**level
    lc_inv = pow(f.lc, -1, big)
    f_star = [c * lc_inv % big for c in f.coeffs]
    hs_p = factor_squarefree_mod_p(reduce_mod_p(f_star, p), p)
    hs = _hensel_tree(f_star, hs_p, p, level)
    hs.sort(key=lambda h: (len(h), tuple(reversed(h))))
    found: list[IntPoly] = []
    G = f
    s = 1
    while 2 * s <= len(hs):
        hit = False
        for combo in itertools.combinations(range(len(hs)), s):
            dsum = sum(len(hs[i]) - 1 for i in combo)
            if not (possible >> dsum) & 1:
                continue
            prod = [G.lc % big]
            for i in combo:
                prod = _zm_mul(prod, hs[i], big)
            cand = IntPoly(tuple(_sym(c, big) for c in prod))
            if not cand:
                continue
            _, cand_pp, _ = content_primitive(cand)
            g1, c1 = G(1), cand_pp(1)
            if g1 != 0 and (c1 == 0 or g1 % c1):
                continue
            gm1, cm1 = G(-1), cand_pp(-1)
            if gm1 != 0 and (cm1 == 0 or gm1 % cm1):
                continue
            q = G.try_divide(cand_pp)
            if q is not None:
                found.append(cand_pp)
                hs = [h for i, h in enumerate(hs) if i not in combo]
                G = q
                hit = True
                break
        if not hit:
            s += 1
    if G.degree > 0:
        _, gpp, _ = content_primitive(G)
        found.append(gpp)
    found.sort(key=lambda g: (g.degree, g.coeffs))
    return found


def factor_over_z(f: IntPoly) -> FactoredPoly:
    """Complete irreducible factorization over Z.

    Content and sign come out first, then any power of t, then Yun parts
    feed the Zassenhaus engine.  Factors are primitive, positive-lc,
    pairwise distinct, sorted by (degree, coefficients).
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    content, pp, sign = content_primitive(f)
    bag: dict[IntPoly, int] = {}
    k = pp.order_at_zero()
    if k:
        pp = pp.shift_down(k)
        bag[IntPoly.x()] = k
    for part, mult in squarefree_decompose(pp):
        for g in _factor_squarefree(part):
            bag[g] = bag.get(g, 0) + mult
    factors = tuple(sorted(bag.items(), key=lambda fm: (fm[0].degree, fm[0].coeffs)))
    return FactoredPoly(sign, content, factors)
