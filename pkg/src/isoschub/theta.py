"""Ring generated by one-row classes t_1, t_2, ... with a threshold k.

Elements are dicts mapping k-strict partition keys to integer (or
Fraction) coefficients; the key (a, b, ...) stands for the product
t_a t_b ....  A squared part m > k rewrites as

    t_m * t_m = 2 * sum_{i=1..m} (-1)^(i+1) t_{m+i} t_{m-i}

and repeating the rewrite brings any monomial into the k-strict basis.
At k = 0 the generators multiply like the q_r and the canonical classes
theta(lam, 0) are the Schur Q-functions.
"""

from collections import defaultdict
from fractions import Fraction
from itertools import permutations

from .formal import add_into, combine
from .partitions import get, is_k_strict, k_strict_partitions, strip, weight
from .raising import c_set, expand, strict_pairs

_STRAIGHTEN_CACHE: dict = {}


def straighten(alpha, k: int) -> dict[tuple[int, ...], int]:
    """Rewrite the monomial with index multiset alpha into the k-strict basis.

    Entries may be arbitrary integers: a negative index kills the term,
    zero indices drop out (t_0 = 1).
    """
    if any(a < 0 for a in alpha):
        return {}
    key = tuple(sorted((a for a in alpha if a), reverse=True))
    return dict(_straighten(key, k))


def _straighten(key, k):
    res = _STRAIGHTEN_CACHE.get((key, k))
    if res is not None:
        return res
    res = None
    for i in range(len(key) - 1):
        # leftmost adjacent equal pair above the threshold
        if key[i] == key[i + 1] and key[i] > k:
            m = key[i]
            rest = key[:i] + key[i + 2:]
            res = {}
            for j in range(1, m + 1):
                sub = tuple(sorted((a for a in rest + (m + j, m - j) if a),
                                   reverse=True))
                combine(res, _straighten(sub, k), 2 if j % 2 else -2)
            break
    if res is None:
        res = {key: 1}
    _STRAIGHTEN_CACHE[(key, k)] = res
    return res


_THETA_CACHE: dict = {}


def theta(lam, k: int) -> dict[tuple[int, ...], int]:
    """Canonical basis element for the k-strict partition lam.

    Built from the raising-operator expansion of lam with the inverted
    factors taken over the off-diagonal pairs (i, j) having
    lam_i + lam_j > 2k + j - i, then straightened. Unitriangular:
    the key lam itself carries coefficient 1 and every other key
    strictly dominates lam.
    """
    lam = strip(lam)
    assert is_k_strict(lam, k), (lam, k)
    res = _THETA_CACHE.get((lam, k))
    if res is None:
        raw = expand(strict_pairs(c_set(lam, k)), lam)
        res = {}
        for key, co in raw.items():
            combine(res, _straighten(key, k), co)
        _THETA_CACHE[(lam, k)] = res
    return dict(res)


def hat_theta(r: int, k: int) -> dict[tuple[int, ...], int]:
    """Dual one-column class: the r x r determinant det(t_{1+j-i}).

    Satisfies sum_{i=0..n} (-1)^i t_i hat_theta(n-i) = 0 for n >= 1.
    """
    if r < 0:
        return {}
    if r == 0:
        return {(): 1}
    raw = expand(frozenset(), (1,) * r)
    out: dict = {}
    for key, co in raw.items():
        combine(out, _straighten(key, k), co)
    return out


def skew_S(lam, mu, k: int) -> dict[tuple[int, ...], int]:
    """Determinant det(t_{lam_i - mu_j + j - i}) in the k-strict basis.

    Zero unless mu is contained in lam.
    """
    lam = strip(lam)
    mu = strip(mu)
    if len(mu) > len(lam):
        return {}
    n = len(lam)
    out: dict = {}
    for perm in permutations(range(n)):
        key = []
        dead = False
        inv = 0
        for i in range(n):
            r = lam[i] - get(mu, perm[i] + 1) + perm[i] - i
            if r < 0:
                dead = True
                break
            if r:
                key.append(r)
            inv += sum(1 for j in range(i) if perm[j] > perm[i])
        if dead:
            continue
        sign = -1 if inv % 2 else 1
        combine(out, _straighten(tuple(sorted(key, reverse=True)), k), sign)
    return out


def multiply(a: dict, b: dict, k: int) -> dict:
    """Product of two elements given in the k-strict monomial basis."""
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            c = ca * cb
            sub = _straighten(tuple(sorted(ka + kb, reverse=True)), k)
            for key, c2 in sub.items():
                add_into(out, key, c * c2)
    return out


def to_theta_basis(e: dict, k: int) -> dict:
    """Rewrite an element from the monomial basis to the canonical basis.

    Within one weight the lex-least key is dominance-minimal, so its
    monomial coefficient is already its canonical coefficient; peel it
    off and repeat.
    """
    work = dict(e)
    out: dict = {}
    while work:
        lam = min(work)
        c = work[lam]
        add_into(out, lam, c)
        combine(work, theta(lam, k), -c)
        assert lam not in work
    return out


def theta_sum(f: dict, k: int) -> dict:
    """Inverse of to_theta_basis: expand canonical-basis coefficients."""
    out: dict = {}
    for lam, c in f.items():
        combine(out, theta(lam, k), c)
    return out


_HAT_PRODUCT_CACHE: dict = {}


def _hat_product(alpha, k):
    res = _HAT_PRODUCT_CACHE.get((alpha, k))
    if res is None:
        if not alpha:
            res = {(): 1}
        else:
            res = multiply(_hat_product(alpha[1:], k), hat_theta(alpha[0], k), k)
        _HAT_PRODUCT_CACHE[(alpha, k)] = res
    return res


def _solve(rows, rhs):
    # exact Gauss-Jordan; every column must be a pivot
    n, m = len(rows), len(rows[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)]
           for row, b in zip(rows, rhs)]
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if aug[i][c]), None)
        assert p is not None, "transition matrix is singular"
        aug[r], aug[p] = aug[p], aug[r]
        f = aug[r][c]
        aug[r] = [x / f for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                g = aug[i][c]
                aug[i] = [x - g * y for x, y in zip(aug[i], aug[r])]
        r += 1
    for i in range(r, n):
        assert not aug[i][m], "inconsistent linear system"
    return [aug[i][m] for i in range(m)]


def to_hat_basis(e: dict, k: int) -> dict:
    """Coefficients of e on products of hat_theta classes.

    The products hat_theta(a_1) * hat_theta(a_2) * ... over k-strict
    (a_1, a_2, ...) span each graded piece over the rationals but are
    not dominance-triangular against the monomial basis, so each weight
    is resolved by a dense exact linear solve. Coefficients may be
    non-integral Fractions.
    """
    by_weight: dict = defaultdict(dict)
    for key, c in e.items():
        by_weight[weight(key)][key] = c
    out: dict = {}
    for d, target in sorted(by_weight.items()):
        basis = sorted(k_strict_partitions(d, k))
        cols = [_hat_product(lam, k) for lam in basis]
        keys = sorted(set(target) | {key for col in cols for key in col})
        mat = [[col.get(key, 0) for col in cols] for key in keys]
        rhs = [target.get(key, 0) for key in keys]
        for lam, c in zip(basis, _solve(mat, rhs)):
            add_into(out, lam, c)
    return out


def horizontal_strips(nu, size: int, cap: int) -> list[tuple[int, ...]]:
    """Partitions rho >= nu adding a horizontal strip of the given size.

    Interlacing: nu_i <= rho_i <= nu_{i-1}, with rho_1 <= cap. Used for
    the Pieri step e_size * s_{nu'} = sum s_{rho'}.
    """
    res = []
    nrows = len(nu) + 1

    def go(i, rem, acc):
        if i == nrows:
            if rem == 0:
                res.append(strip(acc))
            return
        lo = nu[i] if i < len(nu) else 0
        hi = min(cap if i == 0 else nu[i - 1], lo + rem)
        for v in range(lo, hi + 1):
            go(i + 1, rem - (v - lo), acc + (v,))

    go(0, size, ())
    return res


def mixed_expand(lam, k: int) -> dict:
    """Expansion into pairs (mu, nu): a strict-key x-part Q_mu times the
    Schur class of the conjugate of nu in the k extra variables.

    Each one-row class splits as t_a = sum_{i=0..min(k,a)} q_{a-i} e_i;
    the q-part is straightened at threshold 0 and converted to the
    canonical (Schur Q) basis, the e-part is folded into Schur classes
    by horizontal-strip Pieri steps, pruning nu_1 > k.
    """
    lam = strip(lam)
    assert is_k_strict(lam, k), (lam, k)
    raw = expand(strict_pairs(c_set(lam, k)), lam)
    out: dict = {}
    for alpha, co in raw.items():
        states: dict = {((), ()): 1}
        for a in alpha:
            nxt: dict = {}
            for (qk, nu), c in states.items():
                for i in range(0, min(k, a) + 1):
                    q = a - i
                    qk2 = qk if q == 0 else tuple(
                        sorted(qk + (q,), reverse=True))
                    for rho in horizontal_strips(nu, i, k):
                        add_into(nxt, (qk2, rho), c)
            states = nxt
        for (qk, nu), c in states.items():
            for mu, cq in to_theta_basis(dict(_straighten(qk, 0)), 0).items():
                add_into(out, (mu, nu), co * c * cq)
    return out


def mixed_to_json(e: dict) -> list[dict]:
    """Rows {"Q": mu, "s_conj_of": nu, "coeff": str}, sorted by key."""
    rows = []
    for (mu, nu) in sorted(e):
        c = e[(mu, nu)]
        rows.append({"Q": list(mu), "s_conj_of": list(nu), "coeff": str(c)})
    return rows
