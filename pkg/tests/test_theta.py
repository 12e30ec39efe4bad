import random

from isoschub.formal import combine, is_zero, scaled
from isoschub.partitions import (contains, dominates, get, is_k_strict,
                                 k_strict_partitions, partitions_of, strip,
                                 weight)
from isoschub.polyeval import (const, e_list, evaluate, p_det, p_mul, q_basis_poly,
                               q_det_poly, q_list, q_monomial_poly,
                               schur_conj_poly)
from isoschub.raising import c_set, expand, pfaffian_expand, strict_pairs
from isoschub.theta import (hat_theta, horizontal_strips, mixed_expand,
                            mixed_to_json, multiply, skew_S, straighten, theta,
                            theta_sum, to_hat_basis, to_theta_basis)

UNIT = {(): 1}


def gen(r):
    # the one-row element t_r
    return UNIT if r == 0 else {(r,): 1}


def straighten_rng(alpha, k, rng):
    # strategy-independent oracle: rewrite a randomly chosen equal pair
    if any(a < 0 for a in alpha):
        return {}
    key = tuple(sorted((a for a in alpha if a), reverse=True))
    spots = [i for i in range(len(key) - 1)
             if key[i] == key[i + 1] and key[i] > k]
    if not spots:
        return {key: 1}
    i = rng.choice(spots)
    m = key[i]
    rest = key[:i] + key[i + 2:]
    out = {}
    for j in range(1, m + 1):
        combine(out, straighten_rng(rest + (m + j, m - j), k, rng),
                2 if j % 2 else -2)
    return out


def test_straighten_examples():
    assert straighten((2, 2), 1) == {(3, 1): 2, (4,): -2}
    # already reduced keys pass through
    assert straighten((3, 1), 1) == {(3, 1): 1}
    assert straighten((2, 2), 2) == {(2, 2): 1}
    # zeros drop, negatives kill
    assert straighten((3, 0, 1, 0), 1) == {(3, 1): 1}
    assert straighten((3, -1), 1) == {}
    assert straighten((), 0) == {(): 1}


def test_straighten_basis_and_weight():
    for k in range(3):
        for d in range(9):
            for alpha in partitions_of(d):
                res = straighten(alpha, k)
                for key, c in res.items():
                    assert is_k_strict(key, k)
                    assert weight(key) == d
                    assert key == alpha or dominates(key, alpha)


def test_straighten_confluence():
    rng = random.Random(20260819)
    for k in range(3):
        for d in range(9):
            for alpha in partitions_of(d):
                want = straighten(alpha, k)
                for _ in range(3):
                    assert straighten_rng(alpha, k, rng) == want


def test_theta_examples():
    assert theta((3, 1), 1) == {(3, 1): 1, (4,): -2}
    # single rows have no pair factors at all
    for r in range(1, 6):
        assert theta((r,), 2) == {(r,): 1}
    # at k = 0 a fully strict two-row case picks up the inverted factor
    assert theta((2, 1), 0) == {(2, 1): 1, (3,): -2}


def test_theta_unitriangular():
    for k in range(3):
        for d in range(9):
            for lam in k_strict_partitions(d, k):
                res = theta(lam, k)
                assert res.pop(lam) == 1
                for key in res:
                    assert dominates(key, lam) and key != lam


def test_theta_k0_is_pfaffian_route():
    # both routes expand the same operator series for strict shapes
    for d in range(9):
        for lam in k_strict_partitions(d, 0):
            raw = pfaffian_expand(lam)
            out = {}
            for key, c in raw.items():
                combine(out, straighten(key, 0), c)
            assert out == theta(lam, 0)


def test_hat_theta_equals_column():
    for k in (1, 2, 3):
        for r in range(9):
            assert hat_theta(r, k) == theta((1,) * r, k)
    assert hat_theta(-1, 2) == {}
    assert hat_theta(0, 2) == UNIT
    assert hat_theta(1, 2) == {(1,): 1}


def test_duality_recurrence():
    for k in (1, 2, 3):
        for n in range(1, 9):
            acc = {}
            for i in range(n + 1):
                term = multiply(gen(i), hat_theta(n - i, k), k)
                combine(acc, term, -1 if i % 2 else 1)
            assert is_zero(acc), (k, n)


def test_multiply_basics():
    a = theta((3, 1), 1)
    assert multiply(UNIT, a, 1) == a
    assert multiply(gen(2), gen(2), 1) == straighten((2, 2), 1)
    b = theta((2,), 1)
    assert multiply(a, b, 1) == multiply(b, a, 1)
    ab = multiply(multiply(a, b, 1), gen(1), 1)
    assert ab == multiply(a, multiply(b, gen(1), 1), 1)


def test_skew_S_examples():
    assert skew_S((2, 1), (1,), 1) == {(1, 1): 1}
    # indices out of containment give zero
    assert skew_S((2, 1), (3,), 1) == {}
    assert skew_S((1,), (1, 1), 1) == {}
    assert skew_S((2,), (), 3) == {(2,): 1}


def test_skew_S_matches_theta_when_no_pairs():
    for k in range(4):
        for d in range(8):
            for lam in k_strict_partitions(d, k):
                if strict_pairs(c_set(lam, k)):
                    continue
                assert skew_S(lam, (), k) == theta(lam, k), (lam, k)


def test_geometric_factors_invert():
    # multiplying the inverted pair factors back recovers the plain
    # determinant expansion: expand((), lam) = sum over subsets S of the
    # pair set of expand(pairs, lam shifted by S)
    for k in range(4):
        for d in range(10):
            for lam in k_strict_partitions(d, k):
                pairs = sorted(strict_pairs(c_set(lam, k)))
                total = {}
                for bits in range(1 << len(pairs)):
                    seq = list(lam)
                    for t, (i, j) in enumerate(pairs):
                        if bits >> t & 1:
                            seq[i - 1] += 1
                            seq[j - 1] -= 1
                    combine(total, expand(frozenset(pairs), tuple(seq)))
                assert total == expand(frozenset(), lam), (lam, k)


def test_to_theta_basis_round_trip():
    rng = random.Random(7)
    for k in range(3):
        for _ in range(8):
            e = {}
            for d in range(2, 7):
                lams = k_strict_partitions(d, k)
                lam = lams[rng.randrange(len(lams))]
                combine(e, {lam: rng.randrange(-4, 5)})
            e = {key: c for key, c in e.items() if c}
            f = to_theta_basis(e, k)
            assert theta_sum(f, k) == e
    assert to_theta_basis(theta((3, 1), 1), 1) == {(3, 1): 1}
    assert to_theta_basis({}, 1) == {}


def test_hat_basis_identity():
    got = to_hat_basis(scaled(theta((3, 1), 1), 3), 1)
    assert got == {(4,): 2, (3, 1): -5, (2, 1, 1): 4, (1, 1, 1, 1): -1}


def test_hat_basis_round_trip():
    for k in (1, 2):
        for lam in [(3, 1), (2, 2, 1), (4, 2), (2, 1, 1)]:
            if not is_k_strict(lam, k):
                continue
            e = theta(lam, k)
            f = to_hat_basis(e, k)
            back = {}
            for alpha, c in f.items():
                acc = UNIT
                for a in alpha:
                    acc = multiply(acc, hat_theta(a, k), k)
                combine(back, acc, c)
            assert back == e, (lam, k)


def test_horizontal_strips():
    assert horizontal_strips((), 0, 2) == [()]
    assert set(horizontal_strips((2,), 1, 3)) == {(2, 1), (3,)}
    assert horizontal_strips((), 2, 1) == []
    assert set(horizontal_strips((2, 1), 2, 3)) == {(2, 2, 1), (3, 2), (3, 1, 1)}


def test_mixed_expand_table():
    got = mixed_expand((3, 2, 1), 1)
    assert got == {
        ((4, 2), ()): 1,
        ((3, 2, 1), ()): 1,
        ((4, 1), (1,)): 1,
        ((3, 2), (1,)): 2,
        ((3, 1), (1, 1)): 2,
        ((2, 1), (1, 1, 1)): 1,
    }
    rows = mixed_to_json(got)
    assert {"Q": [3, 2], "s_conj_of": [1], "coeff": "2"} in rows
    assert len(rows) == 6


def test_mixed_expand_k0():
    for d in range(8):
        for lam in k_strict_partitions(d, 0):
            assert mixed_expand(lam, 0) == {(lam, ()): 1}


def test_mixed_nonnegative():
    for k in (1, 2):
        for d in range(9):
            for lam in k_strict_partitions(d, k):
                for (mu, nu), c in mixed_expand(lam, k).items():
                    assert is_k_strict(mu, 0)
                    assert not nu or nu[0] <= k
                    assert weight(mu) + weight(nu) == d
                    assert c > 0, (lam, k, mu, nu, c)


def test_evaluate_examples():
    assert evaluate({(1,): 1}, 1, 1) == {(1, 0): 2, (0, 1): 1}
    assert evaluate({(1,): 1}, 0, 2) == {(1, 0): 2, (0, 1): 2}
    assert evaluate({}, 1, 2) == {}
    assert evaluate(UNIT, 0, 1) == {(0,): 1}


def test_mixed_matches_theta_eval():
    for k in (1, 2):
        for d in range(6):
            for lam in k_strict_partitions(d, k):
                m = max(d, 1)
                lhs = evaluate(theta(lam, k), k, m)
                rhs = evaluate(mixed_expand(lam, k), k, m)
                assert lhs == rhs, (lam, k)


def test_even_odd_generator_identity():
    # sum_{i+j=r} (-1)^i t_i t_j vanishes for odd r and equals
    # (-1)^(r/2) e_{r/2} of the squared extra variables for even r
    for k in (1, 2, 3):
        for r in range(1, 2 * k + 2):
            acc = {}
            for i in range(r + 1):
                combine(acc, multiply(gen(i), gen(r - i), k),
                        -1 if i % 2 else 1)
            if r % 2:
                assert is_zero(acc), (k, r)
                continue
            m = r
            nv = m + k
            lhs = evaluate(acc, k, m)
            es = e_list(m, m + k, nv, r // 2)
            sq = {tuple(2 * x for x in e): c for e, c in es[r // 2].items()}
            assert lhs == scaled(sq, -1 if (r // 2) % 2 else 1), (k, r)


def subpartitions(lam):
    out = []
    for d in range(weight(lam) + 1):
        for mu in partitions_of(d, max_part=lam[0] if lam else 0,
                                max_len=len(lam)):
            if contains(lam, mu):
                out.append(mu)
    if not lam:
        out.append(())
    return out


def strict_subpartitions(lam, min_len):
    return [mu for mu in subpartitions(lam)
            if is_k_strict(mu, 0) and len(mu) >= min_len]


def no_pair_regime(lam, k):
    return all(lam[i] + lam[j] <= 2 * k + (j - i)
               for i in range(len(lam)) for j in range(i + 1, len(lam)))


def all_pair_regime(lam, k):
    return all(lam[i] + lam[j] > 2 * k + (j - i)
               for i in range(len(lam)) for j in range(i + 1, len(lam)))


def thcor_a_holds(lam, k, m=None):
    # sum over mu inside lam of det(q_{mu_i+j-i}) times s_{lam'/mu'}(y)
    lam = strip(lam)
    assert no_pair_regime(lam, k)
    bound = weight(lam)
    if m is None:
        m = max(bound, 1)
    nv = m + k
    qs = q_list(m, nv, bound)
    rhs = {}
    for mu in subpartitions(lam):
        sp = schur_conj_poly(lam, mu, m, m + k, nv, bound)
        if sp:
            combine(rhs, p_mul(q_det_poly(mu, qs, nv, bound), sp, bound))
    return evaluate(mixed_expand(lam, k), k, m, bound) == rhs


def thcor_b_holds(lam, k, m=None):
    # sum over strict mu of Q_mu(x) det(e_{lam_i - mu_j}(y)),
    # mu inside lam with at most one row fewer
    lam = strip(lam)
    assert all_pair_regime(lam, k) and is_k_strict(lam, 0)
    bound = weight(lam)
    if m is None:
        m = max(bound, 1)
    nv = m + k
    ell = len(lam)
    qs = q_list(m, nv, bound)
    top = lam[0] if lam else 1
    es = e_list(m, m + k, nv, top)
    rhs = {}
    for mu in strict_subpartitions(lam, ell - 1):
        mat = []
        for i in range(ell):
            row = []
            for j in range(ell):
                d = lam[i] - get(mu, j + 1)
                row.append(es[d] if 0 <= d <= top else {})
            mat.append(row)
        det = p_det(mat, nv, bound)
        if det:
            combine(rhs, p_mul(q_basis_poly(mu, qs, nv, bound), det, bound))
    return evaluate(mixed_expand(lam, k), k, m, bound) == rhs


def test_closed_form_no_pair_regime():
    for lam, k in [((1, 1), 1), ((2, 1), 1), ((2, 1, 1), 1), ((2, 2, 1), 2),
                   ((3, 2, 1), 2)]:
        assert thcor_a_holds(lam, k), (lam, k)


def test_closed_form_all_pair_regime():
    for lam, k in [((2, 1), 0), ((3, 2), 0), ((3, 1), 1), ((4, 2), 1),
                   ((4, 3), 2)]:
        assert thcor_b_holds(lam, k), (lam, k)


def test_skew_S_separates_variables():
    # the two-variable-family determinant splits as a sum over middle
    # shapes of a pure-x determinant times a skew Schur class in y
    for k in (1, 2):
        for lam in [(1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1), (2, 1, 1),
                    (2, 2, 1)]:
            for mu in subpartitions(lam):
                bound = weight(lam)
                m = max(bound, 1)
                nv = m + k
                qs = q_list(m, nv, bound)
                lhs = evaluate(skew_S(lam, mu, k), k, m, bound)
                rhs = {}
                for nu in subpartitions(lam):
                    if not contains(nu, mu):
                        continue
                    xpart = {}
                    for key, c in skew_S(lam, nu, 0).items():
                        combine(xpart, q_monomial_poly(key, qs, nv, bound), c)
                    sp = schur_conj_poly(nu, mu, m, m + k, nv, bound)
                    if xpart and sp:
                        combine(rhs, p_mul(xpart, sp, bound))
                assert lhs == rhs, (lam, mu, k)
