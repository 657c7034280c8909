import itertools
import random
from functools import reduce

import pytest

from scatterkit.classify import (
    ALEPH0,
    Family,
    SpaceClass,
    canonical,
    class_profile,
    classify,
    compactify,
    derived_order_type,
    homeomorphic,
    point_rank,
)
from scatterkit.errors import OutOfSpaceError, UnrepresentableProfileError
from scatterkit.ordinal import ONE, ZERO, Ordinal, add, omega_power, parse
from scatterkit.verify import POOL, random_ordinal


def o(text):
    return parse(text)


def decomposition_canonical(gamma: Ordinal) -> Ordinal:
    """Independent canonical form via splitting into clopen summand pieces.

    The sum is cut into one piece per CNF summand: every piece except the
    final one is compactified (it is followed by something, so it is a
    closed-and-open initial segment), then the pieces are reattached in
    ascending order, which only uses ordinal addition.
    """
    if gamma.is_finite:
        return gamma
    terms = list(gamma.terms)
    finite_tail = 0
    if terms[-1][0].is_zero:
        finite_tail = terms[-1][1]
        terms = terms[:-1]
    summands = []
    for e, c in terms:
        summands.extend([omega_power(e)] * c)
    if finite_tail:
        pieces = [add(s, ONE) for s in summands]
        pieces.append(Ordinal.from_int(finite_tail - 1))
        pieces.sort()
        return reduce(add, pieces)
    pieces = sorted(add(s, ONE) for s in summands[:-1])
    return reduce(add, pieces + [summands[-1]])


def test_classify_examples():
    assert classify(o("5")) == SpaceClass(Family.FINITE, 5)
    assert classify(ZERO) == SpaceClass(Family.FINITE, 0)
    assert classify(o("w^2*3 + w*2 + 5")) == SpaceClass(Family.COMPACT_INFINITE, 3, o("2"))
    assert classify(o("w^(w) + w^3*2 + w")) == SpaceClass(Family.LIMIT_MIXED, 1, o("w"), o("1"))
    assert classify(o("w*2")) == SpaceClass(Family.LIMIT_PURE, 2, o("1"))


def test_canonical_examples():
    assert canonical(o("w + w^2 + 1")) == o("w^2 + 1")
    assert canonical(o("w^2")) == o("w^2")
    assert canonical(o("w^3 + w^2*4 + w")) == o("w^3 + w")


def test_canonical_matches_decomposition_oracle_on_examples():
    for text in ("w^2*3 + w*2 + 5", "w^3 + w^2*4 + w", "w + w^2 + 1", "w*2", "w^(w) + w^3*2 + w"):
        assert canonical(o(text)) == decomposition_canonical(o(text))


def test_canonical_matches_decomposition_oracle_randomised():
    rng = random.Random(20)
    for _ in range(500):
        gamma = random_ordinal(rng)
        assert canonical(gamma) == decomposition_canonical(gamma)


def test_homeomorphic_examples():
    assert homeomorphic(o("w^2 + w + 1"), o("w + w^2 + 1"))
    assert not homeomorphic(o("w^2 + w"), o("w^2"))
    gamma = o("w^(w)*4 + w^2 + 3")
    assert homeomorphic(gamma, gamma)


def test_commutation_laws():
    rng = random.Random(21)
    count = 0
    while count < 200:
        a, b, c = (random_ordinal(rng) for _ in range(3))
        if a.is_finite or b.is_finite or c.is_zero:
            continue
        count += 1
        assert classify(add(add(a, b), c)) == classify(add(add(b, a), c))
        assert classify(add(add(a, b), ONE)) == classify(add(add(b, a), ONE))


def test_compactify():
    assert compactify(o("w")) == o("w + 1")
    assert compactify(o("w^2 + 1")) == o("w^2 + 1")
    assert compactify(ZERO) == ZERO
    assert classify(compactify(o("w^2*2 + w"))) == SpaceClass(Family.COMPACT_INFINITE, 2, o("2"))


def test_compactified_limits_join_the_compact_family():
    for alpha in POOL:
        for k in (1, 2, 3):
            pure = SpaceClass(Family.LIMIT_PURE, k, alpha).canonical_ordinal()
            assert classify(compactify(pure)) == SpaceClass(Family.COMPACT_INFINITE, k, alpha)
            for beta in POOL:
                if beta < alpha:
                    mixed = SpaceClass(Family.LIMIT_MIXED, k, alpha, beta).canonical_ordinal()
                    assert classify(compactify(mixed)) == SpaceClass(
                        Family.COMPACT_INFINITE, k, alpha
                    )


def test_space_class_validation():
    with pytest.raises(ValueError):
        SpaceClass(Family.LIMIT_MIXED, 1, o("2"), o("2"))  # beta < alpha required
    with pytest.raises(ValueError):
        SpaceClass(Family.COMPACT_INFINITE, 0, o("1"))
    with pytest.raises(ValueError):
        SpaceClass(Family.LIMIT_PURE, 1, ZERO)


def test_point_rank_examples():
    assert point_rank(ZERO, o("w")) == ZERO
    assert point_rank(o("w^2*3"), o("w^2*3 + 1")) == o("2")
    assert point_rank(o("w^(w)"), o("w^(w) + 1")) == o("w")
    with pytest.raises(OutOfSpaceError):
        point_rank(o("w"), o("w"))


def test_derived_order_type_examples():
    assert derived_order_type(o("w^2 + 1"), ONE) == o("w + 1")
    gamma = o("w^(w) + 3")
    assert derived_order_type(gamma, ZERO) == gamma
    assert derived_order_type(o("w^2*3 + 1"), o("2")) == o("3")


def test_derived_iteration_consistency():
    # one extra derivative step agrees with raising the level by one
    for a, b, c in itertools.product(range(4), repeat=3):
        gamma_terms = []
        if a:
            gamma_terms.append(("w^2*%d" % a))
        if b:
            gamma_terms.append("w*%d" % b)
        if c:
            gamma_terms.append(str(c))
        if not gamma_terms:
            continue
        gamma = o(" + ".join(gamma_terms))
        for beta in range(3):
            tau = derived_order_type(gamma, Ordinal.from_int(beta))
            assert derived_order_type(tau, ONE) == derived_order_type(
                gamma, Ordinal.from_int(beta + 1)
            )


def test_class_profile_examples():
    assert class_profile(o("3")) == [(ZERO, 3)]
    assert class_profile(o("w^2*3 + 1")) == [(ZERO, ALEPH0), (ONE, ALEPH0), (o("2"), 3)]
    assert class_profile(o("w + 1")) == [(ZERO, ALEPH0), (ONE, 1)]
    assert class_profile(ZERO) == []


def test_class_profile_top_level_counts_k():
    for alpha in (1, 2, 3):
        for k in (1, 2, 3, 4):
            gamma = add(omega_power(alpha, k), ONE)
            profile = class_profile(gamma)
            assert profile[-1] == (Ordinal.from_int(alpha), k)
            assert len(profile) == alpha + 1


def test_class_profile_unrepresentable():
    with pytest.raises(UnrepresentableProfileError):
        class_profile(o("w^(w)"))
    with pytest.raises(UnrepresentableProfileError):
        class_profile(o("w^(w + 1)*2 + w"))


def test_classify_idempotence_randomised():
    rng = random.Random(22)
    for _ in range(300):
        gamma = random_ordinal(rng)
        can = canonical(gamma)
        assert canonical(can) == can
        assert classify(can) == classify(gamma)
