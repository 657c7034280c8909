import itertools
import random
from math import factorial

import pytest

from scatterkit.errors import (
    BoundExceededError,
    DomainError,
    UnknownPointError,
    ValidationError,
)
from scatterkit.finite import (
    FiniteSpace,
    PermutationGroup,
    cb_data,
    conjugacy_classes,
    enumerate_preorder_spaces,
    enumerate_t0_spaces,
    fixator,
    homeo_group,
    is_fully_transitive,
    normal_subgroups,
    separation_report,
    similar,
    similar_exhaustive,
    similarity_partition,
    similarity_witness,
    swap_homeo,
    verify_remark19,
)
from scatterkit.verify import chain_space, discrete_space, double_fan_space, star_space

CHAIN3 = FiniteSpace(("a", "b", "c"), {"a": {"a"}, "b": {"b"}, "c": {"a", "b", "c"}})


def two_fans():
    return FiniteSpace(
        ("a1", "a2", "c1", "b1", "b2", "b3", "c2"),
        {
            "a1": {"a1"},
            "a2": {"a2"},
            "c1": {"c1", "a1", "a2"},
            "b1": {"b1"},
            "b2": {"b2"},
            "b3": {"b3"},
            "c2": {"c2", "b1", "b2", "b3"},
        },
    )


# --- validation ---------------------------------------------------------------

def test_validate_accepts_good_spaces():
    assert CHAIN3.size == 3
    assert discrete_space(4).size == 4
    assert FiniteSpace((), {}).size == 0


def test_validate_rejects_transitivity_failure():
    with pytest.raises(ValidationError, match="transitivity"):
        FiniteSpace(("a", "b", "c"), {"a": {"a", "b"}, "b": {"b", "c"}, "c": {"c"}})


def test_validate_rejects_reflexivity_failure():
    with pytest.raises(ValidationError, match="reflexivity"):
        FiniteSpace(("a", "b"), {"a": {"b"}, "b": {"b"}})


def test_validate_rejects_bad_names():
    with pytest.raises(ValidationError, match="unknown point"):
        FiniteSpace(("a",), {"a": {"a", "z"}})
    with pytest.raises(ValidationError, match="duplicate"):
        FiniteSpace(("a", "a"), {"a": {"a"}})


def test_parse_round_trip():
    text = "# demo\na: a\nb: b\nc: a b c\n"
    space = FiniteSpace.parse(text)
    assert space == CHAIN3
    assert FiniteSpace.parse(space.to_text()) == space


# --- separation and CB data ---------------------------------------------------

def test_separation_examples():
    rep = separation_report(CHAIN3)
    assert (rep.t0, rep.t1, rep.scattered) == (True, False, True)
    indiscrete = FiniteSpace(("a", "b"), {"a": {"a", "b"}, "b": {"a", "b"}})
    rep2 = separation_report(indiscrete)
    assert (rep2.t0, rep2.scattered) == (False, False)
    rep3 = separation_report(discrete_space(4))
    assert (rep3.t0, rep3.t1, rep3.scattered) == (True, True, True)


def test_cb_data_examples():
    data = cb_data(CHAIN3)
    assert data.levels == (frozenset("abc"), frozenset("c"), frozenset())
    assert data.rank_of == {"a": 0, "b": 0, "c": 1}
    assert data.rank == 2
    assert cb_data(discrete_space(3)).rank == 1
    chain = chain_space(3)
    assert [cb_data(chain).rank_of[p] for p in chain.points] == [0, 1, 2]


def test_scattered_iff_t0_small():
    for n in range(0, 4):
        for space in enumerate_preorder_spaces(n):
            rep = separation_report(space)
            assert rep.scattered == rep.t0


# --- similarity -----------------------------------------------------------------

def test_similar_examples():
    assert similar(CHAIN3, "a", "b", cross_check=True)
    assert similar(CHAIN3, "c", "c", cross_check=True)
    assert not similar(CHAIN3, "a", "c", cross_check=True)
    fans = two_fans()
    assert not similar(fans, "c1", "c2", cross_check=True)
    assert similar(fans, "a1", "b3", cross_check=True)


def test_similarity_witness_maps_x_to_y():
    witness = similarity_witness(CHAIN3, "a", "b")
    assert witness == {"a": "b"}
    assert similarity_witness(CHAIN3, "a", "c") is None


def _random_preorder(rng, n):
    names = tuple("abcdefg"[:n])
    masks = []
    for i in range(n):
        m = 1 << i
        for j in range(n):
            if j != i and rng.random() < 0.3:
                m |= 1 << j
        masks.append(m)
    changed = True
    while changed:  # transitive closure
        changed = False
        for i in range(n):
            merged = masks[i]
            probe = merged
            while probe:
                low = probe & -probe
                merged |= masks[low.bit_length() - 1]
                probe &= probe - 1
            if merged != masks[i]:
                masks[i] = merged
                changed = True
    table = {
        names[i]: {names[j] for j in range(n) if (masks[i] >> j) & 1} for i in range(n)
    }
    return FiniteSpace(names, table)


def test_minimal_criterion_agrees_with_exhaustive_search():
    for n in range(0, 5):
        for space in enumerate_preorder_spaces(n):
            for x, y in itertools.combinations(space.points, 2):
                assert similar(space, x, y) == similar_exhaustive(space, x, y)
    # random 5-point preorders on top of the exhaustive small cases
    rng = random.Random(5)
    for _ in range(150):
        space = _random_preorder(rng, 5)
        for x, y in itertools.combinations(space.points, 2):
            assert similar(space, x, y) == similar_exhaustive(space, x, y)


def test_similarity_partition_examples():
    assert similarity_partition(CHAIN3).blocks == (("a", "b"), ("c",))
    assert similarity_partition(discrete_space(5)).blocks == (tuple(f"p{i}" for i in range(1, 6)),)
    fans = two_fans()
    assert similarity_partition(fans).blocks == (
        ("a1", "a2", "b1", "b2", "b3"),
        ("c1",),
        ("c2",),
    )


# --- homeomorphism group ---------------------------------------------------------

def test_homeo_group_examples():
    group = homeo_group(CHAIN3)
    assert group.order == 2
    assert sorted(group.cycle_string(g) for g in group.sorted_elements()) == ["(a b)", "id"]
    assert homeo_group(discrete_space(4)).order == factorial(4)
    assert homeo_group(two_fans()).order == factorial(2) * factorial(3)


def test_homeo_group_respects_blocks():
    for space in (CHAIN3, two_fans(), double_fan_space(), star_space(3, 2)):
        part = similarity_partition(space)
        group = homeo_group(space)
        for perm in group.elements:
            mapping = group.as_mapping(perm)
            for block in part.blocks:
                assert {mapping[p] for p in block} == set(block)


def _brute_force_homeos(space):
    n = space.size
    opens = [space.min_open[p] for p in space.points]
    found = []
    for perm in itertools.permutations(range(n)):
        if all(
            {space.points[perm[space.index(q)]] for q in opens[i]}
            == opens[perm[i]]
            for i in range(n)
        ):
            found.append(perm)
    return set(found)


def test_homeo_group_complete_against_brute_force():
    # guards the search kernel (and its colour refinement) against
    # over-pruning: the pruned search must find every homeomorphism
    for n in range(0, 5):
        for space in enumerate_preorder_spaces(n):
            assert set(homeo_group(space).elements) == _brute_force_homeos(space)
    rng = random.Random(9)
    for _ in range(40):
        space = _random_preorder(rng, 6)
        assert set(homeo_group(space).elements) == _brute_force_homeos(space)


def test_homeo_group_bounds():
    with pytest.raises(BoundExceededError):
        homeo_group(discrete_space(13))
    with pytest.raises(BoundExceededError):
        homeo_group(discrete_space(7), max_order=100)
    assert homeo_group(discrete_space(7), max_points=7).order == factorial(7)


def test_fixator():
    group = homeo_group(CHAIN3)
    assert fixator(group, []).order == 2
    assert fixator(group, ["a"]).order == 1
    assert fixator(group, CHAIN3.points).order == 1
    with pytest.raises(UnknownPointError):
        fixator(group, ["zz"])


# --- full transitivity ------------------------------------------------------------

def test_full_transitivity_examples():
    assert is_fully_transitive(CHAIN3).holds
    assert is_fully_transitive(discrete_space(1)).holds
    assert is_fully_transitive(FiniteSpace((), {})).holds
    report = is_fully_transitive(two_fans())
    assert not report.holds
    assert report.failure is not None
    assert report.group_order == 12
    assert report.expected_order == factorial(5)


def test_full_transitivity_methods_agree_exhaustively():
    for n in range(0, 5):
        for space in enumerate_t0_spaces(n):
            report = is_fully_transitive(space)
            assert report.direct_check == report.order_formula


# --- swaps -------------------------------------------------------------------------

def test_swap_on_discrete_space():
    space = discrete_space(4)
    result = swap_homeo(space, "p1", "p3", ["p2"])
    assert result.ok
    assert result.permutation == {"p1": "p3", "p3": "p1", "p2": "p2", "p4": "p4"}


def test_swap_with_fixed_edge_point():
    result = swap_homeo(CHAIN3, "a", "b", ["c"])
    assert result.ok
    assert result.permutation == {"a": "b", "b": "a", "c": "c"}


def test_swap_fails_without_clopen_separation():
    result = swap_homeo(CHAIN3, "a", "b", [])
    assert not result.ok
    assert "component" in result.reason


def test_swap_verifies_the_glued_permutation():
    # u and v are similar, {u} and {v} are clopen after deleting c, but the
    # minimal open of c only contains u, so the naive swap is not a
    # homeomorphism and must be rejected
    space = FiniteSpace(("u", "v", "c"), {"u": {"u"}, "v": {"v"}, "c": {"c", "u"}})
    assert similar(space, "u", "v", cross_check=True)
    result = swap_homeo(space, "u", "v", ["c"])
    assert not result.ok
    assert "minimal open" in result.reason


def test_swap_precondition_errors():
    with pytest.raises(DomainError, match="not similar"):
        swap_homeo(CHAIN3, "a", "c", [])
    with pytest.raises(DomainError, match="avoid"):
        swap_homeo(CHAIN3, "a", "b", ["a"])


# --- normal subgroups ----------------------------------------------------------------

def test_conjugacy_class_count_s3():
    group = homeo_group(discrete_space(3))
    assert len(conjugacy_classes(group)) == 3


def test_normal_subgroups_s3():
    group = homeo_group(discrete_space(3))
    subs = normal_subgroups(group)
    assert [s.order for s in subs] == [1, 3, 6]


def test_normal_subgroups_s4_has_klein_four():
    group = homeo_group(discrete_space(4))
    subs = normal_subgroups(group)
    assert [s.order for s in subs] == [1, 4, 12, 24]


def test_normal_subgroups_2x2():
    group = homeo_group(double_fan_space())
    assert group.order == 4
    subs = normal_subgroups(group)
    assert [s.order for s in subs] == [1, 2, 2, 2, 4]


def test_normal_subgroups_trivial():
    group = PermutationGroup.trivial(("x",))
    assert [s.order for s in normal_subgroups(group)] == [1]


def test_normal_subgroup_bound():
    group = homeo_group(discrete_space(5))
    with pytest.raises(BoundExceededError):
        normal_subgroups(group, max_order=100)


# --- Remark 19 verifier ----------------------------------------------------------------

def test_remark19_single_class_of_three():
    report = verify_remark19(discrete_space(3))
    assert report.ok and report.matches_exactly
    assert sorted(c[1].order for c in report.candidates) == [1, 3, 6]


def test_remark19_size_four_includes_klein_group():
    report = verify_remark19(discrete_space(4))
    assert report.matches_exactly
    assert sorted(c[1].order for c in report.candidates) == [1, 4, 12, 24]


def test_remark19_double_fan_reports_diagonal():
    report = verify_remark19(double_fan_space())
    assert report.ok
    assert len(report.off_list) == 1
    off = report.off_list[0]
    assert off.order == 2
    assert set(off.elements) == {(0, 1, 2, 3), (1, 0, 3, 2)}


def test_remark19_requires_full_transitivity():
    with pytest.raises(DomainError):
        verify_remark19(two_fans())


# --- enumeration -------------------------------------------------------------------------

def test_preorder_counts():
    assert [sum(1 for _ in enumerate_preorder_spaces(n)) for n in range(5)] == [1, 1, 4, 29, 355]


def test_t0_counts():
    assert [sum(1 for _ in enumerate_t0_spaces(n)) for n in range(5)] == [1, 1, 3, 19, 219]
