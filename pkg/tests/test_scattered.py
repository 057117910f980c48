import json

import pytest

from spinchains.chains import (
    ChainSet,
    extract_involution,
    involves_all_simple_reflections,
    is_interlaced,
    is_involution,
    lambda_doubled,
)
from spinchains.scattered import (
    all_chain_decompositions,
    brute_force_enumerate,
    build_record,
    canonical_form,
    count,
    expand,
    generate,
    is_u_small,
    reduce,
    spherical_family,
)
from spinchains.spin import lowest_k_type, spin_lowest_k_type, verify_spin_identity
from spinchains.weights import rho_doubled, to_fundamental


def forms(sets):
    return {canonical_form(cs) for cs in sets}


def test_generate_rank_three():
    assert forms(generate(3)) == forms(
        [ChainSet.from_lists([[5, 3, 1]]), ChainSet.from_lists([[3, 1], [2]])]
    )


def test_generate_rank_four():
    expected = [
        [[7, 5, 3, 1]],
        [[5, 3, 1], [4]],
        [[5, 3, 1], [2]],
        [[3, 1], [4, 2]],
    ]
    assert forms(generate(4)) == forms(ChainSet.from_lists(x) for x in expected)


def test_expand_worked_children():
    cs = ChainSet.from_lists([[9, 7, 5, 3, 1], [4, 2]])
    kids = forms(expand(cs))
    assert kids == forms(
        [
            ChainSet.from_lists([[11, 9, 7, 5, 3, 1], [4, 2]]),
            ChainSet.from_lists([[9, 7, 5, 3, 1], [8], [4, 2]]),
        ]
    )


def test_counts_are_powers_of_two():
    for n in range(2, 13):
        assert count(n) == 2 ** (n - 2)


def test_generate_has_no_duplicates():
    for n in range(2, 13):
        sets = generate(n)
        assert len(sets) == len(forms(sets))


def test_generated_parameters_are_scattered_shaped():
    for n in range(2, 11):
        for cs in generate(n):
            assert cs.min_entry() == 1
            assert is_interlaced(cs)
            assert max(c.top for c in cs.chains) <= 2 * n - 1


def test_reduce_worked_examples():
    assert canonical_form(reduce(ChainSet.from_lists([[11, 9, 7, 5, 3, 1], [4, 2]]))) == canonical_form(
        ChainSet.from_lists([[9, 7, 5, 3, 1], [4, 2]])
    )
    assert canonical_form(reduce(ChainSet.from_lists([[9, 7, 5, 3, 1], [8], [4, 2]]))) == canonical_form(
        ChainSet.from_lists([[9, 7, 5, 3, 1], [4, 2]])
    )
    assert canonical_form(reduce(ChainSet.from_lists([[5, 3, 1]]))) == canonical_form(
        ChainSet.from_lists([[3, 1]])
    )


def test_reduce_rejects_base_parameter():
    with pytest.raises(ValueError):
        reduce(ChainSet.from_lists([[3, 1]]))


def test_reduce_inverts_expand():
    for n in range(2, 13):
        for cs in generate(n):
            for child in expand(cs):
                assert canonical_form(reduce(child)) == canonical_form(cs)
            if n > 2:
                parent = reduce(cs)
                assert canonical_form(cs) in forms(expand(parent))


def test_brute_force_base_case():
    assert forms(brute_force_enumerate(2)) == forms([ChainSet.from_lists([[3, 1]])])


def test_brute_force_rank_four():
    assert forms(brute_force_enumerate(4)) == forms(generate(4))


def test_brute_force_matches_generate():
    for n in range(2, 8):
        assert forms(brute_force_enumerate(n)) == forms(generate(n))


def test_brute_force_larger_entry_bound_finds_nothing_new():
    for n in range(2, 9):
        assert forms(brute_force_enumerate(n, max_entry=2 * n + 1)) == forms(generate(n))


def test_interlacing_involution_equivalence_over_all_decompositions():
    for n in range(2, 7):
        for cs in all_chain_decompositions(n):
            s = extract_involution(cs)
            assert is_involution(s)
            assert is_interlaced(cs) == involves_all_simple_reflections(s)


def test_involutions_of_generated_sets_use_all_reflections():
    for n in range(2, 11):
        for cs in generate(n):
            s = extract_involution(cs)
            assert is_involution(s)
            assert involves_all_simple_reflections(s)


def test_spin_identity_over_enumeration():
    for n in range(2, 11):
        for cs in generate(n):
            assert verify_spin_identity(spin_lowest_k_type(cs))


def test_tau_moves_away_from_lowest_k_type():
    for n in range(2, 10):
        for cs in generate(n):
            if len(cs.chains) > 1:
                assert spin_lowest_k_type(cs).tau != lowest_k_type(cs)


def test_lambda_coefficients_half_or_one():
    for n in range(2, 11):
        for cs in generate(n):
            assert set(to_fundamental(lambda_doubled(cs))) <= {1, 2}


def test_is_u_small_examples():
    two_rho = tuple(2 * r for r in rho_doubled(5))
    assert is_u_small(two_rho)
    tau = tuple(2 * x for x in (10, 9, 8, 7, 5, 5, 4, 3, 2))
    assert is_u_small(tau)
    bumped = (two_rho[0] + 2 * len(two_rho),) + two_rho[1:]
    assert not is_u_small(bumped)


def test_u_smallness_over_enumeration():
    for n in range(2, 11):
        for cs in generate(n):
            assert is_u_small(spin_lowest_k_type(cs).tau)


def test_build_record_small_rank_table():
    # rank 3
    rec = build_record(ChainSet.from_lists([[5, 3, 1]]))
    assert (rec.lambda2_fund, rec.s, rec.tau_fund) == ((2, 2), (3, 2, 1), (0, 0))
    rec = build_record(ChainSet.from_lists([[3, 1], [2]]))
    assert (rec.lambda2_fund, rec.s, rec.tau_fund) == ((1, 1), (3, 2, 1), (1, 1))
    # rank 4
    rec = build_record(ChainSet.from_lists([[5, 3, 1], [4]]))
    assert (rec.lambda2_fund, rec.s, rec.tau_fund) == ((1, 1, 2), (4, 2, 3, 1), (2, 0, 1))
    rec = build_record(ChainSet.from_lists([[5, 3, 1], [2]]))
    assert (rec.lambda2_fund, rec.s, rec.tau_fund) == ((2, 1, 1), (4, 2, 3, 1), (1, 0, 2))
    rec = build_record(ChainSet.from_lists([[3, 1], [4, 2]]))
    assert (rec.lambda2_fund, rec.s, rec.tau_fund) == ((1, 1, 1), (3, 4, 1, 2), (1, 1, 1))


def test_build_record_multiplicity_flag():
    rec = build_record(ChainSet.from_lists([[5, 3, 1], [4]]), with_multiplicity=True)
    assert rec.multiplicity == 1
    assert rec.u_small
    assert rec.gamma == (7, 7, 7, 5)


def test_build_record_rejects_non_scattered():
    with pytest.raises(ValueError):
        build_record(ChainSet.from_lists([[5, 3]]))
    with pytest.raises(ValueError):
        build_record(ChainSet.from_lists([[10, 8], [9, 7], [6, 4], [5, 3, 1]]))


def test_record_json_shape():
    rec = build_record(ChainSet.from_lists([[5, 3, 1], [4]]), with_multiplicity=True)
    payload = json.loads(json.dumps(rec.as_dict()))
    assert payload == {
        "n": 4,
        "chains": [[5, 3, 1], [4]],
        "lambda2_fund": [1, 1, 2],
        "s": [4, 2, 3, 1],
        "tau_fund": [2, 0, 1],
        "gamma": [7, 7, 7, 5],
        "u_small": True,
        "multiplicity": 1,
    }


def test_spherical_family_worked_cases():
    assert canonical_form(spherical_family(3, 2)) == canonical_form(
        ChainSet.from_lists([[5, 3, 1], [4, 2]])
    )
    assert to_fundamental(lambda_doubled(spherical_family(3, 2))) == (1, 1, 1, 1)
    assert canonical_form(spherical_family(5, 2)) == canonical_form(
        ChainSet.from_lists([[9, 7, 5, 3, 1], [6, 4]])
    )
    assert to_fundamental(lambda_doubled(spherical_family(5, 2))) == (2, 1, 1, 1, 1, 2)
    assert canonical_form(spherical_family(2, 1)) == canonical_form(
        ChainSet.from_lists([[3, 1], [2]])
    )
    assert to_fundamental(lambda_doubled(spherical_family(2, 1))) == (1, 1)


def test_spherical_family_validation():
    with pytest.raises(ValueError):
        spherical_family(2, 2)
    with pytest.raises(ValueError):
        spherical_family(3, 1)
    with pytest.raises(ValueError):
        spherical_family(1, 2)


def test_spherical_family_members_are_enumerated():
    for a, b in ((2, 1), (3, 2), (4, 1), (4, 3), (5, 4), (6, 1)):
        total = a + b
        assert canonical_form(spherical_family(a, b)) in forms(generate(total))
        assert len(set(lowest_k_type(spherical_family(a, b)))) == 1
