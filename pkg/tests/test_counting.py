"""Closed-form, recurrence, and convolution counting.

Expected values come from two places: hand-derivable trivial cases, and the
published reference tables that the golden files under tests/golden/ were
transcribed from.  Cross-route equalities (closed form vs recurrence vs
convolution) are swept exhaustively over small ranges.
"""

import pytest

from fibcubes import counting
from fibcubes.counting import (
    binom,
    convolve,
    count_table,
    cycle_count,
    cycle_count_k,
    cycle_count_rec,
    cycle_edges,
    cycle_edges_closed,
    cycle_edges_conv,
    extended_fib,
    extended_lucas,
    fibonacci_sequence,
    h_fibonacci,
    h_lucas,
    lucas_sequence,
    max_subset_size,
    path_count,
    path_count_k,
    path_count_rec,
    path_edges,
    path_edges_conv,
    t_count,
)

# --- binomial convention -----------------------------------------------------


def test_binom_small_values():
    assert binom(4, 2) == 6
    assert binom(5, 0) == 1
    assert binom(5, 5) == 1
    assert binom(5, 6) == 0


def test_binom_subset_convention_at_edge_cases():
    # Negative-size sets have exactly one subset: the empty one.
    assert binom(-1, 0) == 1
    assert binom(-7, 0) == 1
    assert binom(-1, 1) == 0  # not -1 as the signed convention would give
    assert binom(-3, 2) == 0
    assert binom(3, -1) == 0


def test_max_subset_size_is_ceiling():
    assert max_subset_size(0, 3) == 0
    assert max_subset_size(7, 1) == 4
    assert max_subset_size(6, 2) == 2
    assert max_subset_size(7, 2) == 3


# --- path counts --------------------------------------------------------------


@pytest.mark.parametrize("n,h,k,expected", [
    (5, 1, 2, 6),
    (8, 2, 3, 4),
    (13, 3, 3, 35),
    (0, 0, 0, 1),
    (3, 1, 0, 1),
    (4, 9, 2, 0),
])
def test_path_count_k_values(n, h, k, expected):
    assert path_count_k(n, h, k) == expected


@pytest.mark.parametrize("n,h,expected", [
    (10, 2, 60),
    (13, 1, 610),
    (6, 0, 64),
    (0, 5, 1),
    (4, 2, 6),
])
def test_path_count_values(n, h, expected):
    assert path_count(n, h) == expected


def test_path_count_rec_base_and_step():
    assert path_count_rec(3, 5) == 4  # n <= h+1: one vertex at most, n+1 sets
    assert path_count_rec(7, 2) == 19  # 13 + 6
    assert path_count_rec(22, 4) == path_count(22, 4)


def test_path_count_routes_agree():
    for h in range(11):
        for n in range(31):
            assert path_count(n, h) == path_count_rec(n, h), (n, h)


def test_path_count_k_shift_symmetry():
    # Reducing the gap by one while shrinking n by k-1 leaves counts alone.
    for h in range(1, 8):
        for n in range(25):
            for k in range(n + 2):
                if n - k + 1 >= 0:
                    assert path_count_k(n, h, k) == path_count_k(n - k + 1, h - 1, k)


# --- cycle counts ---------------------------------------------------------------


@pytest.mark.parametrize("n,h,k,expected", [
    (8, 1, 3, 16),
    (12, 2, 3, 40),
    (16, 3, 4, 4),
    (5, 2, 2, 0),
    (9, 0, 0, 1),
    (9, 4, 1, 9),
])
def test_cycle_count_k_values(n, h, k, expected):
    assert cycle_count_k(n, h, k) == expected


@pytest.mark.parametrize("n,h,expected", [
    (7, 2, 15),
    (16, 1, 2207),
    (5, 2, 6),
    (0, 0, 1),
])
def test_cycle_count_values(n, h, expected):
    assert cycle_count(n, h) == expected


def test_cycle_count_rec_base_and_step():
    assert cycle_count_rec(3, 4) == 4  # n <= 2h+1
    assert cycle_count_rec(7, 2) == 15  # 10 + 5
    assert cycle_count_rec(20, 3) == cycle_count(20, 3)


def test_cycle_count_routes_agree():
    for h in range(11):
        for n in range(31):
            assert cycle_count(n, h) == cycle_count_rec(n, h), (n, h)


def test_cycle_division_always_exact():
    # (n/k) * C(n-hk-1, k-1) never truncates; a remainder would assert.
    for h in range(11):
        for n in range(41):
            for k in range(max_subset_size(n, h) + 3):
                assert cycle_count_k(n, h, k) >= 0


# --- sequences ------------------------------------------------------------------


@pytest.mark.parametrize("h,n,expected", [
    (2, 13, 60),
    (1, 10, 55),
    (4, 3, 1),
    (0, 5, 16),
])
def test_h_fibonacci_values(h, n, expected):
    assert h_fibonacci(h, n) == expected


@pytest.mark.parametrize("h,n,expected", [
    (2, 7, 10),
    (4, 1, 5),
    (3, 12, 34),
    (0, 4, 8),
])
def test_h_lucas_values(h, n, expected):
    assert h_lucas(h, n) == expected


def test_sequence_prefixes():
    assert fibonacci_sequence(1).prefix(10) == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert lucas_sequence(2).prefix(8) == [3, 1, 1, 4, 5, 6, 10, 15]


def test_sequence_rejects_indices_before_start():
    with pytest.raises(ValueError):
        h_fibonacci(2, 0)
    with pytest.raises(ValueError):
        h_lucas(1, -3)


def test_sequence_rejects_bad_parameters():
    with pytest.raises(ValueError):
        counting.HSequence("nonsense", 2)
    with pytest.raises(ValueError):
        counting.HSequence(counting.FIBONACCI, -1)


def test_sequences_consistent_under_concurrent_extension():
    import threading

    counting.clear_caches()
    expected = [counting.HSequence(counting.FIBONACCI, 3).term(n) for n in range(1, 301)]
    results = []

    def worker():
        results.append([h_fibonacci(3, n) for n in range(1, 301)])

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == expected for r in results)


# --- extended sequences ----------------------------------------------------------


def test_extended_fib_base_cases():
    assert extended_fib(2, -2) == 1
    assert extended_fib(2, -1) == 0
    assert extended_fib(2, 0) == 0
    assert extended_fib(2, 8) == h_fibonacci(2, 8) == 9


def test_extended_lucas_base_cases():
    assert extended_lucas(3, -3) == 4
    assert extended_lucas(3, -2) == -3  # the single negative term
    assert extended_lucas(3, -1) == 0
    assert extended_lucas(3, 0) == 0
    assert extended_lucas(2, 5) == h_lucas(2, 5) == 5


def test_extended_sequences_agree_with_plain_on_positive_indices():
    for h in range(2, 11):
        for n in range(1, 41):
            assert extended_fib(h, n) == h_fibonacci(h, n)
            assert extended_lucas(h, n) == h_lucas(h, n)


def test_extended_sequences_reject_small_h_and_deep_indices():
    with pytest.raises(ValueError):
        extended_fib(1, 3)
    with pytest.raises(ValueError):
        extended_lucas(0, 1)
    with pytest.raises(ValueError):
        extended_fib(3, -4)


# --- convolution ------------------------------------------------------------------


def test_convolve_values():
    f1 = fibonacci_sequence(1)
    assert convolve(f1, f1, 6) == 38
    f5 = fibonacci_sequence(5)
    assert convolve(f5, f5, 1) == 1
    assert convolve(fibonacci_sequence(2), lucas_sequence(2), 6) == 32


def test_convolve_rejects_mixed_h_and_bad_index():
    with pytest.raises(ValueError):
        convolve(fibonacci_sequence(1), fibonacci_sequence(2), 4)
    with pytest.raises(ValueError):
        convolve(fibonacci_sequence(1), fibonacci_sequence(1), 0)


# --- diagram edge counts -----------------------------------------------------------


@pytest.mark.parametrize("n,h,expected", [
    (6, 1, 38),
    (12, 2, 330),
    (0, 3, 0),
])
def test_path_edges_values(n, h, expected):
    assert path_edges(n, h) == expected


@pytest.mark.parametrize("n,h,expected", [
    (6, 1, 38),
    (4, 0, 32),
    (13, 2, 520),
])
def test_path_edges_conv_values(n, h, expected):
    assert path_edges_conv(n, h) == expected


def test_path_edges_routes_agree():
    for h in range(11):
        for n in range(41):
            assert path_edges(n, h) == path_edges_conv(n, h), (n, h)


@pytest.mark.parametrize("n,h,expected", [
    (8, 2, 32),
    (6, 1, 30),
    (15, 3, 285),
])
def test_cycle_edges_values(n, h, expected):
    assert cycle_edges(n, h) == expected


def test_cycle_edges_closed_values():
    assert cycle_edges_closed(8, 2) == 32  # 8 * F(6)
    assert cycle_edges_closed(6, 1) == 30  # 6 * F(5)
    for h in range(11):
        assert cycle_edges_closed(h + 1, h) == h + 1  # n * F(1)


def test_cycle_edges_conv_values():
    assert cycle_edges_conv(8, 2) == 32
    assert cycle_edges_conv(15, 1) == 5655
    assert cycle_edges_conv(12, 5) == 24


def test_cycle_edges_routes_agree_above_h():
    for h in range(11):
        for n in range(h + 1, 41):
            e = cycle_edges(n, h)
            assert e == cycle_edges_closed(n, h) == cycle_edges_conv(n, h), (n, h)


def test_cycle_edge_shortcuts_reject_small_n():
    with pytest.raises(ValueError):
        cycle_edges_closed(2, 2)
    with pytest.raises(ValueError):
        cycle_edges_conv(3, 3)
    # the defining sum itself is total: n singletons under the empty set
    assert cycle_edges(2, 2) == 2
    assert cycle_edges(0, 4) == 0


def test_lucas_decomposes_into_fibonacci():
    for h in range(11):
        for n in range(h + 1, 41):
            assert h_lucas(h, n + 1) == h_fibonacci(h, n) + (h + 1) * h_fibonacci(h, n - h)


# --- per-vertex membership counts ----------------------------------------------------


def test_t_count_single_membership():
    assert t_count(5, 1, 1, 3) == 1


def test_t_count_sums_to_weighted_subset_count():
    assert sum(t_count(8, 1, 3, i) for i in range(1, 9)) == 3 * path_count_k(8, 1, 3) == 60


def test_t_count_matches_direct_filter():
    # membership counts derived independently below in enumeration tests;
    # here: v5 in P_9^(2) pairs only with the 4 vertices at distance > 2
    assert t_count(9, 2, 2, 5) == 4


def test_t_count_rejects_bad_vertex_or_size():
    with pytest.raises(ValueError):
        t_count(5, 1, 2, 0)
    with pytest.raises(ValueError):
        t_count(5, 1, 2, 6)
    with pytest.raises(ValueError):
        t_count(5, 1, 0, 3)


# --- sequence / count bridges ---------------------------------------------------------


def test_fibonacci_terms_are_shifted_path_totals():
    for h in range(11):
        for i in range(1, 41):
            expected = path_count(max(i - h - 1, 0), h)
            assert h_fibonacci(h, i) == expected, (h, i)


def test_lucas_terms_are_shifted_cycle_totals():
    for h in range(11):
        for i in range(h + 2, 41):
            assert h_lucas(h, i) == cycle_count(i - 1, h), (h, i)


# --- tables ------------------------------------------------------------------------


def test_count_table_row_sums_match_totals():
    for kind, total in (("path", path_count), ("cycle", cycle_count)):
        table = count_table(kind, 2, 12)
        for n in range(13):
            assert table.row_total(n) == total(n, 2)


def test_count_table_vanishes_beyond_bound():
    table = count_table("path", 3, 10, k_max=8)
    for n in range(11):
        for k in range(max_subset_size(n, 3) + 1, 9):
            assert table.value(n, k) == 0


def test_count_table_rejects_unknown_kind():
    with pytest.raises(ValueError):
        count_table("tree", 1, 5)
