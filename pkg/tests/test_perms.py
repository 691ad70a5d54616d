"""Generation profiles, the reference inverse, validation, and file I/O."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perminv import (
    AuditedArray,
    InvalidPermutationError,
    PermProfile,
    generate,
    is_permutation,
    load_permutation,
    oracle_invert,
    save_permutation,
    validate_permutation,
)
from support import all_perms, brute_inverse, cycle_census


class TestOracleInvert:
    def test_spec_examples(self):
        assert oracle_invert([2, 3, 1]) == [3, 1, 2]
        assert oracle_invert([1, 2, 3]) == [1, 2, 3]
        assert oracle_invert([2, 1, 4, 3]) == [2, 1, 4, 3]

    def test_rejects_non_permutations(self):
        for bad in ([2, 2, 1], [0, 1], [1, 3]):
            with pytest.raises(InvalidPermutationError):
                oracle_invert(bad)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_preimage_scan(self, n):
        for p in all_perms(n):
            assert oracle_invert(p) == brute_inverse(list(p))

    def test_involution_exhaustive_through_7(self):
        for n in range(1, 8):
            for p in all_perms(n):
                assert tuple(oracle_invert(oracle_invert(p))) == p

    @given(st.integers(1, 40).flatmap(
        lambda n: st.permutations(tuple(range(1, n + 1)))))
    @settings(max_examples=150, deadline=None)
    def test_pointwise_composition_is_identity(self, p):
        q = oracle_invert(p)
        assert all(q[p[i - 1] - 1] == i for i in range(1, len(p) + 1))


class TestValidation:
    def test_validate(self):
        assert validate_permutation(AuditedArray([2, 3, 1]))
        assert not validate_permutation(AuditedArray([2, 2, 1]))
        assert validate_permutation(AuditedArray([1]))
        assert is_permutation([1, 2]) and not is_permutation([2, 2])

    def test_validate_is_uncounted(self):
        a = AuditedArray([2, 3, 1])
        validate_permutation(a)
        assert a.accesses == 0


class TestProfiles:
    def test_parse_and_label_roundtrip(self):
        for text in ("identity", "single-cycle", "small-cycles(2)",
                     "random", "mixed(0.25)"):
            assert PermProfile.parse(text).label() == text

    def test_parse_rejects_garbage(self):
        for bad in ("idikity", "identity(3)", "small-cycles(x)", ""):
            with pytest.raises(ValueError):
                PermProfile.parse(bad)

    def test_identity(self):
        assert generate(5, PermProfile("identity")).tolist() == [1, 2, 3, 4, 5]

    def test_single_cycle_structure(self):
        a = generate(4, PermProfile("single-cycle", seed=9))
        census = cycle_census(a.tolist())
        assert len(census) == 1 and len(census[0]) == 4

    def test_small_cycles_2_is_involution(self):
        a = generate(6, PermProfile("small-cycles", seed=5, max_len=2))
        vals = a.tolist()
        assert all(vals[vals[i - 1] - 1] == i for i in range(1, 7))

    @pytest.mark.parametrize("kind,n", [
        ("identity", 17), ("single-cycle", 33), ("small-cycles", 40),
        ("random", 51), ("mixed", 64),
    ])
    def test_everything_is_a_permutation(self, kind, n):
        for seed in range(5):
            a = generate(n, PermProfile(kind, seed=seed))
            assert validate_permutation(a)

    def test_small_cycles_bound_holds(self):
        for seed in range(5):
            a = generate(50, PermProfile("small-cycles", seed=seed, max_len=3))
            assert max(len(c) for c in cycle_census(a.tolist())) <= 3

    def test_mixed_has_two_big_cycles(self):
        a = generate(400, PermProfile("mixed", seed=1, long_fraction=0.5))
        sizes = sorted((len(c) for c in cycle_census(a.tolist())), reverse=True)
        assert sizes[0] == 100 and sizes[1] == 100
        assert all(s <= 3 for s in sizes[2:])

    def test_reproducible(self):
        for kind in ("single-cycle", "small-cycles", "random", "mixed"):
            p = PermProfile(kind, seed=123)
            assert generate(100, p).tolist() == generate(100, p).tolist()

    def test_distinct_seeds_differ(self):
        vals0 = generate(100, PermProfile("random", seed=0)).tolist()
        vals1 = generate(100, PermProfile("random", seed=1)).tolist()
        assert vals0 != vals1

    def test_bad_n(self):
        with pytest.raises(ValueError):
            generate(0, PermProfile("identity"))


class TestFileFormat:
    def test_roundtrip_bit_exact(self, tmp_path):
        path = tmp_path / "perm.txt"
        save_permutation(path, [2, 3, 1])
        assert path.read_text() == "3\n2 3 1\n"
        assert load_permutation(path) == [2, 3, 1]

    def test_trailing_newline_optional(self, tmp_path):
        path = tmp_path / "perm.txt"
        path.write_text("3\n2 3 1")
        assert load_permutation(path) == [2, 3, 1]

    def test_load_errors(self, tmp_path):
        cases = {
            "empty.txt": "",
            "short.txt": "3\n1 2\n",
            "alpha.txt": "2\n1 x\n",
            "zero.txt": "0\n\n",
        }
        for name, content in cases.items():
            path = tmp_path / name
            path.write_text(content)
            with pytest.raises(ValueError):
                load_permutation(path)
