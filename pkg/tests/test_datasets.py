import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vifnc import (
    DataMatrix,
    GeneratorSpec,
    SplitMix64,
    belsley,
    belsley_csv_path,
    derive_seed,
    generate_normal_column,
    load_csv,
    to_csv,
)
from vifnc.errors import DuplicateHeader, NonFiniteValue, ParseError, RaggedRow


class TestBelsley:
    def test_shape_and_names(self, belsley_data):
        assert belsley_data.n == 20
        assert belsley_data.names == ("y", "X1", "X2", "X3", "X4")

    def test_first_row(self, belsley_data):
        assert belsley_data.values[0].tolist() == [2.69385, 1.0, 0.996926, 1.00006, 8.883976]

    def test_last_row(self, belsley_data):
        assert belsley_data.values[19].tolist() == [2.69532, 1.0, 1.00469, 1.00021, 5.731981]

    def test_ones_column(self, belsley_data):
        assert np.all(belsley_data.column("X1") == 1.0)

    def test_referentially_transparent(self):
        a, b = belsley(), belsley()
        assert a.names == b.names
        assert np.array_equal(a.values, b.values)

    def test_matches_golden_csv_byte_for_byte(self, belsley_data):
        golden = belsley_csv_path().read_text(encoding="utf-8")
        assert to_csv(belsley_data) == golden

    def test_golden_csv_roundtrips_bit_identically(self, belsley_data):
        loaded = load_csv(belsley_csv_path())
        assert loaded.names == belsley_data.names
        assert np.array_equal(loaded.values, belsley_data.values)


class TestLoadCsv:
    def test_small_matrix(self):
        data = load_csv(io.StringIO("a,b\n1,2\n3,4"))
        assert data.names == ("a", "b")
        assert data.values.tolist() == [[1.0, 2.0], [3.0, 4.0]]

    def test_binary_stream(self):
        data = load_csv(io.BytesIO(b"a,b\n1,2\n3,4\n"))
        assert data.values.tolist() == [[1.0, 2.0], [3.0, 4.0]]

    def test_duplicate_header(self):
        with pytest.raises(DuplicateHeader):
            load_csv(io.StringIO("a,a\n1,2\n3,4"))

    def test_ragged_row_reports_location(self):
        with pytest.raises(RaggedRow) as err:
            load_csv(io.StringIO("a,b\n1,2\n3"))
        assert err.value.row == 3

    def test_bad_numeral_reports_location(self):
        with pytest.raises(ParseError) as err:
            load_csv(io.StringIO("a,b\n1,2\n3,oops"))
        assert (err.value.row, err.value.col) == (3, 2)

    def test_nonfinite_cell(self):
        with pytest.raises(NonFiniteValue):
            load_csv(io.StringIO("a,b\n1,2\n3,nan"))
        with pytest.raises(NonFiniteValue):
            load_csv(io.StringIO("a,b\n1,inf\n3,4"))

    def test_empty_input(self):
        with pytest.raises(ParseError):
            load_csv(io.StringIO(""))

    def test_no_data_rows(self):
        with pytest.raises(ParseError):
            load_csv(io.StringIO("a,b\n"))


class TestRoundTrip:
    def test_seeded_random_matrices(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            n = int(rng.integers(1, 12))
            k = int(rng.integers(1, 5))
            scale = 10.0 ** rng.integers(-12, 12)
            data = DataMatrix(
                tuple(f"c{i}" for i in range(k)), rng.normal(0.0, scale, (n, k))
            )
            again = load_csv(io.StringIO(to_csv(data)))
            assert again.names == data.names
            assert np.array_equal(again.values, data.values)

    @settings(max_examples=60)
    @given(
        st.lists(
            st.floats(allow_nan=False, allow_infinity=False, width=64),
            min_size=2,
            max_size=8,
        )
    )
    def test_any_finite_floats_roundtrip(self, values):
        data = DataMatrix(("v",), np.asarray(values)[:, None])
        again = load_csv(io.StringIO(to_csv(data)))
        assert np.array_equal(again.values, data.values)


class TestGenerator:
    def test_deterministic(self):
        spec = GeneratorSpec(n=20, mean=4.0, variance=16.0, seed=987654321)
        assert np.array_equal(generate_normal_column(spec), generate_normal_column(spec))

    def test_law_of_large_numbers(self):
        spec = GeneratorSpec(n=100_000, mean=4.0, variance=16.0, seed=20240515)
        draws = generate_normal_column(spec)
        assert abs(draws.mean() - 4.0) < 0.1
        assert abs(draws.var(ddof=1) - 16.0) < 0.5

    def test_two_draws_finite(self):
        draws = generate_normal_column(GeneratorSpec(n=2, mean=0.0, variance=1.0, seed=1))
        assert draws.shape == (2,)
        assert np.all(np.isfinite(draws))

    def test_odd_length_prefix_of_even(self):
        even = generate_normal_column(GeneratorSpec(n=10, mean=0.0, variance=1.0, seed=5))
        odd = generate_normal_column(GeneratorSpec(n=9, mean=0.0, variance=1.0, seed=5))
        assert np.array_equal(odd, even[:9])

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            GeneratorSpec(n=1, mean=0.0, variance=1.0, seed=0)
        with pytest.raises(ValueError):
            GeneratorSpec(n=5, mean=0.0, variance=0.0, seed=0)

    def test_seed_wraps_to_64_bits(self):
        small = GeneratorSpec(n=4, mean=0.0, variance=1.0, seed=7)
        wrapped = GeneratorSpec(n=4, mean=0.0, variance=1.0, seed=7 + 2**64)
        assert np.array_equal(generate_normal_column(small), generate_normal_column(wrapped))


class TestSplitMix:
    def test_stream_is_deterministic(self):
        a = SplitMix64(12345)
        b = SplitMix64(12345)
        assert [a.next_u64() for _ in range(8)] == [b.next_u64() for _ in range(8)]

    def test_outputs_are_64_bit(self):
        rng = SplitMix64(999)
        for _ in range(100):
            value = rng.next_u64()
            assert 0 <= value < 2**64

    def test_uniform_in_half_open_interval(self):
        rng = SplitMix64(4)
        draws = [rng.uniform() for _ in range(1000)]
        assert all(0.0 < u <= 1.0 for u in draws)

    def test_derive_seed_order_independent(self):
        direct = derive_seed(42, 5)
        assert direct == derive_seed(42, 5)
        # deriving child 5 does not require visiting children 0..4
        stream = SplitMix64(42)
        outputs = [stream.next_u64() for _ in range(6)]
        assert direct == outputs[5]
