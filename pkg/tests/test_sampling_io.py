import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tracenorm import matio
from tracenorm.matcore import TraceNormError, from_upper, make_matrix
from tracenorm.sampling import SplitMix64, random_matrices, random_matrix


def _splitmix_reference(seed, count):
    # plain-integer transcription of the published algorithm
    out, state = [], seed
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & (2**64 - 1)
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & (2**64 - 1)
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & (2**64 - 1)
        out.append(z ^ (z >> 31))
    return out


@pytest.mark.parametrize("seed", [0, 1, 12345, 2**64 - 1])
def test_splitmix_matches_scalar_reference(seed):
    rng = SplitMix64(seed)
    got = [int(x) for x in rng.next_u64(5)] + [int(x) for x in rng.next_u64(3)]
    assert got == _splitmix_reference(seed, 8)


def test_splitmix_known_first_output():
    assert int(SplitMix64(0).next_u64(1)[0]) == 0xE220A8397B1DCDAF


def test_uniform_range():
    u = SplitMix64(3).uniform(10_000)
    assert u.min() >= 0 and u.max() < 1
    assert abs(u.mean() - 0.5) < 0.02


def test_normal_moments():
    z = SplitMix64(4).normal(50_000)
    assert abs(z.mean()) < 0.02 and abs(z.std() - 1) < 0.02


def test_pm_one_example():
    A = random_matrix("real", 3, "pm_one", True, 7)
    off = ~np.eye(3, dtype=bool)
    assert set(np.unique(A.real[off])) <= {-1.0, 1.0}
    assert np.all(np.diag(A.real) == 0)


def test_same_seed_same_matrix():
    assert random_matrix("hermitian", 5, "gaussian", True, 42) == random_matrix("hermitian", 5, "gaussian", True, 42)
    assert random_matrix("hermitian", 5, "gaussian", True, 42) != random_matrix("hermitian", 5, "gaussian", True, 43)


def test_unit_disk_example():
    A = random_matrix("hermitian", 4, "unit_disk", True, 11)
    assert np.abs(A.entries).max() <= 1
    assert np.all(np.diag(A.entries) == 0)
    assert np.any(A.entries.imag != 0)


def test_unit_disk_needs_hermitian():
    with pytest.raises(TraceNormError):
        random_matrix("real", 3, "unit_disk")


def test_bad_distribution_and_order():
    with pytest.raises(TraceNormError):
        random_matrix("real", 3, "cauchy")
    with pytest.raises(TraceNormError):
        random_matrix("real", 0)


def test_batch_reproduces_single_draw():
    for kind, dist in [("real", "gaussian"), ("real", "pm_one"), ("hermitian", "gaussian"), ("hermitian", "unit_disk")]:
        stack = random_matrices(kind, 4, 1, dist, False, 5)
        assert np.array_equal(stack[0], random_matrix(kind, 4, dist, False, 5).entries)


def test_diagonal_drawn_when_requested():
    A = random_matrix("hermitian", 4, "gaussian", False, 1)
    assert np.all(np.diag(A.entries) != 0)
    assert np.all(np.diag(A.entries).imag == 0)


# file format ------------------------------------------------------------------

cplx = st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=1e300)


@settings(max_examples=80, deadline=None)
@given(arrays(np.complex128, (4, 4), elements=cplx))
def test_round_trip_is_bit_exact(raw):
    A = from_upper("hermitian", raw)
    B = matio.loads(matio.dumps(A))
    assert B == A


def test_round_trip_real(tmp_path):
    A = random_matrix("real", 6, "gaussian", False, 2)
    path = tmp_path / "a.json"
    matio.write_matrix(A, path)
    assert matio.read_matrix(path) == A
    obj = json.loads(path.read_text())
    assert obj["kind"] == "real" and obj["n"] == 6


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"kind": "real", "n": 2}',
        '{"kind": "complex", "n": 1, "entries": [[[0, 0]]]}',
        '{"kind": "real", "n": 0, "entries": []}',
        '{"kind": "real", "n": 2, "entries": [[[0, 0]]]}',
        '{"kind": "real", "n": 1, "entries": [[[0, 1]]]}',
        '{"kind": "real", "n": 1, "entries": [[["a", 1]]]}',
    ],
)
def test_parse_errors(text):
    with pytest.raises(matio.ParseError):
        matio.loads(text)


def test_loader_rejects_asymmetric_file():
    text = '{"kind": "real", "n": 2, "entries": [[[0, 0], [1, 0]], [[2, 0], [0, 0]]]}'
    with pytest.raises(TraceNormError):
        matio.loads(text)


def test_hermitian_file():
    A = make_matrix("hermitian", [[0, 1j], [-1j, 0]])
    assert '"kind": "hermitian"' in matio.dumps(A)
