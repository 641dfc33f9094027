import json

import pytest

from catsl2.geomdim import (
    GENERATORS,
    BundleExpr,
    canonical_contributions,
    canonical_ledger,
    component_count,
    dim_correspondence,
    dim_cotangent,
    half_sum,
    ledger_verdict,
)


def fibration_dim(k1, k2, N):
    # partial flag variety Fl(k1, k2; N) plus the fibre Hom(C^N / V, V') of the cotangent data
    return k1 * (k2 - k1) + k2 * (N - k2) + k1 * (N - k2)


def test_dim_cotangent():
    assert dim_cotangent(1, 2) == 2
    assert dim_cotangent(2, 4) == 8
    for N in range(12):
        for k in range(N + 1):
            assert dim_cotangent(k, N) == dim_cotangent(N - k, N)
    with pytest.raises(ValueError):
        dim_cotangent(5, 4)


def test_dim_correspondence():
    assert dim_correspondence(1, 3, 4) == 6
    for N in range(21):
        for k2 in range(N + 1):
            assert dim_correspondence(k2, k2, N) == 2 * k2 * (N - k2)
            for k1 in range(k2 + 1):
                d = dim_correspondence(k1, k2, N)
                assert d == half_sum(k1, k2, N) == fibration_dim(k1, k2, N)
    with pytest.raises(ValueError):
        dim_correspondence(3, 2, 5)


def test_component_count():
    assert [component_count(k) for k in range(3)] == [1, 2, 3]
    with pytest.raises(ValueError):
        component_count(-1)


def test_bundle_algebra():
    e = BundleExpr.det_quotient("det V", "det V'", 3)
    assert e["det V"] == 3 and e["det V'"] == -3
    assert BundleExpr.det("det C^N", 4).normalize() == BundleExpr()


def test_ledger_cancels_everywhere():
    for N in range(21):
        for k in range(N // 2 + 1):
            for s in range(k + 1):
                res = canonical_ledger(N, k, s)
                assert res["det V'"] == 0 and res["det V~"] == 0 and res["det C^N"] == 0
                assert res["det V"] == res["det V''"] == N - 2 * k + 2 * s


def test_ledger_verdicts():
    v = ledger_verdict(10, 3, 2)
    assert v.matches_symmetric and not v.matches_asymmetric
    # the symmetric and asymmetric exponent forms coincide only when s = 0
    for N in range(21):
        for k in range(N // 2 + 1):
            for s in range(k + 1):
                v = ledger_verdict(N, k, s)
                assert v.matches_symmetric
                assert v.matches_asymmetric == (s == 0)


def test_ledger_s_zero_structure():
    for N in range(2, 10):
        for k in range(N // 2 + 1):
            res = canonical_ledger(N, k, 0)
            assert res == BundleExpr((0, N - 2 * k, N - 2 * k, 0, 0))


def test_ledger_errors_and_json():
    with pytest.raises(ValueError):
        canonical_ledger(4, 3, 1)
    with pytest.raises(ValueError):
        canonical_ledger(6, 2, 3)
    data = json.loads(json.dumps(canonical_ledger(8, 2, 1).to_json()))
    assert data == {"generators": list(GENERATORS), "exponents": [0, 6, 6, 0, 0]}
    assert len(canonical_contributions(8, 2, 1)) == 4
