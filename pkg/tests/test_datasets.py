import pytest

from skewhad import datasets
from skewhad.families import parameter_identities, verify_sds


def test_self_check_passes():
    datasets.self_check()


@pytest.mark.parametrize("cid", sorted(datasets.CASES))
def test_expansion_matches_golden_listing(cid):
    case = datasets.get(cid)
    golden = [l for l in datasets.listings_text().splitlines() if l.startswith(f"{case.v} {cid[-1]}")]
    assert datasets.format_listing(case).splitlines() == golden


def test_cardinals():
    expect = {
        "109A": (54, 45, 51, 57), "109B": (54, 57, 60, 63),
        "145A": (72, 66, 67, 81), "145B": (72, 66, 67, 81),
        "247A": (123, 111, 123, 114), "247B": (123, 111, 123, 114),
    }
    for cid, ks in expect.items():
        assert datasets.get(cid).cardinals == ks
        assert tuple(len(b) for b in datasets.get(cid).blocks()) == ks


@pytest.mark.parametrize("cid", sorted(datasets.CASES))
def test_cases_verify(cid):
    case = datasets.get(cid)
    q = case.quadruple()
    assert verify_sds(q).passed
    p = parameter_identities(q)
    assert sorted(p.decomposition) == sorted(case.squares)


def test_self_check_catches_transcription_error(monkeypatch):
    text = datasets.listings_text().replace("109 A1 1,2,5,", "109 A1 1,3,5,")
    monkeypatch.setattr(datasets, "listings_text", lambda: text)
    datasets.explicit_listings.cache_clear()
    try:
        with pytest.raises(AssertionError):
            datasets.self_check()
    finally:
        monkeypatch.undo()
        datasets.explicit_listings.cache_clear()


def test_unknown_case():
    with pytest.raises(KeyError):
        datasets.get("999A")


def test_open_orders():
    assert len(datasets.OPEN_ORDERS) == 39
    assert all(n % 2 == 1 and n < 300 for n in datasets.OPEN_ORDERS)
