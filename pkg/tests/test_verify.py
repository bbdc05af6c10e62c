import json

import pytest

from mouldcalc.verify import SUITES, verify_suite


def test_zero_trials_is_vacuous_with_warning():
    with pytest.warns(UserWarning, match="trials=0"):
        r = verify_suite("jacobi", "c2", trials=0)
    assert r and r.trials == 0 and r.warnings


def test_report_json():
    r = verify_suite("jacobi", "c2", trials=2, seed=3, max_depth=2)
    data = r.to_json()
    assert data["suite"] == "jacobi" and data["passed"] and data["trials"] == 4
    json.dumps(data)


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify_suite("nope")


def test_deterministic():
    a = verify_suite("closure-al", "c3", trials=3, seed=11)
    b = verify_suite("closure-al", "c3", trials=3, seed=11)
    assert a.to_json() == b.to_json()


@pytest.mark.parametrize("name", ["prelie", "derivation", "aritcomp", "closure-push", "closure-pusnu",
                                  "closure-dist", "swapari", "bialternal-push", "bialternal-pusnu"])
def test_small_suites_pass(name):
    r = verify_suite(name, "c2", trials=2, seed=1, max_depth=2, weight=4)
    assert r, r.witness


def test_all_suites_registered():
    assert {"jacobi", "flexions", "ma-hom", "kv-equiv", "lkv-equiv", "dihedral-sym",
            "reform-dihedral", "embedding"} <= set(SUITES)
