import json
from fractions import Fraction

import pytest

from theta5.catalog import (Argument, ExpectedStatus, Identity, IdentityKind,
                            IdentityTerm, ThetaFactor, corrupt_identity,
                            identity_from_dict, identity_to_dict, load_catalog,
                            normalize_identity, parse_scalar, save_catalog)
from theta5.catalog_data import CORPUS_COUNTS, CORPUS_SIZE, builtin_catalog
from theta5.cyclotomic import Cyclotomic, cyclo_root
from theta5.theta import Characteristic

C = Characteristic.of


def test_corpus_size_and_family_counts():
    cat = builtin_catalog()
    assert len(cat) == CORPUS_SIZE == sum(CORPUS_COUNTS.values())
    ids = [i.id for i in cat]
    assert len(set(ids)) == len(ids)


def test_corpus_has_exactly_one_suspect():
    suspects = [i for i in builtin_catalog()
                if i.expected is ExpectedStatus.SUSPECT_TYPO]
    assert [s.id for s in suspects] == ["quintic-epsp35-printed"]


def test_corpus_is_normalized():
    for ident in builtin_catalog():
        for t in ident.terms:
            for f in t.factors:
                assert 0 <= f.char.eps < 2 and 0 <= f.char.epsp < 2, ident.id


def test_homogeneity_enforced():
    one = Cyclotomic.one()
    f1 = ThetaFactor(C(0, 0), 2)
    f2 = ThetaFactor(C(0, 1), 1)
    with pytest.raises(ValueError):
        Identity("bad", IdentityKind.CONSTANT,
                 [IdentityTerm(one, [f1]), IdentityTerm(one, [f2])])


def test_constant_kind_rejects_symbolic_zeta():
    one = Cyclotomic.one()
    f = ThetaFactor(C(0, 0), 1, Argument.SYMBOLIC_ZETA)
    with pytest.raises(ValueError):
        Identity("bad", IdentityKind.CONSTANT, [IdentityTerm(one, [f])])


def test_factor_power_positive():
    with pytest.raises(ValueError):
        ThetaFactor(C(0, 0), 0)


def test_round_trip_whole_corpus():
    for ident in builtin_catalog():
        blob = json.dumps(identity_to_dict(ident))
        back = identity_from_dict(json.loads(blob))
        assert identity_to_dict(back) == identity_to_dict(ident)


def test_save_and_load(tmp_path):
    cat = list(builtin_catalog())[:5]
    path = tmp_path / "cat.json"
    save_catalog(cat, path)
    back = load_catalog(path)
    assert [i.id for i in back] == [i.id for i in cat]


def test_load_rejects_duplicates(tmp_path):
    d = identity_to_dict(builtin_catalog()[0])
    path = tmp_path / "dup.json"
    path.write_text(json.dumps([d, d]))
    with pytest.raises(ValueError):
        load_catalog(path)


def test_corrupt_is_deterministic_and_flips_one_sign():
    ident = builtin_catalog()[0]
    a = corrupt_identity(ident, 7)
    b = corrupt_identity(ident, 7)
    assert identity_to_dict(a) == identity_to_dict(b)
    assert a.id.endswith("~corrupt7")
    # exactly one term differs, and it differs by a sign
    diffs = [i for i, (ta, t0) in enumerate(zip(a.terms, ident.terms))
             if not (ta.scalar - t0.scalar).is_zero()]
    assert len(diffs) == 1
    i = diffs[0]
    assert (a.terms[i].scalar + ident.terms[i].scalar).is_zero()


def test_parse_scalar_grammar():
    assert parse_scalar("3/4") == Cyclotomic.from_rational(Fraction(3, 4))
    assert parse_scalar("-1/1*zeta5^2") == -cyclo_root(2, 5)
    assert parse_scalar("zeta10^3") == cyclo_root(3, 10)
    assert parse_scalar("1/2 + 1/1*zeta5^1") == \
        cyclo_root(1, 5) + Fraction(1, 2)
    with pytest.raises(ValueError):
        parse_scalar("")
    with pytest.raises(ValueError):
        parse_scalar("zeta")
    with pytest.raises(ValueError):
        parse_scalar("1/0")


def test_normalize_folds_even_shift_scalar():
    one = Cyclotomic.one()
    raw = Identity("t", IdentityKind.CONSTANT, [
        IdentityTerm(one, [ThetaFactor(C(Fraction(1, 5), Fraction(11, 5)), 2)]),
        IdentityTerm(-one, [ThetaFactor(C(Fraction(1, 5), Fraction(1, 5)), 2)]),
    ])
    norm = normalize_identity(raw)
    chars = {f.char for t in norm.terms for f in t.factors}
    assert chars == {C(Fraction(1, 5), Fraction(1, 5))}
    # the folded scalar is exp(pi i /5)^2 = zeta5
    assert norm.terms[0].scalar == cyclo_root(1, 5)


def test_missing_field_is_value_error():
    with pytest.raises(ValueError):
        identity_from_dict({"id": "x", "kind": "constant"})
