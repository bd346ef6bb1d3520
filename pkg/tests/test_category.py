import pytest

from functorhh import fixtures as fx
from functorhh.category import ValidationError, presentation_to_raw, validate_presentation
from functorhh.linalg import Field

QQ = Field()


def test_fixture_categories_validate():
    for cat in (fx.trivial_category(), fx.c2_category(), fx.c2_category(super_sign=True),
                fx.group_algebra_category(), fx.c2_category(Field(3), True)):
        assert cat.violations() == []


def test_broken_symmetry_names_axiom_and_witness():
    raw = presentation_to_raw(fx.c2_category())
    raw["symmetry"] = {"(g,g)": {"id_e": 2}}
    with pytest.raises(ValidationError) as exc:
        validate_presentation(raw)
    msgs = [str(v) for v in exc.value.violations]
    assert any(m.startswith("symmetry involution failed at (g,g)") for m in msgs)


def test_super_symmetry_is_minus_identity():
    cat = fx.c2_category(super_sign=True)
    s = cat.symmetry("g", "g")
    assert s == cat.identity("e").scale(-1)
    assert cat.compose(s, s) == cat.identity("e")


def test_basic_morphism_operations():
    x1 = fx.trivial_category()
    i = x1.identity("1")
    assert x1.compose(i, i) == i
    c2 = fx.c2_category()
    assert c2.tensor(c2.identity("g"), c2.identity("g")) == c2.identity("e")
    assert c2.tensor_obj("g", "g") == "e"
    xk = fx.group_algebra_category()
    t = xk.basis_morphism("t")
    assert xk.compose(t, t) == xk.identity("1")


def test_object_monoid_must_be_unital():
    raw = presentation_to_raw(fx.c2_category())
    raw["tensor"] = [["e", "e", "e"], ["e", "g", "e"], ["g", "e", "g"], ["g", "g", "e"]]
    with pytest.raises(ValidationError):
        validate_presentation(raw)


def test_round_trip_through_raw():
    cat = fx.group_algebra_category()
    again = validate_presentation(presentation_to_raw(cat))
    assert again.objects == cat.objects
    assert presentation_to_raw(again) == presentation_to_raw(cat)


def test_super_sign_over_gf2_coincides_with_plain():
    assert fx.c2_category(Field(2), True).symmetry("g", "g") == fx.c2_category(Field(2)).symmetry("g", "g")
