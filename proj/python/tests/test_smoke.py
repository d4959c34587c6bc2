import pytest

import dicrit

XY = ["x", "y"]


def poly(expr):
    return {"vars": XY, "expr": expr}


def test_version_and_commands():
    assert dicrit.__version__
    table = dicrit.commands()
    assert "mono" in table and "pencil" in table
    assert "dicriticals" in table["pencil"]


def test_monomial_normality():
    assert dicrit.run("mono", "normal", {"vars": XY, "gens": [[2, 0], [0, 2]]})["normal"] is False
    assert dicrit.run("mono", "normal", {"vars": XY, "gens": [[2, 0], [1, 1], [0, 2]]})["normal"] is True


def test_cusp_pencil_has_one_sharp_dicritical():
    out = dicrit.run("pencil", "dicriticals", {"a": poly("y^2"), "b": poly("x^3")})
    assert out["dicritical_count"] == 1
    d = out["dicriticals"][0]
    assert d["weights"] == [2, 3]
    assert d["Va"] == d["Vb"] == 6
    assert d["class"] == "sharp"


def test_parse_error_is_typed():
    with pytest.raises(dicrit.DicritParseError) as info:
        dicrit.run("mono", "normal", {"vars": 2})
    assert info.value.payload["field"] == "vars"


def test_unknown_command():
    with pytest.raises(dicrit.DicritError):
        dicrit.run("nope", "", {})


def test_acceptance_all_pass():
    results = dicrit.acceptance()
    assert [r["id"] for r in results] == list(range(1, 10))
    assert all(r["pass"] for r in results), [r for r in results if not r["pass"]]
