import pytest

from qcweights.code import GEN
from qcweights.config import parse_config
from qcweights.errors import ConfigSyntaxError, InvalidInputError
from qcweights.fields import build_field


def test_example_file(corpus):
    parsed = parse_config((corpus / "example1.qcc").read_text())
    s = parsed.spec
    assert (s.q, s.m, s.l) == (2, 9, 2)
    (c,) = s.constituents
    assert c.coset_rep == 3 and c.rows == (((1,), GEN),)
    assert parsed.warnings == []


def test_every_corpus_file_parses(corpus):
    files = sorted(corpus.glob("*.qcc"))
    assert len(files) == 9
    for path in files:
        assert parse_config(path.read_text()).spec.constituents


def test_polynomial_entries():
    text = """
    code q=3 m=8 l=3   # trailing comment
    constituent coset=1
    row 1 + 2*x^3 + x | x^2 + 4 | G
    """
    (c,) = parse_config(text).spec.constituents
    assert c.rows[0] == ((1, 1, 0, 2), (1, 0, 1), GEN)


def test_repeated_terms_accumulate_and_zero_collapses():
    text = "code q=2 m=7 l=2\nconstituent coset=1\nrow x + x | 1 + 1\n"
    (c,) = parse_config(text).spec.constituents
    assert c.rows[0] == ((), ())


def test_w_coefficients():
    f = build_field(2, 2)
    w = f.tables.omega
    text = "code q=4 m=5 l=2\nconstituent coset=1\nrow w^1*x + w^0 | w^2\n"
    (c,) = parse_config(text).spec.constituents
    assert c.rows[0] == ((1, w), (f.mul(w, w),))
    with pytest.raises(ConfigSyntaxError, match="out of range"):
        parse_config("code q=4 m=5 l=2\nconstituent coset=1\nrow w^3 | 0\n")
    with pytest.raises(ConfigSyntaxError, match="non-prime"):
        parse_config("code q=5 m=4 l=2\nconstituent coset=1\nrow w^1 | 0\n")


def test_empty_constituent_list_warns():
    parsed = parse_config("code q=2 m=9 l=2\n")
    assert parsed.spec.constituents == ()
    assert "zero code" in parsed.warnings[0]


@pytest.mark.parametrize(
    "text,message,line",
    [
        ("code q=2 m=4 l=2\n", r"gcd\(m,q\) must be 1", 1),
        ("code q=2 m=9 l=1\n", "l=1", 1),
        ("code q=6 m=5 l=2\n", "prime power", 1),
        ("code q=2 m=9\n", "missing l", 1),
        ("code q=2 m=9 l=2 d=3\n", "unknown keyword 'd'", 1),
        ("code q=2 m=9 l=2\nfoo bar\n", "unknown keyword 'foo'", 2),
        ("code q=2 m=9 l=2\nrow 1 | g\n", "before any", 2),
        ("code q=2 m=9 l=2\nconstituent coset=3\nrow 1\n", "expected l=2", 3),
        ("code q=2 m=9 l=2\nconstituent coset=3\nrow 1 | x^9\n", "below m=9", 3),
        ("code q=2 m=9 l=2\nconstituent coset=3\nrow 1 | 3*y\n", "cannot parse", 3),
        ("code q=2 m=9 l=2\nconstituent coset=3\nrow 1 | g\nconstituent coset=6\nrow 1|g\n", "already used", 4),
        ("code q=2 m=9 l=2\nconstituent coset=3\n", "no rows", 2),
        ("code q=2 m=9 l=2\nconstituent coset=12\n", "outside", 2),
        ("# nothing\n", "missing 'code'", 1),
        ("row 1 | 1\n", "expected 'code", 1),
    ],
)
def test_errors_carry_positions(text, message, line):
    with pytest.raises(ConfigSyntaxError, match=message) as err:
        parse_config(text)
    assert err.value.line == line
    assert isinstance(err.value, InvalidInputError) and err.value.exit_code == 1


def test_column_points_at_bad_term():
    with pytest.raises(ConfigSyntaxError) as err:
        parse_config("code q=2 m=9 l=2\nconstituent coset=3\nrow 1 | 1 + x^^2\n")
    assert err.value.column == 13
