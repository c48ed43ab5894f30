from fractions import Fraction

import pytest

from tptri.arith import Q
from tptri.errors import SpecError
from tptri.qanalogue import QCoefficientSpec, build_q_recursive
from tptri.specfile import load_spec, parse_spec, resolve_spec
from tptri.triangles import CoefficientSpec, build_recursive, get_spec

BELL_TOML = """
name = "bell-file"
r = 1
s = "k + 1"
t = { slope = 1 }
golden = [[1], [1, 1], [2, 3, 1]]
"""


def test_expression_and_affine_forms():
    spec = parse_spec(BELL_TOML)
    assert isinstance(spec, CoefficientSpec) and spec.name == "bell-file"
    assert build_recursive(spec, 6).rows == build_recursive(get_spec("bell"), 6).rows
    assert spec.golden[2] == (2, 3, 1)


def test_explicit_lists_with_fractions():
    spec = parse_spec('r = [1, 1]\ns = ["1/2", 2, 2]\nt = [0, "3/2"]')
    tri = build_recursive(spec, 2)
    assert tri.entry(1, 0) == Fraction(1, 2)
    assert tri.entry(2, 0) == Fraction(1, 4)


def test_q_kind():
    spec = parse_spec('kind = "q"\nr = 1\ns = "1 + q"\nt = ["q", "q", "q^2"]')
    assert isinstance(spec, QCoefficientSpec)
    tri = build_q_recursive(spec, 2)
    assert tri.entry(2, 0) == (1 + Q) ** 2 + Q


def test_load_from_path(tmp_path):
    path = tmp_path / "mybell.toml"
    path.write_text(BELL_TOML.replace('name = "bell-file"\n', ""))
    spec = load_spec(path)
    assert spec.name == "mybell"
    assert resolve_spec(str(path)).name == "mybell"


@pytest.mark.parametrize("text", [
    "r = 1\ns = 1",                        # missing t
    "r = 1\ns = 1\nt = 0\nextra = 2",      # unknown key
    "r = 1.5\ns = 1\nt = 0",               # float
    "r = 1\ns = 'k +'\nt = 0",             # bad expression
    "r = 1\ns = 1\nt = 0\nkind = 'x'",     # bad kind
    "r = [",                               # bad toml
])
def test_malformed(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_resolve_unknown_name():
    with pytest.raises(SpecError):
        resolve_spec("no-such-triangle")
    with pytest.raises(SpecError):
        resolve_spec("missing.toml")
