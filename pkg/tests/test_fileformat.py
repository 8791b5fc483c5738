import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zcset.family import ZcsFamily
from zcset.fileformat import (
    FormatError,
    family_from_json,
    family_to_json,
    parse_family,
    render_family,
)

from conftest import REFERENCE_ROWS


def test_render_reference_family(reference_family):
    fam = ZcsFamily(reference_family.flocks, claimed_Z=4)
    lines = render_family(fam).splitlines()
    assert lines[0] == "zcs-v1 q=6 M=6 N=4 L=6 Z=4"
    assert lines[1] == "set 0"
    assert lines[2:6] == REFERENCE_ROWS[0]
    assert len(lines) == 1 + 6 * 5


def test_parse_tolerates_blank_lines(reference_family):
    text = render_family(reference_family).replace("\nset", "\n\nset")
    assert parse_family(text).to_array().tolist() == reference_family.to_array().tolist()


@pytest.mark.parametrize(
    "text",
    [
        "",
        "zcs-v2 q=2 M=1 N=1 L=2\nset 0\n01\n",
        "zcs-v1 q=2 M=1 N=1\nset 0\n01\n",
        "zcs-v1 q=2 M=1 N=1 L=2 W=3\nset 0\n01\n",
        "zcs-v1 q=2 M=1 N=1 L=two\nset 0\n01\n",
        "zcs-v1 q=2 M=1 N=1 L=2\nset 0\n",
        "zcs-v1 q=2 M=1 N=1 L=2\nset 1\n01\n",
        "zcs-v1 q=2 M=1 N=1 L=2\nset 0\n012\n",
        "zcs-v1 q=2 M=1 N=1 L=2\nset 0\n02\n",
        "zcs-v1 q=2 M=1 N=1 L=2 Z=3\nset 0\n01\n",
        "zcs-v1 q=40 M=1 N=1 L=2\nset 0\n01\n",
        "zcs-v1 q=2 M=0 N=1 L=2\n",
    ],
)
def test_malformed(text):
    with pytest.raises(FormatError):
        parse_family(text)


@pytest.mark.parametrize(
    "doc",
    [
        "[1, 2]",
        "{not json",
        json.dumps({"q": 2}),
        json.dumps({"q": 2, "sets": [[[0, 1]], [[0]]]}),
        json.dumps({"q": 2, "M": 3, "sets": [[[0, 1]]]}),
        json.dumps({"q": 2, "sets": [[[0, 2]]]}),
    ],
)
def test_malformed_json(doc):
    with pytest.raises(FormatError):
        family_from_json(doc)


def test_json_layout(reference_family):
    doc = json.loads(family_to_json(ZcsFamily(reference_family.flocks, claimed_Z=4)))
    assert doc["sets"][0][0] == [0, 0, 0, 0, 0, 3]
    assert (doc["q"], doc["M"], doc["N"], doc["L"], doc["Z"]) == (6, 6, 4, 6, 4)


@st.composite
def families(draw):
    q = draw(st.integers(2, 36))
    M, N, L = draw(st.integers(1, 4)), draw(st.integers(1, 4)), draw(st.integers(1, 8))
    flat = draw(st.lists(st.integers(0, q - 1), min_size=M * N * L, max_size=M * N * L))
    Z = draw(st.none() | st.integers(1, L))
    return ZcsFamily.from_array(np.array(flat).reshape(M, N, L), q, claimed_Z=Z)


def _same(a, b):
    return a.q == b.q and a.claimed_Z == b.claimed_Z and a.to_array().tolist() == b.to_array().tolist()


@given(families())
def test_text_round_trip(fam):
    assert _same(parse_family(render_family(fam)), fam)


@given(families())
def test_json_round_trip(fam):
    assert _same(family_from_json(family_to_json(fam)), fam)
