import json

import pytest
from hypothesis import given

from linkmap import documents as docs
from linkmap.fixtures import BRAIDS, STACKS, TRIPLES
from linkmap.parsing import ParseError
from linkmap.theta import JKBlock, Stack

from strategies import stacks, triples


class TestRoundTrip:
    @given(triples())
    def test_triple(self, v):
        doc = docs.triple_to_doc(v)
        assert docs.triple_from_doc(json.loads(docs.dumps(doc))) == v

    @given(stacks())
    def test_stack(self, st):
        doc = docs.stack_to_doc(st)
        assert docs.stack_from_doc(json.loads(docs.dumps(doc))) == st

    @given(triples())
    def test_dumps_is_canonical(self, v):
        text = docs.dumps(docs.triple_to_doc(v))
        assert docs.dumps(json.loads(text)) == text


class TestFixtures:
    @pytest.mark.parametrize("name", sorted(TRIPLES))
    def test_triple_files(self, name):
        assert docs.load_triple(f"@{name}.triple") == TRIPLES[name]

    @pytest.mark.parametrize("name", sorted(STACKS))
    def test_stack_files(self, name):
        assert docs.load_stack(f"@{name}.stack") == STACKS[name]()

    def test_braids_file(self):
        assert docs.read_json("@braids.json") == BRAIDS

    def test_real_path(self, tmp_path):
        p = tmp_path / "v.triple"
        p.write_text(docs.dumps(docs.triple_to_doc(TRIPLES["xjx"])))
        assert docs.load_triple(p) == TRIPLES["xjx"]


class TestInputs:
    def test_expression_components(self):
        v = docs.triple_from_doc({"gx": "z*(s-1) + z^-1*(s^-1-1)", "gz": "x*(1-u) + x^-1*(1-u^-1)"})
        assert v == TRIPLES["xjx"]

    def test_mirror_flag(self):
        block = {"split": "y", "kirk1": "t + t^-1 - 2", "kirk2": "2 - t - t^-1"}
        st = docs.stack_from_doc([{"jk": block, "mirror": True}])
        assert st == Stack.from_items([JKBlock.parse("y", "t + t^-1 - 2", "2 - t - t^-1").mirror()])

    @pytest.mark.parametrize("doc", [
        [],
        {"gw": []},
        {"gx": 3},
        {"gx": [{"i": 0, "j": 0}]},
        {"gx": [{"i": "a", "j": 0, "k": 0, "coeff": 1}]},
        {"gx": "q + 1"},
    ])
    def test_bad_triple(self, doc):
        with pytest.raises(ParseError):
            docs.triple_from_doc(doc)

    @pytest.mark.parametrize("doc", [
        {},
        [],
        [{"braid": "s1"}],
        [{"jk": {"kirk1": "0"}}],
        [{"jk": {"split": "y", "kirk1": "t", "kirk2": "0"}}],
        [{"jk": {"split": "w", "kirk1": "0", "kirk2": "0"}}],
        [{"jk": {"split": "y"}, "braid": "s1"}],
        [{"jk": {"split": "y"}}, {"braid": "s9"}, {"jk": {"split": "y"}}],
        [{"jk": {"split": "y"}}, {"braid": "s1"}],
    ])
    def test_bad_stack(self, doc):
        with pytest.raises(ParseError):
            docs.stack_from_doc(doc)

    def test_missing_and_invalid_files(self, tmp_path):
        with pytest.raises(ParseError):
            docs.load_triple(tmp_path / "absent.triple")
        bad = tmp_path / "bad.triple"
        bad.write_text("{not json")
        with pytest.raises(ParseError):
            docs.load_triple(bad)
        with pytest.raises(ParseError):
            docs.load_triple("@absent.triple")
