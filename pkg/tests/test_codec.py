import json

import pytest

from core import codec
from core.errors import FormatError


class TestDumps:
    def test_canonical_layout(self, fixture):
        text = codec.dumps(fixture("G21_mixed"))
        assert text == ('{"k": 2, "l": 1, "period": 1, "edges": [\n'
                        '  {"m": 0, "n": 0, "dir": "H", "color": 1},\n'
                        '  {"m": 0, "n": 0, "dir": "V", "color": 2},\n'
                        '  {"m": 1, "n": 0, "dir": "H", "color": 1},\n'
                        '  {"m": 1, "n": 0, "dir": "V", "color": 2}\n'
                        ']}\n')

    def test_committed_fixture_is_canonical(self, store, fixture):
        with open(f"{store.directory}/G42_rays.json", encoding="utf-8") as f:
            assert codec.dumps(fixture("G42_rays")) == f.read()

    def test_round_trip(self, fixture):
        d = fixture("G42_rays")
        assert codec.loads(codec.dumps(d)) == d


class TestLoads:
    def doc(self, fixture):
        return json.loads(codec.dumps(fixture("G22_rays")))

    def test_rejects_invalid_json(self):
        with pytest.raises(FormatError):
            codec.loads("{not json")

    def test_rejects_missing_edges(self, fixture):
        doc = self.doc(fixture)
        doc["edges"].pop()
        with pytest.raises(FormatError):
            codec.from_dict(doc)

    def test_rejects_unsorted_edges(self, fixture):
        doc = self.doc(fixture)
        doc["edges"][0], doc["edges"][1] = doc["edges"][1], doc["edges"][0]
        with pytest.raises(FormatError):
            codec.from_dict(doc)

    def test_rejects_bad_color(self, fixture):
        doc = self.doc(fixture)
        doc["edges"][0]["color"] = 3
        with pytest.raises(FormatError):
            codec.from_dict(doc)

    @pytest.mark.parametrize("key,convert", [
        ("m", float), ("m", bool), ("n", str), ("color", float), ("color", str), ("color", lambda c: c == 1),
    ])
    def test_rejects_non_integer_fields(self, fixture, key, convert):
        doc = self.doc(fixture)
        doc["edges"][0][key] = convert(doc["edges"][0][key])
        with pytest.raises(FormatError):
            codec.from_dict(doc)

    def test_rejects_fractional_header(self, fixture):
        doc = self.doc(fixture)
        doc["k"] = 2.0
        with pytest.raises(FormatError):
            codec.from_dict(doc)

    def test_read_missing_file(self, tmp_path):
        with pytest.raises(FormatError):
            codec.read(str(tmp_path / "missing.json"))

    def test_write_then_read(self, tmp_path, fixture):
        path = str(tmp_path / "out.json")
        codec.write(path, fixture("G40_rays"))
        assert codec.read(path) == fixture("G40_rays")
