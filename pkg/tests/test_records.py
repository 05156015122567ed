import csv
import io
import json

import pytest

from conftest import random_polygon
from polygrow.core.ehrhart import EhrhartTuple
from polygrow.core.geometry import make_polygon
from polygrow.core.growing_engine import classify
from polygrow.core.normal_form import canonical_form, key_to_string
from polygrow.io.records import (
    PolygonRecord,
    RecordReader,
    RunManifest,
    describe_profile,
    parse_record,
    plot_rows,
    serialize_record,
    write_plot_rows,
    write_quasi_polynomials,
    write_records,
    write_tuples,
)
from polygrow.utils.errors import RecordFormatError


class TestRecordLines:
    def test_serialized_fields(self, t21):
        data = json.loads(serialize_record(PolygonRecord.from_polygon(t21)))
        assert data == {'r': 2, 'verts': [[0, 0], [1, 0], [0, 1]], 'size': 1, 'r_size': 3,
                        'b1': 1, 'i1': 0, 'b2': 3, 'i2': 0}

    def test_profile_is_optional(self, unit_triangle):
        data = json.loads(serialize_record(PolygonRecord.from_polygon(unit_triangle, with_profile=False)))
        assert data == {'r': 1, 'verts': [[0, 0], [1, 0], [0, 1]]}

    def test_lattice_profile_has_no_tuple(self, unit_triangle):
        assert describe_profile(unit_triangle) == {'size': 3, 'r_size': 3}

    def test_parse_restores_polygon(self, half_square):
        line = serialize_record(PolygonRecord.from_polygon(half_square))
        assert parse_record(line).to_polygon() == half_square

    def test_random_polygons_survive_serialization(self, rng):
        for _ in range(500):
            polygon = random_polygon(rng, rng.randint(1, 3), 7, points=rng.randint(3, 8))
            record = parse_record(serialize_record(PolygonRecord.from_polygon(polygon)))
            assert record.to_polygon() == polygon
            assert [tuple(v) for v in record.verts] == list(polygon.vertices)

    def test_vertices_need_not_be_ordered(self):
        record = parse_record('{"r": 2, "verts": [[0, 1], [1, 0], [0, 0]]}')
        assert record.to_polygon() == make_polygon(2, [(0, 0), (1, 0), (0, 1)])


class TestRecordErrors:
    @pytest.mark.parametrize("line", [
        'not json',
        '[1, 2, 3]',
        '{"r": 0, "verts": [[0, 0], [1, 0], [0, 1]]}',
        '{"r": true, "verts": [[0, 0], [1, 0], [0, 1]]}',
        '{"r": 2, "verts": [[0, 0], [1, 0]]}',
        '{"r": 2, "verts": [[0, 0], [1, 0], [0, 1.5]]}',
        '{"r": 2, "verts": [[0, 0], [1, 1], [2, 2]]}',
        '{"r": 2, "verts": [[0, 0], [1, 0], [0, 1]], "size": -1}',
    ])
    def test_malformed(self, line):
        with pytest.raises(RecordFormatError):
            parse_record(line)

    def test_line_number_in_message(self):
        with pytest.raises(RecordFormatError) as info:
            parse_record('{}', 7)
        assert info.value.line_number == 7
        assert str(info.value).startswith("line 7:")

    def test_profile_mismatch(self):
        line = '{"r": 2, "verts": [[0, 0], [1, 0], [0, 1]], "b2": 4}'
        with pytest.raises(RecordFormatError):
            parse_record(line)
        assert parse_record(line, check_profile=False).profile == {'b2': 4}


class TestReader:
    def test_reads_in_file_order(self, tmp_path, t21, half_square):
        path = tmp_path / "data.jsonl"
        with open(path, 'w', encoding='utf-8') as stream:
            assert write_records(stream, [half_square, t21]) == 2
            stream.write("\n")
        loaded = RecordReader().read_polygons(str(path))
        assert [polygon for _, polygon in loaded] == [half_square, t21]
        assert loaded[1][0] == canonical_form(t21)

    def test_bad_line_is_reported(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text('{"r": 2, "verts": [[0, 0], [1, 0], [0, 1]]}\n{"r": 2}\n', encoding='utf-8')
        with pytest.raises(RecordFormatError) as info:
            RecordReader().read_polygons(str(path))
        assert info.value.line_number == 2

    def test_invalid_utf8_is_a_format_error(self, tmp_path):
        path = tmp_path / "binary.jsonl"
        path.write_bytes(b'{"r": 2, "verts": [[0, 0], [1, 0], [0, 1]]}\n\xff\xfe\n')
        with pytest.raises(RecordFormatError) as info:
            RecordReader().read_polygons(str(path))
        assert info.value.line_number == 2
        assert "invalid UTF-8" in str(info.value)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            RecordReader().read_polygons(str(tmp_path / "absent.jsonl"))


class TestTextFormats:
    def test_tuples(self, t21):
        stream = io.StringIO()
        keyed = [(canonical_form(t21), t21)]
        assert write_tuples(stream, keyed) == 1
        key = key_to_string(canonical_form(t21))
        assert stream.getvalue().splitlines()[1] == f'"{key}",1,0,3,0'
        rows = list(csv.reader(io.StringIO(stream.getvalue())))
        assert rows == [['key', 'b1', 'i1', 'b2', 'i2'], [key, '1', '0', '3', '0']]

    def test_empty_input_has_no_header(self):
        stream = io.StringIO()
        assert write_tuples(stream, []) == 0
        assert write_quasi_polynomials(stream, []) == 0
        assert stream.getvalue() == ""

    def test_quasi_polynomials(self, half_square):
        stream = io.StringIO()
        assert write_quasi_polynomials(stream, [(canonical_form(half_square), half_square)]) == 2
        lines = stream.getvalue().splitlines()
        assert lines[0] == "key,i,a2,a1,a0"
        assert lines[1].endswith(",0,1/4,1,1")
        assert lines[2].endswith(",1,1/4,1/2,1/4")

    def test_plot_rows(self):
        tuples = [EhrhartTuple(1, 0, 4, 0), EhrhartTuple(1, 0, 3, 0), EhrhartTuple(1, 0, 3, 0),
                  EhrhartTuple(2, 0, 5, 1), EhrhartTuple(1, 1, 3, 2)]
        rows = plot_rows(tuples, 1, 0)
        assert rows == [(3, 0), (4, 0)]
        stream = io.StringIO()
        assert write_plot_rows(stream, rows) == 2
        assert stream.getvalue() == "3 0\n4 0\n"

    def test_no_plot_rows(self):
        assert plot_rows([EhrhartTuple(1, 0, 3, 0)], 5, 5) == []


class TestManifest:
    def test_from_dataset(self):
        dataset = classify(1, 4, threads=1)
        manifest = RunManifest.from_dataset('enumerate', {'r': 1, 'k': 4}, dataset)
        data = manifest.to_dict()
        assert data['total'] == 3
        assert data['parameters'] == {'r': 1, 'k': 4}
        assert data['dataset_sha256'] is None
        assert set(data) == {'command', 'parameters', 'total', 'strata', 'wall_clock',
                             'dedup_statistics', 'dataset_path', 'dataset_sha256'}
