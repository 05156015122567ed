"""
Polygon Records
Reads and writes PolygonRecord JSON Lines plus the tuple, quasi-polynomial
and plot-data text formats
"""

import csv
import json
from dataclasses import dataclass, field
from typing import Any, BinaryIO, Dict, Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple

from polygrow.core.ehrhart import EhrhartTuple, ehrhart_tuple, quasi_polynomial
from polygrow.core.geometry import RationalPolygon, make_polygon, point_profile
from polygrow.core.normal_form import CanonicalKey, canonical_form, key_to_string
from polygrow.utils.errors import PolyGrowError, RecordFormatError
from polygrow.utils.logger import Logger

PROFILE_FIELDS = ('size', 'r_size')
TUPLE_FIELDS = ('b1', 'i1', 'b2', 'i2')


@dataclass
class PolygonRecord:
    r: int
    verts: List[Tuple[int, int]]
    profile: Dict[str, int] = field(default_factory=dict)

    @classmethod
    def from_polygon(cls, polygon: RationalPolygon, with_profile: bool = True) -> 'PolygonRecord':
        profile: Dict[str, int] = {}
        if with_profile:
            profile = describe_profile(polygon)
        return cls(polygon.denominator, [tuple(v) for v in polygon.vertices], profile)

    def to_polygon(self) -> RationalPolygon:
        return make_polygon(self.r, self.verts)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'r': self.r, 'verts': [list(v) for v in self.verts]}
        for name in PROFILE_FIELDS + TUPLE_FIELDS:
            if name in self.profile:
                data[name] = self.profile[name]
        return data


def describe_profile(polygon: RationalPolygon) -> Dict[str, int]:
    """size and r_size, plus the Ehrhart tuple when r = 2"""
    profile = point_profile(polygon)
    described = {'size': profile.size, 'r_size': profile.r_size}
    if polygon.denominator == 2:
        described.update(ehrhart_tuple(polygon)._asdict())
    return described


def serialize_record(record: PolygonRecord) -> str:
    return json.dumps(record.to_dict())


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def parse_record(line: str, line_number: Optional[int] = None, check_profile: bool = True) -> PolygonRecord:
    """Parse one JSON line, validating types, geometry and any stored profile"""
    try:
        data = json.loads(line)
    except json.JSONDecodeError as e:
        raise RecordFormatError(f"invalid JSON: {e.msg}", line_number)
    if not isinstance(data, dict):
        raise RecordFormatError("record must be a JSON object", line_number)

    r = data.get('r')
    if not _is_int(r) or r < 1:
        raise RecordFormatError(f"'r' must be a positive integer, got {r!r}", line_number)
    verts = data.get('verts')
    if not isinstance(verts, list) or len(verts) < 3:
        raise RecordFormatError("'verts' must list at least three vertices", line_number)
    pairs = []
    for vertex in verts:
        if not isinstance(vertex, list) or len(vertex) != 2 or not all(_is_int(c) for c in vertex):
            raise RecordFormatError(f"vertex {vertex!r} is not an integer pair", line_number)
        pairs.append((vertex[0], vertex[1]))

    profile = {}
    for name in PROFILE_FIELDS + TUPLE_FIELDS:
        if name in data:
            if not _is_int(data[name]) or data[name] < 0:
                raise RecordFormatError(f"'{name}' must be a nonnegative integer", line_number)
            profile[name] = data[name]

    record = PolygonRecord(r, pairs, profile)
    try:
        polygon = record.to_polygon()
    except PolyGrowError as e:
        raise RecordFormatError(str(e), line_number)

    if check_profile and profile:
        computed = describe_profile(polygon)
        for name, value in profile.items():
            if name in computed and computed[name] != value:
                raise RecordFormatError(
                    f"stored {name}={value} disagrees with computed {computed[name]}", line_number
                )
    return record


class RecordReader:
    def __init__(self, check_profile: bool = True):
        """Initialize the JSON Lines reader"""
        self.check_profile = check_profile
        self.logger = Logger()

    def iter_records(self, stream: BinaryIO) -> Iterator[Tuple[int, PolygonRecord]]:
        for line_number, raw in enumerate(stream, start=1):
            try:
                line = raw.decode('utf-8')
            except UnicodeDecodeError as e:
                raise RecordFormatError(f"invalid UTF-8: {e.reason}", line_number)
            if not line.strip():
                continue
            yield line_number, parse_record(line, line_number, self.check_profile)

    def read_polygons(self, path: str) -> List[Tuple[CanonicalKey, RationalPolygon]]:
        """Load a dataset file as (canonical key, polygon) pairs in file order"""
        try:
            with open(path, 'rb') as file:
                loaded = []
                for _, record in self.iter_records(file):
                    polygon = record.to_polygon()
                    loaded.append((canonical_form(polygon), polygon))
            self.logger.info(f"Read {len(loaded)} records from: {path}")
            return loaded
        except RecordFormatError as e:
            self.logger.error(f"Malformed record in {path}: {str(e)}")
            raise


def write_records(stream: TextIO, polygons: Iterable[RationalPolygon], with_profile: bool = True) -> int:
    count = 0
    for polygon in polygons:
        stream.write(serialize_record(PolygonRecord.from_polygon(polygon, with_profile)) + "\n")
        count += 1
    return count


def write_tuples(stream: TextIO, keyed: Sequence[Tuple[CanonicalKey, RationalPolygon]]) -> int:
    if not keyed:
        return 0
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(('key',) + TUPLE_FIELDS)
    for key, polygon in keyed:
        writer.writerow((key_to_string(key),) + tuple(ehrhart_tuple(polygon)))
    return len(keyed)


def write_quasi_polynomials(stream: TextIO, keyed: Sequence[Tuple[CanonicalKey, RationalPolygon]]) -> int:
    if not keyed:
        return 0
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(('key', 'i', 'a2', 'a1', 'a0'))
    rows = 0
    for key, polygon in keyed:
        for row in quasi_polynomial(polygon).rows():
            writer.writerow((key_to_string(key),) + row)
            rows += 1
    return rows


def plot_rows(tuples: Iterable[EhrhartTuple], b1: int, i1: int) -> List[Tuple[int, int]]:
    """Distinct (b2, i2) of the tuples with b(P) = b1 and i(P) = i1, sorted"""
    return sorted({(t.b2, t.i2) for t in tuples if t.b1 == b1 and t.i1 == i1})


def write_plot_rows(stream: TextIO, rows: Iterable[Tuple[int, int]]) -> int:
    count = 0
    for b2, i2 in rows:
        stream.write(f"{b2} {i2}\n")
        count += 1
    return count


@dataclass
class RunManifest:
    command: str
    parameters: Dict[str, Any]
    total: int
    strata: List[Dict[str, int]] = field(default_factory=list)
    wall_clock: float = 0.0
    dedup_statistics: Dict[str, int] = field(default_factory=dict)
    dataset_path: Optional[str] = None
    dataset_sha256: Optional[str] = None

    @classmethod
    def from_dataset(cls, command: str, parameters: Dict[str, Any], dataset) -> 'RunManifest':
        metadata = dataset.metadata
        return cls(
            command=command,
            parameters=parameters,
            total=len(dataset),
            strata=list(metadata.get('strata', [])),
            wall_clock=round(metadata.get('duration', 0.0), 3),
            dedup_statistics=dict(metadata.get('statistics', {})),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'parameters': self.parameters,
            'total': self.total,
            'strata': self.strata,
            'wall_clock': self.wall_clock,
            'dedup_statistics': self.dedup_statistics,
            'dataset_path': self.dataset_path,
            'dataset_sha256': self.dataset_sha256,
        }
