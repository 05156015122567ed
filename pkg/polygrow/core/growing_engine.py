"""
Growing Engine
Runs the stratified growing loop that classifies the finitely growable
polygons of fixed denominator and size
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from polygrow.core.geometry import RationalPolygon, count_points, r_size
from polygrow.core.growth import grow_keyed, is_infinitely_growable
from polygrow.core.minimal_polygons import (
    ZERO_INTERIOR_TERMINAL,
    lattice_polygons_of_size,
    minimal_polygons,
    zero_interior_seeds,
)
from polygrow.core.normal_form import CanonicalKey, canonical_form, polygon_from_key
from polygrow.utils.errors import ContractError
from polygrow.utils.logger import Logger

Keyed = Tuple[CanonicalKey, RationalPolygon]


@dataclass
class GrowthFrontier:
    """One stratum of the growing loop, keyed by canonical form"""
    stratum_r_size: int
    to_grow_inf: Dict[CanonicalKey, RationalPolygon] = field(default_factory=dict)
    to_grow_fin: Dict[CanonicalKey, RationalPolygon] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not self.to_grow_inf and not self.to_grow_fin

    def add(self, key: CanonicalKey, polygon: RationalPolygon, infinite: bool) -> bool:
        """Insert unless the key is already present; True if inserted"""
        if key in self.to_grow_inf or key in self.to_grow_fin:
            return False
        target = self.to_grow_inf if infinite else self.to_grow_fin
        target[key] = polygon
        return True


@dataclass(frozen=True)
class DatasetEntry:
    polygon: RationalPolygon
    key: CanonicalKey
    r_size: int
    seed_id: int


@dataclass
class ClassificationDataset:
    r: int
    k: Optional[int]
    entries: List[DatasetEntry] = field(default_factory=list)
    zero_interior: bool = False
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def polygons(self) -> List[RationalPolygon]:
        return [entry.polygon for entry in self.entries]

    @property
    def keys(self) -> List[CanonicalKey]:
        return [entry.key for entry in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class _SeedRun:
    """Seeds grown jointly with one shared dedup set per stratum"""
    seeds: List[Tuple[int, RationalPolygon, int]]


def _grow_task(task: Tuple[RationalPolygon, int, bool, Dict[str, Any]]) -> Tuple[List[Keyed], List[Keyed], int]:
    polygon, k, parent_infinite, options = task
    infinite, finite = grow_keyed(polygon, k, parent_infinite=parent_infinite, **options)
    return infinite, finite, len(infinite) + len(finite)


class GrowingEngine:
    def __init__(self, config: Optional[Dict[str, Any]] = None, threads: Optional[int] = None):
        """Initialize the growing engine from the enumeration_config section"""
        self.config = config or {}
        self.logger = Logger()
        enumeration_config = self.config.get('enumeration_config', {})
        requested = threads if threads is not None else enumeration_config.get('threads', 0)
        self.threads = requested or os.cpu_count() or 1
        self.parallel_threshold = enumeration_config.get('parallel_threshold', 64)
        self.collinear_cap = enumeration_config.get('zero_interior_collinear_cap', 8)
        self.strata_log: List[Dict[str, int]] = []
        self.statistics: Dict[str, int] = {}

    def classify(self, r: int, k: int) -> ClassificationDataset:
        """Complete set of finitely growable polygons of denominator r and size k"""
        if r < 1 or k < 0:
            raise ContractError(f"invalid parameters r={r}, k={k}")
        if r == 1:
            return self._classify_lattice(k)

        start = time.time()
        run_name = f"classify r={r} k={k}"
        self.logger.log_run_start(run_name, {'r': r, 'k': k, 'threads': self.threads})
        self._reset()

        seeds = minimal_polygons(r, k)
        indexed = [(seed_id, seed, k) for seed_id, seed in enumerate(seeds)]
        if k == 0:
            runs = [_SeedRun(indexed)]
        else:
            runs = [_SeedRun([item]) for item in indexed]

        final: Dict[CanonicalKey, DatasetEntry] = {}
        for run in runs:
            self._run(run, final, {})

        dataset = self._finish(r, k, final, start, run_name, seeds=len(seeds))
        return dataset

    def classify_zero_interior(self) -> ClassificationDataset:
        """Finitely growable denominator-2 polygons without interior lattice points"""
        start = time.time()
        run_name = "classify zero interior"
        self.logger.log_run_start(run_name, {'r': 2, 'collinear_cap': self.collinear_cap})
        self._reset()

        options = {'zero_interior': True, 'collinear_cap': self.collinear_cap}
        final: Dict[CanonicalKey, DatasetEntry] = {}
        seeds = zero_interior_seeds()
        for seed_id, seed in enumerate(seeds):
            boundary, interior = count_points(seed.vertices, seed.denominator)
            size = boundary + interior
            if seed.vertices == ZERO_INTERIOR_TERMINAL:
                key = canonical_form(seed)
                final.setdefault(key, DatasetEntry(polygon_from_key(key), key, r_size(seed), seed_id))
                continue
            self._run(_SeedRun([(seed_id, seed, size)]), final, options)

        dataset = self._finish(2, None, final, start, run_name, seeds=len(seeds))
        dataset.zero_interior = True
        return dataset

    def _classify_lattice(self, k: int) -> ClassificationDataset:
        if k < 3:
            raise ContractError(f"lattice polygons have at least 3 lattice points, got k={k}")
        start = time.time()
        run_name = f"classify r=1 k={k}"
        self.logger.log_run_start(run_name, {'r': 1, 'k': k})
        self._reset()
        final: Dict[CanonicalKey, DatasetEntry] = {}
        for polygon in lattice_polygons_of_size(k):
            key = canonical_form(polygon)
            final[key] = DatasetEntry(polygon, key, r_size(polygon), 0)
        return self._finish(1, k, final, start, run_name, seeds=1)

    def _reset(self):
        self.strata_log = []
        self.statistics = {'children_generated': 0, 'duplicates_merged': 0, 'strata': 0}

    def _run(self, run: _SeedRun, final: Dict[CanonicalKey, DatasetEntry], options: Dict[str, Any]):
        """Grow one group of seeds until both frontier sets are empty"""
        frontier = GrowthFrontier(stratum_r_size=r_size(run.seeds[0][1]))
        seed_of: Dict[CanonicalKey, int] = {}
        sizes = {seed_id: k for seed_id, _, k in run.seeds}
        k = run.seeds[0][2]
        if len(set(sizes.values())) != 1:
            raise ContractError("seeds grown jointly must share their size")

        for seed_id, seed, _ in run.seeds:
            key = canonical_form(seed)
            infinite = is_infinitely_growable(seed)
            if frontier.add(key, polygon_from_key(key), infinite):
                seed_of[key] = seed_id

        while not frontier.is_empty():
            for key in sorted(frontier.to_grow_fin):
                if key not in final:
                    final[key] = DatasetEntry(frontier.to_grow_fin[key], key, frontier.stratum_r_size, seed_of[key])

            following = GrowthFrontier(stratum_r_size=frontier.stratum_r_size + 1)
            next_seed_of: Dict[CanonicalKey, int] = {}
            tasks = [(key, polygon, True) for key, polygon in sorted(frontier.to_grow_inf.items())]
            tasks += [(key, polygon, False) for key, polygon in sorted(frontier.to_grow_fin.items())]

            for (parent_key, _, _), (infinite, finite, generated) in zip(tasks, self._expand(tasks, k, options)):
                self.statistics['children_generated'] += generated
                for child_key, child in infinite:
                    if following.add(child_key, child, True):
                        next_seed_of[child_key] = seed_of[parent_key]
                    else:
                        self.statistics['duplicates_merged'] += 1
                for child_key, child in finite:
                    if following.add(child_key, child, False):
                        next_seed_of[child_key] = seed_of[parent_key]
                    else:
                        self.statistics['duplicates_merged'] += 1

            self.statistics['strata'] += 1
            self.strata_log.append({
                'r_size': frontier.stratum_r_size,
                'infinite': len(frontier.to_grow_inf),
                'finite': len(frontier.to_grow_fin),
            })
            self.logger.log_stratum(frontier.stratum_r_size, len(frontier.to_grow_inf),
                                    len(frontier.to_grow_fin), len(final))
            frontier, seed_of = following, next_seed_of

    def _expand(self, tasks: Sequence[Tuple[CanonicalKey, RationalPolygon, bool]], k: int,
                options: Dict[str, Any]) -> List[Tuple[List[Keyed], List[Keyed], int]]:
        """Grow every frontier member, in a process pool for large strata"""
        work = [(polygon, k, infinite, options) for _, polygon, infinite in tasks]
        if self.threads <= 1 or len(work) < self.parallel_threshold:
            return [_grow_task(item) for item in work]
        chunksize = max(1, len(work) // (self.threads * 8))
        with ProcessPoolExecutor(max_workers=self.threads) as executor:
            return list(executor.map(_grow_task, work, chunksize=chunksize))

    def _finish(self, r: int, k: Optional[int], final: Dict[CanonicalKey, DatasetEntry], start: float,
                run_name: str, seeds: int) -> ClassificationDataset:
        entries = sorted(final.values(), key=lambda entry: (entry.r_size, entry.key))
        duration = time.time() - start
        dataset = ClassificationDataset(r=r, k=k, entries=entries)
        dataset.metadata = {
            'seeds': seeds,
            'strata': list(self.strata_log),
            'statistics': dict(self.statistics),
            'duration': duration,
            'threads': self.threads,
        }
        self.logger.log_run_end(run_name, len(entries), duration)
        return dataset


def classify(r: int, k: int, threads: Optional[int] = None) -> ClassificationDataset:
    return GrowingEngine(threads=threads).classify(r, k)


def classify_zero_interior(threads: Optional[int] = None) -> ClassificationDataset:
    return GrowingEngine(threads=threads).classify_zero_interior()
